#include "fuzzint/io.hpp"

#include <fstream>
#include <sstream>

#include "fuzzint/error.hpp"

namespace fuzzint::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) parse_error(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) parse_error(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const Error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json resolve(const json& j, Context& ctx) {
  if (!j.is_string()) return j;
  std::filesystem::path p = j.get<std::string>();
  if (p.is_relative()) p = ctx.base / p;
  json out = read_json(p);
  ctx.base = p.parent_path();
  return out;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const FiniteLattice> lattice_from_json(const json& in, Context ctx) {
  const json j = resolve(in, ctx);
  return guarded("lattice", [&] {
    auto names = string_list(field(j, "elements"), "elements");
    std::vector<FiniteLattice::OrderPair> pairs;
    for (const auto& p : field(j, "leq")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        parse_error("leq entries must be [a, b] pairs of element names");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    const bool closure = j.value("closure", false);
    return std::make_shared<const FiniteLattice>(
        FiniteLattice::from_relation(std::move(names), pairs, closure));
  });
}

json to_json(const FiniteLattice& l) {
  json leq = json::array();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem c : l.upper_covers(a)) leq.push_back({l.name(a), l.name(c)});
  return json{{"elements", l.names()}, {"leq", leq}, {"closure", true}};
}

namespace {

std::optional<GlMonoid> builtin_from_label(const std::string& label) {
  const auto dash = label.rfind('-');
  if (dash == std::string::npos) return std::nullopt;
  const std::string kind = label.substr(0, dash);
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(label.substr(dash + 1), &pos);
    if (pos != label.size() - dash - 1) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (kind == "godel") return builtin_chain(ChainKind::godel, n);
  if (kind == "lukasiewicz") return builtin_chain(ChainKind::lukasiewicz, n);
  return std::nullopt;
}

}  // namespace

MonoidDef monoid_from_json(const json& in, Context ctx) {
  if (in.is_string() && !in.get<std::string>().ends_with(".json")) {
    if (auto g = builtin_from_label(in.get<std::string>())) return {g->algebra_ptr(), *g};
    parse_error("unknown builtin algebra '" + in.get<std::string>() + "'");
  }
  const json j = resolve(in, ctx);
  return guarded("monoid", [&]() -> MonoidDef {
    if (j.contains("builtin")) {
      const std::string kind = field(j, "builtin").get<std::string>();
      const auto n = field(j, "n").get<std::size_t>();
      ChainKind k{};
      if (kind == "godel")
        k = ChainKind::godel;
      else if (kind == "lukasiewicz")
        k = ChainKind::lukasiewicz;
      else
        parse_error("unknown builtin '" + kind + "'");
      GlMonoid g = builtin_chain(k, n);
      return {g.algebra_ptr(), g};
    }
    auto lattice = lattice_from_json(field(j, "lattice"), ctx);
    const std::string label = j.value("label", std::string{});
    const json& t = field(j, "tensor");
    std::shared_ptr<const Cqml> cqml;
    if (t.is_string()) {
      const std::string s = t.get<std::string>();
      if (s == "meet")
        cqml = std::make_shared<const Cqml>(Cqml::with_meet(lattice, label));
      else if (s == "join")
        cqml = std::make_shared<const Cqml>(Cqml::with_join(lattice, label));
      else
        parse_error("tensor must be \"meet\", \"join\" or a list of triples");
    } else {
      const std::size_t n = lattice->size();
      std::vector<Elem> table(n * n);
      std::vector<bool> seen(n * n, false);
      for (const auto& e : t) {
        if (!e.is_array() || e.size() != 3) parse_error("tensor entries must be [a, b, a*b]");
        const Elem a = lattice->index_of(e[0].get<std::string>());
        const Elem b = lattice->index_of(e[1].get<std::string>());
        const Elem c = lattice->index_of(e[2].get<std::string>());
        if (seen[std::size_t{a} * n + b])
          throw Error(ErrorKind::DuplicateElement, "tensor entry listed twice",
                      {lattice->name(a), lattice->name(b)});
        seen[std::size_t{a} * n + b] = true;
        table[std::size_t{a} * n + b] = c;
      }
      for (std::size_t k = 0; k < seen.size(); ++k)
        if (!seen[k])
          throw Error(ErrorKind::IncompleteTable, "tensor table misses an entry",
                      {lattice->name(static_cast<Elem>(k / n)),
                       lattice->name(static_cast<Elem>(k % n))});
      cqml = std::make_shared<const Cqml>(Cqml::validate(lattice, std::move(table), label));
    }
    const std::string kind = j.value("kind", std::string("gl"));
    if (kind == "cqml") return {cqml, std::nullopt};
    if (kind != "gl") parse_error("kind must be \"gl\" or \"cqml\"");
    GlMonoid g = GlMonoid::validate(cqml);
    return {cqml, g};
  });
}

json to_json(const Cqml& m) {
  const FiniteLattice& l = m.lattice();
  if (auto g = builtin_from_label(m.label()); g && g->algebra() == m)
    return m.label();
  json t = json::array();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) t.push_back({l.name(a), l.name(b), l.name(m.tensor(a, b))});
  bool gl = true;
  try {
    GlMonoid::validate(m);
  } catch (const Error&) {
    gl = false;
  }
  json out{{"label", m.label()}, {"lattice", to_json(l)}, {"tensor", t},
           {"kind", gl ? "gl" : "cqml"}};
  return out;
}

Ground ground_from_json(const json& in, Context ctx) {
  const json j = resolve(in, ctx);
  return guarded("ground", [&] {
    auto points = string_list(field(j, "points"), "points");
    MonoidDef m = monoid_from_json(field(j, "algebra"), ctx);
    return Ground(std::move(points), m.cqml);
  });
}

json to_json(const Ground& g) {
  return json{{"points", g.point_names()}, {"algebra", to_json(g.algebra())}};
}

FuzzySet fuzzy_set_from_json(const json& j, const Ground& g) {
  return guarded("fuzzy set", [&] {
    const FiniteLattice& l = g.lattice();
    FuzzySet u{std::vector<Elem>(g.points(), l.bottom())};
    if (j.is_array()) {
      if (j.size() != g.points())
        throw Error(ErrorKind::CarrierMismatch, "fuzzy set needs one value per point");
      for (std::size_t x = 0; x < j.size(); ++x) u.values[x] = l.index_of(j[x].get<std::string>());
      return u;
    }
    if (j.is_string()) {
      std::string s = j.get<std::string>();
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        parse_error("fuzzy set strings look like \"(a,b)\"");
      s = s.substr(1, s.size() - 2);
      std::vector<std::string> parts;
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = s.find(',', start);
        parts.push_back(s.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return fuzzy_set_from_json(json(parts), g);
    }
    const json& values = j.contains("values") ? j["values"] : j;
    if (j.contains("carrier")) {
      auto carrier = string_list(j["carrier"], "carrier");
      if (carrier != g.point_names())
        throw Error(ErrorKind::CarrierMismatch, "fuzzy set carrier differs from the ground");
    }
    if (!values.is_object()) parse_error("fuzzy set values must map points to elements");
    std::vector<bool> seen(g.points(), false);
    for (const auto& [k, v] : values.items()) {
      const std::size_t x = g.point_index(k);
      seen[x] = true;
      u.values[x] = l.index_of(v.get<std::string>());
    }
    for (std::size_t x = 0; x < seen.size(); ++x)
      if (!seen[x])
        throw Error(ErrorKind::CarrierMismatch, "fuzzy set misses point " + g.point_names()[x],
                    {g.point_names()[x]});
    return u;
  });
}

json to_json(const Ground& g, const FuzzySet& u) {
  json out = json::array();
  for (Elem e : u.values) out.push_back(g.lattice().name(e));
  return out;
}

namespace {

GroundMorphism morphism_with_domain(const json& j, const Ground& dom, Context ctx) {
  return guarded("morphism", [&] {
    const Ground cod = ground_from_json(field(j, "codomain"), ctx);
    PointMap f;
    f.image.assign(dom.points(), 0);
    f.codomain_size = cod.points();
    std::vector<bool> seen(dom.points(), false);
    for (const auto& [x, y] : field(j, "f").items()) {
      const std::size_t xi = dom.point_index(x);
      seen[xi] = true;
      f.image[xi] = cod.point_index(y.get<std::string>());
    }
    for (std::size_t x = 0; x < seen.size(); ++x)
      if (!seen[x])
        throw Error(ErrorKind::CarrierMismatch, "f is not defined at " + dom.point_names()[x],
                    {dom.point_names()[x]});
    const FiniteLattice& m = cod.lattice();
    const FiniteLattice& l = dom.lattice();
    std::vector<Elem> phi(m.size(), 0);
    std::vector<bool> have(m.size(), false);
    for (const auto& [b, a] : field(j, "phi_op").items()) {
      const Elem bi = m.index_of(b);
      have[bi] = true;
      phi[bi] = l.index_of(a.get<std::string>());
    }
    for (Elem b = 0; b < m.size(); ++b)
      if (!have[b])
        throw Error(ErrorKind::CarrierMismatch, "phi_op is not defined at " + m.name(b),
                    {m.name(b)});
    return GroundMorphism::validate(dom, cod, std::move(f), std::move(phi));
  });
}

}  // namespace

GroundMorphism morphism_from_json(const json& in, Context ctx) {
  const json j = resolve(in, ctx);
  const Ground dom = guarded("morphism", [&] { return ground_from_json(field(j, "domain"), ctx); });
  return morphism_with_domain(j, dom, ctx);
}

json to_json(const GroundMorphism& g) {
  json f = json::object();
  for (std::size_t x = 0; x < g.domain().points(); ++x)
    f[g.domain().point_names()[x]] = g.codomain().point_names()[g.f(x)];
  json phi = json::object();
  const FiniteLattice& m = g.codomain().lattice();
  for (Elem b = 0; b < m.size(); ++b) phi[m.name(b)] = g.domain().lattice().name(g.phi_op(b));
  return json{{"domain", to_json(g.domain())},
              {"codomain", to_json(g.codomain())},
              {"f", f},
              {"phi_op", phi}};
}

FuzzyOperator operator_from_json(const json& in, Context ctx) {
  const json j = resolve(in, ctx);
  return guarded("operator", [&]() -> FuzzyOperator {
    const Ground g = ground_from_json(field(j, "ground"), ctx);
    if (j.contains("operator")) {
      const std::string name = j["operator"].get<std::string>();
      if (name == "discrete") return discrete(g).op();
      if (name == "least") return least(g).op();
      if (name == "trivial-literal") return trivial_literal(g);
      parse_error("unknown operator '" + name + "'");
    }
    if (j.contains("opens")) return interior_from_topology(topology_from_json(j, ctx)).op();
    if (!g.materializable())
      throw Error(ErrorKind::GroundTooLarge, "tabulated operators need a small powerset");
    std::vector<Code> table(g.powerset_size(), 0);
    std::vector<bool> seen(table.size(), false);
    for (const auto& row : field(j, "table")) {
      if (!row.is_array() || row.size() != 2) parse_error("table rows must be [u, i(u)]");
      const Code u = g.encode(fuzzy_set_from_json(row[0], g));
      if (seen[u])
        throw Error(ErrorKind::DuplicateElement, "table lists an argument twice",
                    {g.render(g.decode(u))});
      seen[u] = true;
      table[u] = g.encode(fuzzy_set_from_json(row[1], g));
    }
    for (Code u = 0; u < seen.size(); ++u)
      if (!seen[u])
        throw Error(ErrorKind::IncompleteTable, "table misses " + g.render(g.decode(u)),
                    {g.render(g.decode(u))});
    return FuzzyOperator::from_table(g, std::move(table));
  });
}

InteriorMap interior_from_json(const json& j, Context ctx) {
  return InteriorMap::validate(operator_from_json(j, ctx));
}

json operator_table_json(const FuzzyOperator& op) {
  const Ground& g = op.ground();
  if (!op.materialized())
    throw Error(ErrorKind::GroundTooLarge, "operator is not tabulated");
  json rows = json::array();
  for (Code c = 0; c < g.powerset_size(); ++c)
    rows.push_back(json::array({to_json(g, g.decode(c)), to_json(g, g.decode(op(c)))}));
  return rows;
}

json to_json(const InteriorMap& i) {
  return json{{"ground", to_json(i.ground())}, {"table", operator_table_json(i.op())}};
}

LTopology topology_from_json(const json& in, Context ctx) {
  const json j = resolve(in, ctx);
  return guarded("topology", [&] {
    const Ground g = ground_from_json(field(j, "ground"), ctx);
    std::vector<FuzzySet> opens;
    for (const auto& u : field(j, "opens")) opens.push_back(fuzzy_set_from_json(u, g));
    return LTopology::make(g, std::move(opens));
  });
}

json to_json(const LTopology& t) {
  json opens = json::array();
  for (const auto& u : t.opens()) opens.push_back(to_json(t.ground(), u));
  return json{{"ground", to_json(t.ground())}, {"opens", opens}};
}

StructuredSource source_from_json(const json& in, Context ctx) {
  const json j = resolve(in, ctx);
  return guarded("source", [&] {
    const Ground dom = ground_from_json(field(j, "domain"), ctx);
    std::vector<SourceMember> members;
    for (const auto& m : field(j, "members")) {
      Context mctx = ctx;
      const json mj = resolve(field(m, "morphism"), mctx);
      GroundMorphism g = mj.contains("domain") ? morphism_from_json(mj, mctx)
                                               : morphism_with_domain(mj, dom, mctx);
      InteriorMap i = interior_from_json(field(m, "target"), ctx);
      members.push_back({std::move(g), VbSpace{std::move(i)}});
    }
    return StructuredSource::make(dom, std::move(members));
  });
}

json to_json(const StructuredSource& s) {
  json members = json::array();
  for (const auto& m : s.members()) {
    json g = to_json(m.morphism);
    g.erase("domain");
    members.push_back({{"morphism", g}, {"target", to_json(m.target.interior)}});
  }
  return json{{"domain", to_json(s.domain())}, {"members", members}};
}

}  // namespace fuzzint::io
