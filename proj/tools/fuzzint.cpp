// fuzzint command-line front end.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzint/continuity.hpp"
#include "fuzzint/enumerate.hpp"
#include "fuzzint/error.hpp"
#include "fuzzint/examples.hpp"
#include "fuzzint/interior.hpp"
#include "fuzzint/io.hpp"
#include "fuzzint/search.hpp"

namespace {

using namespace fuzzint;
using json = io::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::string count_points(std::size_t n) {
  return std::to_string(n) + (n == 1 ? " point" : " points");
}

struct Global {
  bool json_out = false;
  bool verbose = false;
};

// ---------------------------------------------------------------------------
// Output

void print(const json& j) { std::cout << io::dump(j); }

json error_json(const Error& e) {
  json out{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (!e.witness().empty()) out["witness"] = e.witness();
  return out;
}

/// Structural failures are reports (stdout, exit 1); the rest are input errors.
int report_error(const Error& e, const Global& g) {
  if (is_structural(e.kind())) {
    if (g.json_out) {
      print(json{{"status", "fail"}, {"error", error_json(e)}});
    } else {
      std::cout << "FAIL " << to_string(e.kind()) << ": " << e.what() << "\n";
      if (!e.witness().empty()) {
        std::cout << "witness:";
        for (const auto& w : e.witness()) std::cout << " " << w;
        std::cout << "\n";
      }
    }
    return kFail;
  }
  std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
  for (const auto& w : e.witness()) std::cerr << "  " << w << "\n";
  return kInputError;
}

std::string render_op_row(const Ground& g, const FuzzySet& u, const FuzzySet& v) {
  return g.render(u) + " |-> " + g.render(v);
}

// ---------------------------------------------------------------------------
// Loading

enum class Schema { lattice, monoid, ground, morphism, op, topology, source, bundle, unknown };

std::string schema_name(Schema s) {
  switch (s) {
    case Schema::lattice: return "lattice";
    case Schema::monoid: return "monoid";
    case Schema::ground: return "ground";
    case Schema::morphism: return "morphism";
    case Schema::op: return "operator";
    case Schema::topology: return "topology";
    case Schema::source: return "source";
    case Schema::bundle: return "bundle";
    case Schema::unknown: break;
  }
  return "unknown";
}

Schema detect(const json& j) {
  if (j.is_string()) return Schema::monoid;
  if (!j.is_object()) return Schema::unknown;
  if (j.contains("property")) return Schema::bundle;
  if (j.contains("members")) return Schema::source;
  if (j.contains("f") || j.contains("phi_op")) return Schema::morphism;
  if (j.contains("ground")) {
    if (j.contains("opens") && !j.contains("table") && !j.contains("operator"))
      return Schema::topology;
    return Schema::op;
  }
  if (j.contains("points")) return Schema::ground;
  if (j.contains("elements")) return Schema::lattice;
  if (j.contains("lattice") || j.contains("builtin") || j.contains("tensor")) return Schema::monoid;
  return Schema::unknown;
}

struct Loaded {
  json doc;
  io::Context ctx;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.doc = io::read_json(path);
  l.ctx.base = std::filesystem::path(path).parent_path();
  if (l.ctx.base.empty()) l.ctx.base = ".";
  return l;
}

VbSpace load_space(const std::string& path) {
  Loaded l = load(path);
  return VbSpace{io::interior_from_json(l.doc, l.ctx)};
}

GroundMorphism load_morphism(const std::string& path) {
  Loaded l = load(path);
  return io::morphism_from_json(l.doc, l.ctx);
}

InteriorMap load_interior(const Loaded& l) {
  if (detect(l.doc) == Schema::topology)
    return interior_from_topology(io::topology_from_json(l.doc, l.ctx));
  return io::interior_from_json(l.doc, l.ctx);
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& path, const Global& g) {
  Loaded l = load(path);
  const Schema s = detect(l.doc);
  json summary = json::object();
  std::string line;
  switch (s) {
    case Schema::lattice: {
      auto lat = io::lattice_from_json(l.doc, l.ctx);
      summary = {{"elements", lat->size()}, {"distributive", lat->distributive()}};
      line = std::to_string(lat->size()) + " elements, " +
             (lat->distributive() ? "distributive" : "not distributive");
      break;
    }
    case Schema::monoid: {
      const io::MonoidDef m = io::monoid_from_json(l.doc, l.ctx);
      const std::string kind = m.gl ? "gl" : "cqml";
      summary = {{"label", m.cqml->label()}, {"kind", kind}, {"elements", m.cqml->size()}};
      line = (m.cqml->label().empty() ? std::string("unnamed") : m.cqml->label()) + " (" + kind +
             ", " + std::to_string(m.cqml->size()) + " elements)";
      break;
    }
    case Schema::ground: {
      const Ground gr = io::ground_from_json(l.doc, l.ctx);
      summary = {{"points", gr.points()}, {"algebra", io::to_json(gr.algebra())},
                 {"powerset_size", gr.powerset_size()}};
      line = count_points(gr.points()) + " over " + gr.algebra().label() + ", " +
             std::to_string(gr.powerset_size()) + " fuzzy sets";
      break;
    }
    case Schema::morphism: {
      const GroundMorphism m = io::morphism_from_json(l.doc, l.ctx);
      verify_right_adjoint(m);
      summary = {{"domain_points", m.domain().points()}, {"codomain_points", m.codomain().points()}};
      line = count_points(m.domain().points()) + " over " + m.domain().algebra().label() +
             " -> " + count_points(m.codomain().points()) + " over " +
             m.codomain().algebra().label();
      break;
    }
    case Schema::op: {
      const InteriorMap i = io::interior_from_json(l.doc, l.ctx);
      const bool idem = bool(is_idempotent(i).holds);
      const bool fp = bool(is_fully_productive(i).holds);
      summary = {{"interior", true}, {"idempotent", idem}, {"fully_productive", fp}};
      line = std::string("interior map") + (idem ? ", idempotent" : "") +
             (fp ? ", fully productive" : "");
      break;
    }
    case Schema::topology: {
      const LTopology t = io::topology_from_json(l.doc, l.ctx);
      interior_from_topology(t);
      summary = {{"opens", t.opens().size()}, {"join_closed", t.join_closed()}};
      line = std::to_string(t.opens().size()) + " opens" +
             (t.join_closed() ? ", join-closed" : ", not join-closed");
      break;
    }
    case Schema::source: {
      const StructuredSource src = io::source_from_json(l.doc, l.ctx);
      initial_from_source(src);
      summary = {{"members", src.members().size()}};
      line = std::to_string(src.members().size()) + " members, initial lift is interior";
      break;
    }
    case Schema::bundle: {
      const std::string status = l.doc.value("status", "");
      if (status == "ok") {
        summary = {{"property", l.doc.value("property", "")}, {"status", "ok"}};
        line = "summary bundle for " + l.doc.value("property", "");
        break;
      }
      const ReplayResult r = replay(l.doc);
      summary = {{"property", r.property}, {"reproduced", r.counterexample}};
      line = r.property + " witness " + (r.counterexample ? "reproduced" : "not reproduced");
      if (!r.counterexample) {
        if (g.json_out)
          print(json{{"schema", "bundle"}, {"status", "fail"}, {"summary", summary}});
        else
          std::cout << "FAIL bundle: " << line << "\n";
        return kFail;
      }
      break;
    }
    case Schema::unknown:
      throw Error(ErrorKind::ParseError, "document matches no known schema");
  }
  if (g.json_out)
    print(json{{"schema", schema_name(s)}, {"status", "ok"}, {"summary", summary}});
  else
    std::cout << "OK " << schema_name(s) << ": " << line << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(const std::string& path, const std::string& which, const std::string& mode,
               const Global& g) {
  Loaded l = load(path);
  if (which == "residuum") {
    const io::MonoidDef m = io::monoid_from_json(l.doc, l.ctx);
    if (!m.gl) throw Error(ErrorKind::NotGLGround, "residuum tables need a GL-monoid");
    const FiniteLattice& lat = m.gl->lattice();
    json rows = json::array();
    for (Elem a = 0; a < lat.size(); ++a)
      for (Elem b = 0; b < lat.size(); ++b) {
        const Elem c = m.gl->residuum(a, b);
        if (g.json_out)
          rows.push_back({lat.name(a), lat.name(b), lat.name(c)});
        else
          std::cout << lat.name(a) << " -> " << lat.name(b) << " = " << lat.name(c) << "\n";
      }
    if (g.json_out)
      print(json{{"table", "residuum"}, {"algebra", io::to_json(m.gl->algebra())}, {"rows", rows}});
    return kOk;
  }
  if (which == "interior" || which == "closure") {
    std::optional<FuzzyOperator> op;
    if (which == "interior") {
      op = load_interior(l).op();
    } else {
      const LTopology t = io::topology_from_json(l.doc, l.ctx);
      const GlMonoid m = [&] {
        try {
          return GlMonoid::validate(t.ground().algebra_ptr());
        } catch (const Error& e) {
          throw Error(ErrorKind::NotGLGround, std::string("closure needs a GL ground: ") + e.what(),
                      e.witness());
        }
      }();
      ClosureMode cm = ClosureMode::extensional;
      if (mode == "literal") cm = ClosureMode::literal;
      else if (mode != "extensional")
        throw Error(ErrorKind::InvalidArgument, "mode must be literal or extensional", {mode});
      op = closure_from_topology(t, m, cm);
    }
    const Ground& gr = op->ground();
    if (g.json_out) {
      json out{{"table", which}};
      if (which == "closure") out["mode"] = mode;
      out["ground"] = io::to_json(gr);
      out["rows"] = io::operator_table_json(*op);
      print(out);
    } else {
      for (Code c = 0; c < gr.powerset_size(); ++c) {
        const FuzzySet u = gr.decode(c);
        std::cout << render_op_row(gr, u, (*op)(u)) << "\n";
      }
    }
    return kOk;
  }
  if (which == "powerset-op") {
    const GroundMorphism m = io::morphism_from_json(l.doc, l.ctx);
    const Ground& x = m.domain();
    const Ground& y = m.codomain();
    auto section = [&](const char* name, const Ground& from, const Ground& to, auto&& fn) {
      json rows = json::array();
      if (!g.json_out) std::cout << name << "\n";
      for (Code c = 0; c < from.powerset_size(); ++c) {
        const FuzzySet u = from.decode(c);
        const FuzzySet v = fn(u);
        if (g.json_out)
          rows.push_back({io::to_json(from, u), io::to_json(to, v)});
        else
          std::cout << "  " << from.render(u) << " |-> " << to.render(v) << "\n";
      }
      return rows;
    };
    json out{{"table", "powerset-op"}};
    out["backward"] = section("backward", y, x, [&](const FuzzySet& v) { return vb_backward(m, v); });
    out["forward"] = section("forward", x, y, [&](const FuzzySet& u) { return vb_forward(m, u); });
    out["right_adjoint"] =
        section("right-adjoint", x, y, [&](const FuzzySet& u) { return vb_right_adjoint(m, u); });
    if (g.json_out) print(out);
    return kOk;
  }
  throw Error(ErrorKind::InvalidArgument,
              "--which must be residuum, interior, closure or powerset-op", {which});
}

// ---------------------------------------------------------------------------
// check

void require_files(const std::vector<std::string>& files, std::size_t n, const std::string& usage) {
  if (files.size() != n)
    throw Error(ErrorKind::InvalidArgument, "expected " + usage);
}

int verdict_out(const std::string& property, bool holds, json detail, const std::string& human,
                const Global& g, const std::string& note = {}) {
  if (g.json_out) {
    json out{{"property", property}, {"verdict", holds ? "ok" : "fail"}};
    for (auto& [k, v] : detail.items()) out[k] = v;
    if (!note.empty()) out["note"] = note;
    print(out);
  } else {
    std::cout << property << ": " << (holds ? "OK" : "FAIL") << "\n";
    if (!human.empty()) std::cout << human;
    if (!note.empty()) std::cout << "note: " << note << "\n";
  }
  return holds ? kOk : kFail;
}

int check_morphism_relation(const std::string& property, const std::vector<std::string>& files,
                            const Global& g) {
  require_files(files, 3, "<morphism> <source space> <target space>");
  const GroundMorphism m = load_morphism(files[0]);
  const VbSpace src = load_space(files[1]);
  const VbSpace dst = load_space(files[2]);
  const Verdict v = property == "continuity" ? is_continuous(m, src, dst) : is_open_morphism(m, src, dst);
  json detail = json::object();
  std::string human;
  if (v.witness) {
    const Ground& y = m.codomain();
    const FuzzySet& w = *v.witness;
    const FuzzySet lhs = vb_backward(m, dst.interior(w));
    const FuzzySet rhs = src.interior(vb_backward(m, w));
    detail["witness"] = {{"v", io::to_json(y, w)},
                         {"backward_of_interior", io::to_json(m.domain(), lhs)},
                         {"interior_of_backward", io::to_json(m.domain(), rhs)}};
    human = "witness v = " + y.render(w) + "\n  backward of interior: " + m.domain().render(lhs) +
            "\n  interior of backward: " + m.domain().render(rhs) + "\n";
  }
  return verdict_out(property, v.holds, detail, human, g);
}

int check_trivial_literal(const std::vector<std::string>& files, const Global& g) {
  Ground gr({"p1"}, builtin_chain(ChainKind::godel, 3).algebra_ptr());
  if (files.size() == 1) {
    Loaded l = load(files[0]);
    gr = io::ground_from_json(l.doc, l.ctx);
  } else if (!files.empty()) {
    throw Error(ErrorKind::InvalidArgument, "expected at most one ground file");
  }
  const FuzzyOperator op = trivial_literal(gr);
  const auto w = check_interior_axioms(op);
  const std::string note =
      "the literal trivial operator (0_X |-> 0_X, every other u |-> 1_X) is not an interior map; "
      "the least interior map sends 1_X to 1_X and every other u to 0_X";
  json detail = json::object();
  std::string human;
  if (w) {
    detail["witness"] = {{"axiom", to_string(w->axiom)},
                         {"u", io::to_json(gr, w->u)},
                         {"image", io::to_json(gr, op(w->u))}};
    human = "witness: " + to_string(w->axiom) + " fails at u = " + gr.render(w->u) + " (image " +
            gr.render(op(w->u)) + ")\n";
  }
  return verdict_out("trivial-literal", !w, detail, human, g, w ? note : std::string{});
}

int check_interior(const std::vector<std::string>& files, const Global& g) {
  require_files(files, 1, "<operator>");
  Loaded l = load(files[0]);
  const FuzzyOperator op = detect(l.doc) == Schema::topology
                               ? interior_from_topology(io::topology_from_json(l.doc, l.ctx)).op()
                               : io::operator_from_json(l.doc, l.ctx);
  const auto w = check_interior_axioms(op);
  json detail = json::object();
  std::string human;
  if (w) {
    const Ground& gr = op.ground();
    detail["witness"] = {{"axiom", to_string(w->axiom)}, {"u", io::to_json(gr, w->u)}};
    if (w->v) detail["witness"]["v"] = io::to_json(gr, *w->v);
    human = "witness: " + to_string(w->axiom) + " fails at u = " + gr.render(w->u) +
            (w->v ? ", v = " + gr.render(*w->v) : std::string{}) + "\n";
  }
  return verdict_out("interior", !w, detail, human, g);
}

int check_initiality(const std::vector<std::string>& files, const SearchBounds& bounds,
                     const Global& g) {
  if (files.empty() || files.size() > 2)
    throw Error(ErrorKind::InvalidArgument, "expected <source> [<lift operator>]");
  Loaded l = load(files[0]);
  const StructuredSource s = io::source_from_json(l.doc, l.ctx);
  std::optional<InteriorMap> lift;
  if (files.size() == 2) {
    Loaded lo = load(files[1]);
    lift = load_interior(lo);
  } else {
    lift = initial_from_source(s);
  }
  const Ground& x = s.domain();
  json detail{{"lift", io::operator_table_json(lift->op())}};
  const VbSpace lifted{*lift};
  for (std::size_t k = 0; k < s.members().size(); ++k) {
    const auto& m = s.members()[k];
    const Verdict v = is_continuous(m.morphism, lifted, m.target);
    if (!v) {
      detail["witness"] = {{"member", k}, {"v", io::to_json(m.target.ground(), *v.witness)}};
      return verdict_out("initiality", false, detail,
                         "member " + std::to_string(k) + " is not continuous from the lift at v = " +
                             m.target.ground().render(*v.witness) + "\n",
                         g);
    }
  }
  const InitialityVerdict v = verify_initiality(s, *lift, bounds);
  detail["instances_checked"] = v.instances_checked;
  std::string human = "instances checked: " + std::to_string(v.instances_checked) + "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    json comps = json::array();
    std::string cs;
    for (bool c : w.composites_continuous) {
      comps.push_back(c);
      cs += std::string(cs.empty() ? "" : ", ") + (c ? "yes" : "no");
    }
    detail["witness"] = {{"test_morphism", io::to_json(w.test_morphism)},
                         {"test_space", io::to_json(w.test_interior)},
                         {"continuous_into_lift", w.continuous_into_lift},
                         {"composites_continuous", comps}};
    human += "witness: test morphism from " + count_points(w.test_morphism.domain().points()) +
             " over " + w.test_morphism.domain().algebra().label() + " is " +
             (w.continuous_into_lift ? "" : "not ") +
             "continuous into the lift; composites continuous: [" + cs + "]\n";
  }
  (void)x;
  return verdict_out("initiality", v.holds, detail, human, g);
}

int check_preservation(const std::string& property, const std::vector<std::string>& files,
                       const Global& g) {
  require_files(files, 2, "<morphism> <target space>");
  const GroundMorphism m = load_morphism(files[0]);
  const VbSpace t = load_space(files[1]);
  const Verdict v = property == "idempotency-preservation" ? preserves_idempotency_check(m, t)
                                                           : preserves_full_productivity_check(m, t);
  json detail = json::object();
  std::string human;
  if (v.witness) {
    detail["witness"] = {{"u", io::to_json(m.domain(), *v.witness)}};
    human = "witness u = " + m.domain().render(*v.witness) + "\n";
  }
  return verdict_out(property, v.holds, detail, human, g);
}

int check_preimage_open(const std::vector<std::string>& files, const Global& g) {
  require_files(files, 3, "<morphism> <source space> <target space>");
  const GroundMorphism m = load_morphism(files[0]);
  const VbSpace src = load_space(files[1]);
  const VbSpace dst = load_space(files[2]);
  for (const FuzzySet& v : open_sets(dst.interior)) {
    if (preimage_of_open_is_open(m, src, dst, v)) continue;
    return verdict_out("preimage-open", false, json{{"witness", {{"v", io::to_json(m.codomain(), v)}}}},
                       "witness v = " + m.codomain().render(v) + "\n", g);
  }
  return verdict_out("preimage-open", true, json::object(), "", g);
}

int run_search(const std::string& property, const SearchBounds& bounds, const std::string& out,
               const Global& g);

int cmd_check(const std::string& property, const std::vector<std::string>& files,
              const SearchBounds& bounds, const Global& g) {
  if (property == "continuity" || property == "openness")
    return check_morphism_relation(property, files, g);
  if (property == "trivial-literal") return check_trivial_literal(files, g);
  if (property == "interior") return check_interior(files, g);
  if (property == "initiality") {
    if (files.empty()) return run_search(property, bounds, {}, g);
    return check_initiality(files, bounds, g);
  }
  if (property == "idempotency-preservation" || property == "full-productivity-preservation") {
    if (files.empty()) return run_search(property, bounds, {}, g);
    return check_preservation(property, files, g);
  }
  if (property == "preimage-open") {
    if (files.empty()) return run_search(property, bounds, {}, g);
    return check_preimage_open(files, g);
  }
  for (const auto& p : registered_properties())
    if (p.name == property) {
      if (!files.empty())
        throw Error(ErrorKind::InvalidArgument, property + " takes no instance files");
      return run_search(property, bounds, {}, g);
    }
  throw Error(ErrorKind::UnknownProperty, "unknown property '" + property + "'", {property});
}

// ---------------------------------------------------------------------------
// search

int run_search(const std::string& property, const SearchBounds& bounds, const std::string& out,
               const Global& g) {
  const auto t0 = std::chrono::steady_clock::now();
  const SearchResult r = search(property, bounds);
  const json bundle = to_bundle(r);
  if (g.verbose)
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count()
              << " ms\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
    f << io::dump(bundle);
  }
  if (g.json_out || out.empty()) {
    print(bundle);
  } else {
    std::cout << property << ": "
              << (r.counterexample ? "counterexample" : "no counterexample") << " after "
              << r.instances_checked << " instances\n";
  }
  return r.counterexample ? kFail : kOk;
}

int cmd_replay(const std::string& path, const Global& g) {
  Loaded l = load(path);
  const ReplayResult r = replay(l.doc);
  if (g.json_out)
    print(json{{"property", r.property},
               {"verdict", r.counterexample ? "fail" : "ok"},
               {"detail", r.detail}});
  else
    std::cout << r.property << ": " << (r.counterexample ? "FAIL" : "OK") << "\n"
              << r.detail << "\n";
  return r.counterexample ? kFail : kOk;
}

int cmd_list(const Global& g) {
  json out = json::array();
  for (const auto& p : registered_properties()) {
    if (g.json_out)
      out.push_back({{"name", p.name}, {"description", p.description}});
    else
      std::cout << p.name << "  " << p.description << "\n";
  }
  if (g.json_out) print(out);
  return kOk;
}

// ---------------------------------------------------------------------------
// examples

struct ExampleOptions {
  std::size_t max_points = 3;
  std::size_t grid_steps = 2;
  unsigned n_max = 8;
  std::size_t grid_points = 101;
};

std::pair<bool, json> run_example(int which, const ExampleOptions& o, const SearchBounds& bounds,
                                  std::string& human) {
  if (which == 1) {
    json r = examples::example1_report(o.max_points, examples::uniform_grid(o.grid_steps));
    const bool ok = r["ok"].get<bool>();
    human += "example 1: " + std::string(ok ? "OK" : "FAIL") + "\n";
    human += "  crisp agreement on " + r["crisp_agreement"]["checked"].dump() + " inputs, mismatch " +
             r["crisp_agreement"]["mismatch"].dump() + "\n";
    human += "  IJ-continuous maps " + r["ij_continuity"]["maps"].dump() + ", failures " +
             r["ij_continuity"]["failures"].dump() + "\n";
    human += "  JI-continuous maps " + r["ji_continuity"]["continuous"].dump() + " of " +
             r["ji_continuity"]["maps"].dump() + ", non-constant " +
             r["ji_continuity"]["nonconstant_continuous"].dump() + "\n";
    return {ok, r};
  }
  if (which == 2) {
    const examples::PowerScan scan = examples::example2_idempotency_scan(o.n_max, o.grid_points);
    bool axioms = true;
    for (const auto& e : scan.entries) axioms = axioms && e.axioms_hold;
    const bool ok = axioms && scan.idempotent == std::vector<std::string>{"1", "inf"};
    std::string ids;
    for (const auto& s : scan.idempotent) ids += (ids.empty() ? "" : ", ") + s;
    human += "example 2: " + std::string(ok ? "OK" : "FAIL") + "\n  idempotent: {" + ids +
             "}\n  axioms on grid: " + (axioms ? "hold" : "fail") + "\n";
    return {ok, examples::to_json(scan)};
  }
  const LTopology t = examples::example3_default_topology();
  const GlMonoid m = GlMonoid::validate(t.ground().algebra_ptr());
  json r = examples::example3_roundtrip(m, t);
  r["sweep"] = examples::example3_sweep(bounds);
  const bool ok = r["closures"]["extensional"]["extensive"]["holds"].get<bool>() &&
                  r["sweep"]["closures"]["extensional"]["non_extensive_topologies"] == 0;
  human += "example 3: " + std::string(ok ? "OK" : "FAIL") + "\n  interior:";
  const Ground& g = t.ground();
  const InteriorMap i = interior_from_topology(t);
  for (Code c = 0; c < g.powerset_size(); ++c)
    human += " " + render_op_row(g, g.decode(c), i(g.decode(c))) + ";";
  human += "\n  extensional closure extensive on " + r["sweep"]["topologies"].dump() +
           " topologies: " + (ok ? "yes" : "no") + "\n  literal closure non-extensive on " +
           r["sweep"]["closures"]["literal"]["non_extensive_topologies"].dump() + "\n";
  return {ok, r};
}

int cmd_examples(const std::string& which, const ExampleOptions& o, const SearchBounds& bounds,
                 const Global& g) {
  std::vector<int> ids;
  if (which.empty() || which == "all") ids = {1, 2, 3};
  else if (which == "1" || which == "2" || which == "3") ids = {std::stoi(which)};
  else throw Error(ErrorKind::InvalidArgument, "example must be 1, 2 or 3", {which});
  bool ok = true;
  json reports = json::object();
  std::string human;
  for (int id : ids) {
    auto [pass, r] = run_example(id, o, bounds, human);
    ok = ok && pass;
    reports[std::to_string(id)] = r;
  }
  if (g.json_out)
    print(ids.size() == 1 ? reports[std::to_string(ids.front())] : reports);
  else
    std::cout << human;
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzint: interior operators on variable-basis fuzzy powersets"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json_out, "emit JSON reports");
  app.add_flag("--verbose", g.verbose, "timing information on stderr");

  std::string file;
  auto* validate = app.add_subcommand("validate", "validate a definition file");
  validate->add_option("file", file, "JSON definition")->required();

  std::string which, mode = "extensional";
  auto* tables = app.add_subcommand("tables", "print an operation table");
  tables->add_option("file", file, "JSON definition")->required();
  tables->add_option("--which", which, "residuum|interior|closure|powerset-op")->required();
  tables->add_option("--mode", mode, "closure mode: literal|extensional");

  std::string property;
  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "check a property on instance files");
  check->add_option("property", property, "property name")->required();
  check->add_option("files", files, "instance files");

  std::string max_x, max_l, max_tables, budget, family, workers;
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-x", max_x, "maximum number of points");
    sub->add_option("--max-l", max_l, "maximum lattice size");
    sub->add_option("--max-tables", max_tables, "maximum naive operator count");
    sub->add_option("--budget", budget, "time budget, e.g. 60s or 500ms");
    sub->add_option("--family", family, "algebra family: gl|cqml");
    sub->add_option("--workers", workers, "worker threads");
  };
  add_bounds(check);

  std::string out, replay_file;
  bool list = false;
  auto* search_cmd = app.add_subcommand("search", "exhaustive counterexample search");
  search_cmd->add_option("--property", property, "property name");
  search_cmd->add_option("--out", out, "write the witness bundle here");
  search_cmd->add_option("--replay", replay_file, "replay a witness bundle");
  search_cmd->add_flag("--list", list, "list registered properties");
  add_bounds(search_cmd);

  ExampleOptions eo;
  std::string example = "all";
  auto* examples_cmd = app.add_subcommand("examples", "run the worked examples");
  auto* run = examples_cmd->add_subcommand("run", "run examples 1, 2, 3 or all");
  examples_cmd->require_subcommand(1);
  run->add_option("example", example, "1|2|3|all");
  run->add_option("--max-points", eo.max_points, "example 1: largest space");
  run->add_option("--grid-steps", eo.grid_steps, "example 1: grid {0, 1/k, ..., 1}");
  run->add_option("--n-max", eo.n_max, "example 2: largest finite exponent");
  run->add_option("--grid-points", eo.grid_points, "example 2: grid size");
  add_bounds(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    SearchBounds bounds = bounds_from_env();
    std::string overrides;
    auto add = [&](const char* key, const std::string& v) {
      if (!v.empty()) overrides += std::string(overrides.empty() ? "" : ",") + key + "=" + v;
    };
    add("max_x", max_x);
    add("max_l", max_l);
    add("max_tables", max_tables);
    add("budget", budget);
    add("family", family);
    add("workers", workers);
    if (!overrides.empty()) bounds = parse_bounds(overrides, bounds);
    check_bounds(bounds);

    if (*validate) return cmd_validate(file, g);
    if (*tables) return cmd_tables(file, which, mode, g);
    if (*check) return cmd_check(property, files, bounds, g);
    if (*search_cmd) {
      if (list) return cmd_list(g);
      if (!replay_file.empty()) return cmd_replay(replay_file, g);
      if (property.empty())
        throw Error(ErrorKind::InvalidArgument, "search needs --property, --replay or --list");
      return run_search(property, bounds, out, g);
    }
    if (*run) return cmd_examples(example, eo, bounds, g);
  } catch (const Error& e) {
    return report_error(e, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
