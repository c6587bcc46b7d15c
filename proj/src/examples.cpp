#include "fuzzint/examples.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "fuzzint/error.hpp"

namespace fuzzint::examples {

namespace {

using json = io::json;

std::string point_name(std::size_t k) { return "p" + std::to_string(k + 1); }

std::string render_mask(Mask m, std::size_t points) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < points; ++k)
    if (m >> k & 1U) {
      if (!first) out += ",";
      out += point_name(k);
      first = false;
    }
  return out + "}";
}

/// Calls fn on every map {0..n-1} → values in lexicographic order.
template <class T, class Fn>
void for_each_map(std::size_t n, const std::vector<T>& values, Fn&& fn) {
  std::vector<std::size_t> digit(n, 0);
  std::vector<T> cur(n, values.front());
  while (true) {
    fn(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++digit[k] < values.size()) {
        cur[k] = values[digit[k]];
        break;
      }
      digit[k] = 0;
      cur[k] = values.front();
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<std::size_t> indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = k;
  return out;
}

bool leq_map(const GridMap& a, const GridMap& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k] + kTolerance) return false;
  return true;
}

bool is_constant(const std::vector<std::size_t>& f) {
  return std::adjacent_find(f.begin(), f.end(), std::not_equal_to<>()) == f.end();
}

json map_json(const std::vector<std::size_t>& f) {
  json out = json::array();
  for (std::size_t y : f) out.push_back(point_name(y));
  return out;
}

json grid_json(const GridMap& u) { return json(u); }

void check_grid_map(const GridMap& u, std::size_t points) {
  if (u.size() != points)
    throw Error(ErrorKind::InvalidArgument, "fuzzy set has " + std::to_string(u.size()) +
                                                " values for " + std::to_string(points) + " points");
  for (double t : u)
    if (!(t >= 0.0 && t <= 1.0))
      throw Error(ErrorKind::InvalidArgument, "value outside [0,1]", {std::to_string(t)});
}

/// First I1–I3 violation of `op` over all grid-valued maps on n points.
template <class Op>
json grid_axiom_check(std::size_t n, const std::vector<double>& grid, Op&& op, std::size_t& checked) {
  std::vector<GridMap> all;
  for_each_map(n, grid, [&](const GridMap& u) { all.push_back(u); });
  std::vector<GridMap> image;
  for (const auto& u : all) image.push_back(op(u));
  for (std::size_t a = 0; a < all.size(); ++a) {
    ++checked;
    if (!leq_map(image[a], all[a]))
      return json{{"axiom", to_string(InteriorAxiom::contraction)}, {"u", grid_json(all[a])}};
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (!leq_map(all[a], all[b])) continue;
      ++checked;
      if (!leq_map(image[a], image[b]))
        return json{{"axiom", to_string(InteriorAxiom::monotonicity)},
                    {"u", grid_json(all[a])},
                    {"v", grid_json(all[b])}};
    }
  const GridMap top(n, 1.0);
  ++checked;
  if (!leq_map(top, op(top)))
    return json{{"axiom", to_string(InteriorAxiom::upper_bound)}, {"u", grid_json(top)}};
  return nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite topological spaces

FiniteTopSpace FiniteTopSpace::make(std::size_t points, std::vector<Mask> opens) {
  if (points > 16) throw Error(ErrorKind::InvalidTopology, "at most 16 points are supported");
  const Mask full = static_cast<Mask>((Mask{1} << points) - 1);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (Mask m : opens)
    if (m & ~full)
      throw Error(ErrorKind::InvalidTopology, "open set mentions a point outside the space",
                  {std::to_string(m)});
  auto has = [&](Mask m) { return std::binary_search(opens.begin(), opens.end(), m); };
  if (!has(0)) throw Error(ErrorKind::InvalidTopology, "empty set is not open");
  if (!has(full)) throw Error(ErrorKind::InvalidTopology, "whole space is not open");
  for (Mask a : opens)
    for (Mask b : opens) {
      if (!has(a | b))
        throw Error(ErrorKind::InvalidTopology, "union of open sets is not open",
                    {render_mask(a, points), render_mask(b, points)});
      if (!has(a & b))
        throw Error(ErrorKind::InvalidTopology, "intersection of open sets is not open",
                    {render_mask(a, points), render_mask(b, points)});
    }
  return FiniteTopSpace(points, std::move(opens));
}

FiniteTopSpace FiniteTopSpace::discrete(std::size_t points) {
  std::vector<Mask> all;
  for (Mask m = 0; m < (Mask{1} << points); ++m) all.push_back(m);
  return make(points, std::move(all));
}

FiniteTopSpace FiniteTopSpace::indiscrete(std::size_t points) {
  return make(points, {0, static_cast<Mask>((Mask{1} << points) - 1)});
}

bool FiniteTopSpace::is_open(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

Mask FiniteTopSpace::interior(Mask m) const {
  Mask out = 0;
  for (Mask o : opens_)
    if ((o & ~m) == 0) out |= o;
  return out;
}

std::string FiniteTopSpace::render() const {
  std::string out = "{";
  for (std::size_t k = 0; k < opens_.size(); ++k) {
    if (k) out += ",";
    out += render_mask(opens_[k], points_);
  }
  return out + "}";
}

std::vector<FiniteTopSpace> enumerate_topologies(std::size_t points) {
  if (points == 0 || points > 4)
    throw Error(ErrorKind::InvalidArgument, "topologies are enumerated on 1 to 4 points");
  const Mask full = static_cast<Mask>((Mask{1} << points) - 1);
  std::vector<Mask> middle;
  for (Mask m = 1; m < full; ++m) middle.push_back(m);
  std::vector<FiniteTopSpace> out;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << middle.size()); ++pick) {
    std::vector<Mask> opens{0, full};
    for (std::size_t k = 0; k < middle.size(); ++k)
      if (pick >> k & 1U) opens.push_back(middle[k]);
    try {
      out.push_back(FiniteTopSpace::make(points, std::move(opens)));
    } catch (const Error&) {
    }
  }
  std::sort(out.begin(), out.end(), [](const FiniteTopSpace& a, const FiniteTopSpace& b) {
    return a.opens() < b.opens();
  });
  return out;
}

std::vector<double> uniform_grid(std::size_t steps) {
  if (steps == 0) throw Error(ErrorKind::InvalidArgument, "grid needs at least one step");
  std::vector<double> out;
  for (std::size_t k = 0; k <= steps; ++k)
    out.push_back(static_cast<double>(k) / static_cast<double>(steps));
  return out;
}

// ---------------------------------------------------------------------------
// Example 1

bool is_lower_semicontinuous(const FiniteTopSpace& space, const GridMap& v) {
  check_grid_map(v, space.points());
  for (double a : v) {
    Mask above = 0;
    for (std::size_t x = 0; x < v.size(); ++x)
      if (v[x] > a) above |= Mask{1} << x;
    if (!space.is_open(above)) return false;
  }
  return space.is_open(space.full());
}

GridMap lsc_interior(const FiniteTopSpace& space, const GridMap& u) {
  check_grid_map(u, space.points());
  GridMap v(u.size(), 0.0);
  for (Mask o : space.opens()) {
    if (o == 0) continue;
    double m = 1.0;
    for (std::size_t y = 0; y < u.size(); ++y)
      if (o >> y & 1U) m = std::min(m, u[y]);
    for (std::size_t x = 0; x < u.size(); ++x)
      if (o >> x & 1U) v[x] = std::max(v[x], m);
  }
  return v;
}

GridMap compact_min_interior(const GridMap& v) {
  if (v.empty()) throw Error(ErrorKind::EmptyCarrier, "compact space has no points");
  check_grid_map(v, v.size());
  return GridMap(v.size(), *std::min_element(v.begin(), v.end()));
}

json check_ij_continuity_claims(const FiniteTopSpace& space, std::size_t target_points,
                                const std::vector<double>& grid) {
  if (target_points == 0) throw Error(ErrorKind::EmptyCarrier, "target space has no points");
  const std::size_t nx = space.points();
  const std::size_t ny = target_points;

  std::vector<GridMap> fy;
  for_each_map(ny, grid, [&](const GridMap& v) { fy.push_back(v); });
  std::vector<GridMap> fx;
  for_each_map(nx, grid, [&](const GridMap& u) { fx.push_back(u); });

  // ij: f : X → Y, backward image of J(v) below I(v ∘ f).
  std::size_t ij_maps = 0;
  std::size_t ij_continuous = 0;
  json ij_witness = nullptr;
  for_each_map(nx, indices(ny), [&](const std::vector<std::size_t>& f) {
    ++ij_maps;
    for (const GridMap& v : fy) {
      const double m = *std::min_element(v.begin(), v.end());
      GridMap vf(nx);
      for (std::size_t x = 0; x < nx; ++x) vf[x] = v[f[x]];
      if (!leq_map(GridMap(nx, m), lsc_interior(space, vf))) {
        if (ij_witness.is_null()) ij_witness = json{{"f", map_json(f)}, {"v", grid_json(v)}};
        return;
      }
    }
    ++ij_continuous;
  });

  // ji: f : Y → X, backward image of I(u) below J(u ∘ f).
  std::size_t ji_maps = 0;
  std::size_t ji_continuous = 0;
  std::size_t ji_nonconstant = 0;
  json ji_example = nullptr;
  json ji_rejected = nullptr;
  for_each_map(ny, indices(nx), [&](const std::vector<std::size_t>& f) {
    ++ji_maps;
    for (const GridMap& u : fx) {
      const GridMap iu = lsc_interior(space, u);
      GridMap lhs(ny);
      double m = 1.0;
      for (std::size_t y = 0; y < ny; ++y) {
        lhs[y] = iu[f[y]];
        m = std::min(m, u[f[y]]);
      }
      if (!leq_map(lhs, GridMap(ny, m))) {
        if (!is_constant(f) && ji_rejected.is_null())
          ji_rejected = json{{"f", map_json(f)}, {"u", grid_json(u)}};
        return;
      }
    }
    ++ji_continuous;
    if (!is_constant(f)) {
      ++ji_nonconstant;
      if (ji_example.is_null()) ji_example = json{{"f", map_json(f)}};
    }
  });

  return json{{"space", space.render()},
              {"target_points", target_points},
              {"ij", {{"maps", ij_maps}, {"continuous", ij_continuous}, {"witness", ij_witness}}},
              {"ji",
               {{"maps", ji_maps},
                {"continuous", ji_continuous},
                {"nonconstant_continuous", ji_nonconstant},
                {"nonconstant_example", ji_example},
                {"nonconstant_rejected", ji_rejected}}}};
}

json example1_report(std::size_t max_points, const std::vector<double>& grid) {
  json topologies = json::object();
  std::size_t crisp_checked = 0;
  json crisp_mismatch = nullptr;
  std::size_t lsc_checked = 0;
  json lsc_violation = nullptr;
  std::size_t min_checked = 0;
  json min_violation = nullptr;
  std::size_t ij_maps = 0, ij_failures = 0, ji_maps = 0, ji_continuous = 0, ji_nonconstant = 0;
  json ij_first = nullptr;
  json ji_first = nullptr;

  for (std::size_t n = 1; n <= max_points; ++n) {
    const auto spaces = enumerate_topologies(n);
    topologies[std::to_string(n)] = spaces.size();
    for (const auto& s : spaces) {
      for (Mask m = 0; m <= s.full(); ++m) {
        GridMap u(n);
        for (std::size_t x = 0; x < n; ++x) u[x] = (m >> x & 1U) ? 1.0 : 0.0;
        const GridMap v = lsc_interior(s, u);
        const Mask classical = s.interior(m);
        ++crisp_checked;
        for (std::size_t x = 0; x < n; ++x)
          if (v[x] != ((classical >> x & 1U) ? 1.0 : 0.0) && crisp_mismatch.is_null())
            crisp_mismatch = json{{"space", s.render()}, {"u", grid_json(u)}};
      }
      if (lsc_violation.is_null()) {
        json w = grid_axiom_check(n, grid, [&](const GridMap& u) { return lsc_interior(s, u); },
                                  lsc_checked);
        if (!w.is_null()) lsc_violation = json{{"space", s.render()}, {"violation", w}};
      }
      for (std::size_t ny = 1; ny <= max_points; ++ny) {
        const json r = check_ij_continuity_claims(s, ny, grid);
        ij_maps += r["ij"]["maps"].get<std::size_t>();
        ij_failures += r["ij"]["maps"].get<std::size_t>() - r["ij"]["continuous"].get<std::size_t>();
        if (ij_first.is_null() && !r["ij"]["witness"].is_null())
          ij_first = json{{"space", s.render()}, {"target_points", ny}, {"witness", r["ij"]["witness"]}};
        ji_maps += r["ji"]["maps"].get<std::size_t>();
        ji_continuous += r["ji"]["continuous"].get<std::size_t>();
        ji_nonconstant += r["ji"]["nonconstant_continuous"].get<std::size_t>();
        if (ji_first.is_null() && !r["ji"]["nonconstant_example"].is_null())
          ji_first = json{{"space", s.render()},
                          {"source_points", ny},
                          {"f", r["ji"]["nonconstant_example"]["f"]}};
      }
    }
    if (min_violation.is_null()) {
      json w = grid_axiom_check(n, grid, compact_min_interior, min_checked);
      if (!w.is_null()) min_violation = json{{"points", n}, {"violation", w}};
    }
  }
  return json{
      {"example", 1},
      {"grid", grid},
      {"topologies", topologies},
      {"crisp_agreement", {{"checked", crisp_checked}, {"mismatch", crisp_mismatch}}},
      {"lsc_interior_axioms", {{"checked", lsc_checked}, {"violation", lsc_violation}}},
      {"compact_min_interior_axioms", {{"checked", min_checked}, {"violation", min_violation}}},
      {"ij_continuity", {{"maps", ij_maps}, {"failures", ij_failures}, {"first_failure", ij_first}}},
      {"ji_continuity",
       {{"maps", ji_maps},
        {"continuous", ji_continuous},
        {"nonconstant_continuous", ji_nonconstant},
        {"first_nonconstant", ji_first}}},
      {"ok", crisp_mismatch.is_null() && lsc_violation.is_null() && min_violation.is_null() &&
                 ij_failures == 0}};
}

// ---------------------------------------------------------------------------
// Example 2

std::string PowerIndex::label() const { return infinite ? "inf" : std::to_string(n); }

double power_interior(PowerIndex index, double t) {
  if (!index.infinite && index.n == 0)
    throw Error(ErrorKind::InvalidArgument, "exponent must be at least 1");
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "value outside [0,1]", {std::to_string(t)});
  if (index.infinite) return t == 1.0 ? 1.0 : 0.0;
  return std::pow(t, static_cast<double>(index.n));
}

PowerScan example2_idempotency_scan(unsigned n_max, std::size_t grid_points) {
  if (grid_points < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  if (n_max == 0) throw Error(ErrorKind::InvalidArgument, "n_max must be at least 1");
  const std::vector<double> grid = uniform_grid(grid_points - 1);
  PowerScan scan;
  scan.grid_points = grid.size();
  std::vector<PowerIndex> family;
  for (unsigned n = 1; n <= n_max; ++n) family.push_back({n, false});
  family.push_back({1, true});
  for (const PowerIndex& p : family) {
    PowerScanEntry e;
    e.index = p;
    bool ok = std::abs(power_interior(p, 1.0) - 1.0) <= kTolerance;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double v = power_interior(p, grid[k]);
      ok = ok && v <= grid[k] + kTolerance;
      if (k + 1 < grid.size()) ok = ok && v <= power_interior(p, grid[k + 1]) + kTolerance;
    }
    e.axioms_hold = ok;
    e.idempotent = true;
    for (double t : grid) {
      const double v = power_interior(p, t);
      if (std::abs(power_interior(p, v) - v) > kTolerance) {
        e.idempotent = false;
        e.witness = t;
        break;
      }
    }
    if (e.idempotent) scan.idempotent.push_back(p.label());
    scan.entries.push_back(e);
  }
  return scan;
}

json to_json(const PowerScan& scan) {
  json entries = json::array();
  for (const auto& e : scan.entries) {
    json j{{"n", e.index.label()}, {"axioms_hold", e.axioms_hold}, {"idempotent", e.idempotent}};
    if (e.witness) {
      const double v = power_interior(e.index, *e.witness);
      j["witness"] = {{"t", *e.witness}, {"i(t)", v}, {"i(i(t))", power_interior(e.index, v)}};
    }
    entries.push_back(j);
  }
  return json{{"example", 2},
              {"grid_points", scan.grid_points},
              {"tolerance", kTolerance},
              {"entries", entries},
              {"idempotent", scan.idempotent}};
}

// ---------------------------------------------------------------------------
// Example 3

namespace {

json closure_axioms(const FuzzyOperator& c) {
  const Ground& g = c.ground();
  const auto& t = c.table();
  const Code n = static_cast<Code>(t.size());
  json extensive = {{"holds", true}};
  json monotone = {{"holds", true}};
  json idempotent = {{"holds", true}};
  for (Code u = 0; u < n; ++u) {
    const FuzzySet fu = g.decode(u);
    if (extensive["holds"] && !g.leq(fu, g.decode(t[u])))
      extensive = {{"holds", false}, {"u", io::to_json(g, fu)}};
    if (idempotent["holds"] && t[t[u]] != t[u])
      idempotent = {{"holds", false}, {"u", io::to_json(g, fu)}};
    for (Code v = 0; v < n && monotone["holds"]; ++v) {
      const FuzzySet fv = g.decode(v);
      if (g.leq(fu, fv) && !g.leq(g.decode(t[u]), g.decode(t[v])))
        monotone = {{"holds", false}, {"u", io::to_json(g, fu)}, {"v", io::to_json(g, fv)}};
    }
  }
  return json{{"extensive", extensive}, {"monotone", monotone}, {"idempotent", idempotent}};
}

}  // namespace

json example3_roundtrip(const GlMonoid& m, const LTopology& t) {
  const Ground& g = t.ground();
  const InteriorMap i = interior_from_topology(t);
  json opens = json::array();
  for (const auto& o : t.opens()) opens.push_back(io::to_json(g, o));
  json closures = json::object();
  for (auto [mode, name] : {std::pair{ClosureMode::literal, "literal"},
                            std::pair{ClosureMode::extensional, "extensional"}}) {
    const FuzzyOperator c = closure_from_topology(t, m, mode);
    json entry{{"table", io::operator_table_json(c)}};
    const json axioms = closure_axioms(c);
    for (const auto& [k, v] : axioms.items()) entry[k] = v;
    closures[name] = entry;
  }
  return json{{"example", 3},
              {"ground", io::to_json(g)},
              {"opens", opens},
              {"join_closed", t.join_closed()},
              {"interior", io::operator_table_json(i.op())},
              {"closures", closures}};
}

LTopology example3_default_topology() {
  const Ground g({"p1"}, builtin_chain(ChainKind::godel, 3).algebra_ptr());
  return LTopology::make(g, {g.bottom(), g.top()});
}

json example3_sweep(const SearchBounds& bounds) {
  std::size_t grounds = 0;
  std::size_t topologies = 0;
  json summary = json::object();
  std::map<std::string, std::pair<std::size_t, json>> failures{{"literal", {0, nullptr}},
                                                               {"extensional", {0, nullptr}}};
  for (const Ground& g : enumerate_grounds(bounds)) {
    std::optional<GlMonoid> m;
    try {
      m = GlMonoid::validate(g.algebra_ptr());
    } catch (const Error&) {
      continue;
    }
    if (!g.materializable() || g.powerset_size() > 18) continue;
    ++grounds;
    const PowersetTables pt(g);
    std::vector<Code> middle;
    for (Code c = 0; c < pt.size(); ++c)
      if (c != pt.top() && c != pt.bottom()) middle.push_back(c);
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << middle.size()); ++pick) {
      std::vector<Code> opens{pt.bottom(), pt.top()};
      for (std::size_t k = 0; k < middle.size(); ++k)
        if (pick >> k & 1U) opens.push_back(middle[k]);
      std::sort(opens.begin(), opens.end());
      auto has = [&](Code c) { return std::binary_search(opens.begin(), opens.end(), c); };
      bool closed = true;
      for (Code a : opens)
        for (Code b : opens) closed = closed && has(pt.join(a, b)) && has(pt.meet(a, b));
      if (!closed) continue;
      ++topologies;
      std::vector<FuzzySet> sets;
      for (Code c : opens) sets.push_back(g.decode(c));
      const LTopology t = LTopology::make(g, sets);
      for (auto [mode, name] : {std::pair{ClosureMode::literal, "literal"},
                                std::pair{ClosureMode::extensional, "extensional"}}) {
        const FuzzyOperator c = closure_from_topology(t, *m, mode);
        for (Code u = 0; u < pt.size(); ++u) {
          if (pt.leq(u, c.table()[u])) continue;
          auto& [count, first] = failures[name];
          ++count;
          if (first.is_null()) {
            json os = json::array();
            for (const auto& o : sets) os.push_back(io::to_json(g, o));
            first = json{{"ground", io::to_json(g)}, {"opens", os}, {"u", io::to_json(g, g.decode(u))}};
          }
          break;
        }
      }
    }
  }
  for (auto& [name, f] : failures)
    summary[name] = json{{"non_extensive_topologies", f.first}, {"first", f.second}};
  return json{{"grounds", grounds}, {"topologies", topologies}, {"closures", summary}};
}

}  // namespace fuzzint::examples
