// Naive reference implementations used as test oracles. Each one follows the
// defining formula by brute force and shares no algorithm with the library.
#ifndef FUZZINT_TESTS_ORACLES_HPP
#define FUZZINT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fuzzint/continuity.hpp"
#include "fuzzint/examples.hpp"
#include "fuzzint/interior.hpp"
#include "fuzzint/powerset.hpp"

namespace oracle {

using namespace fuzzint;

/// Chain element k of n as the rational k/(n-1), scaled to integers 0..n-1.
inline std::size_t godel_residuum(std::size_t a, std::size_t b, std::size_t n) {
  (void)n;
  return a <= b ? n - 1 : b;
}

inline std::size_t lukasiewicz_residuum(std::size_t a, std::size_t b, std::size_t n) {
  return std::min(n - 1, n - 1 - a + b);
}

inline std::size_t lukasiewicz_tensor(std::size_t a, std::size_t b, std::size_t n) {
  return a + b >= n - 1 ? a + b - (n - 1) : 0;
}

inline std::vector<FuzzySet> all_sets(const Ground& g) {
  std::vector<FuzzySet> out;
  const std::size_t n = g.lattice().size();
  std::vector<Elem> v(g.points(), 0);
  while (true) {
    out.push_back(FuzzySet{v});
    std::size_t k = v.size();
    while (k > 0 && ++v[k - 1] == n) v[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline bool leq(const FiniteLattice& l, const FuzzySet& a, const FuzzySet& b) {
  for (std::size_t x = 0; x < a.values.size(); ++x)
    if (!l.leq(a.values[x], b.values[x])) return false;
  return true;
}

/// Least upper bound in the pointwise order, by scanning all candidates.
inline FuzzySet lub(const Ground& g, const std::vector<FuzzySet>& family) {
  std::optional<FuzzySet> best;
  for (const FuzzySet& c : all_sets(g)) {
    bool upper = true;
    for (const auto& f : family) upper = upper && leq(g.lattice(), f, c);
    if (!upper) continue;
    if (!best || leq(g.lattice(), c, *best)) best = c;
  }
  return *best;
}

inline FuzzySet glb(const Ground& g, const std::vector<FuzzySet>& family) {
  std::optional<FuzzySet> best;
  for (const FuzzySet& c : all_sets(g)) {
    bool lower = true;
    for (const auto& f : family) lower = lower && leq(g.lattice(), c, f);
    if (!lower) continue;
    if (!best || leq(g.lattice(), *best, c)) best = c;
  }
  return *best;
}

/// φᵒᵖ(b(f(x))) pointwise.
inline FuzzySet backward(const GroundMorphism& g, const FuzzySet& b) {
  FuzzySet out{std::vector<Elem>(g.domain().points())};
  for (std::size_t x = 0; x < out.values.size(); ++x) out.values[x] = g.phi_op(b.values[g.f(x)]);
  return out;
}

/// Largest v with backward(v) ≤ u.
inline FuzzySet right_adjoint(const GroundMorphism& g, const FuzzySet& u) {
  std::vector<FuzzySet> below;
  for (const auto& v : all_sets(g.codomain()))
    if (leq(g.domain().lattice(), backward(g, v), u)) below.push_back(v);
  return lub(g.codomain(), below);
}

/// Smallest v with u ≤ backward(v).
inline FuzzySet left_adjoint(const GroundMorphism& g, const FuzzySet& u) {
  std::vector<FuzzySet> above;
  for (const auto& v : all_sets(g.codomain()))
    if (leq(g.domain().lattice(), u, backward(g, v))) above.push_back(v);
  return glb(g.codomain(), above);
}

using Op = std::function<FuzzySet(const FuzzySet&)>;

inline bool satisfies_axioms(const Ground& g, const Op& op) {
  const auto all = all_sets(g);
  const FiniteLattice& l = g.lattice();
  for (const auto& u : all)
    if (!leq(l, op(u), u)) return false;
  for (const auto& u : all)
    for (const auto& v : all)
      if (leq(l, u, v) && !leq(l, op(u), op(v))) return false;
  return op(g.top()) == g.top();
}

/// Generate-and-filter over every map L^X → L^X (only for tiny grounds).
inline std::size_t count_interior_maps(const Ground& g) {
  const auto all = all_sets(g);
  const std::size_t n = all.size();
  std::vector<std::size_t> img(n, 0);
  std::size_t count = 0;
  while (true) {
    const Op op = [&](const FuzzySet& u) {
      for (std::size_t k = 0; k < n; ++k)
        if (all[k] == u) return all[img[k]];
      return u;
    };
    if (satisfies_axioms(g, op)) ++count;
    std::size_t k = n;
    while (k > 0 && ++img[k - 1] == n) img[--k] = 0;
    if (k == 0) break;
  }
  return count;
}

/// Continuity straight from the defining inequality.
inline bool continuous(const GroundMorphism& g, const Op& src, const Op& dst) {
  for (const auto& v : all_sets(g.codomain()))
    if (!leq(g.domain().lattice(), backward(g, dst(v)), src(backward(g, v)))) return false;
  return true;
}

inline bool open(const GroundMorphism& g, const Op& src, const Op& dst) {
  for (const auto& v : all_sets(g.codomain()))
    if (!leq(g.domain().lattice(), src(backward(g, v)), backward(g, dst(v)))) return false;
  return true;
}

inline Op as_op(const InteriorMap& i) {
  return [i](const FuzzySet& u) { return i(u); };
}

/// Initiality of `lift` tested directly: for every test ground, morphism h
/// into the source domain and interior map on the test ground, h is
/// continuous into the lift iff every composite is continuous.
inline std::optional<std::pair<GroundMorphism, InteriorMap>> initiality_counterexample(
    const StructuredSource& s, const InteriorMap& lift, const std::vector<Ground>& tests) {
  for (const Ground& z : tests) {
    const auto interiors = enumerate_interior_maps(z, SearchBounds{});
    for (const GroundMorphism& h : enumerate_morphisms(z, s.domain()))
      for (const InteriorMap& iz : interiors) {
        const bool lhs = continuous(h, as_op(iz), as_op(lift));
        bool rhs = true;
        for (const auto& m : s.members())
          rhs = rhs && continuous(compose(m.morphism, h), as_op(iz), as_op(m.target.interior));
        if (lhs != rhs) return std::make_pair(h, iz);
      }
  }
  return std::nullopt;
}

/// Largest lower semi-continuous grid map below u, by trying every grid map.
inline examples::GridMap lsc_interior(const examples::FiniteTopSpace& s, const examples::GridMap& u,
                                      const std::vector<double>& grid) {
  const std::size_t n = u.size();
  examples::GridMap best(n, 0.0);
  std::vector<std::size_t> d(n, 0);
  while (true) {
    examples::GridMap v(n);
    for (std::size_t x = 0; x < n; ++x) v[x] = grid[d[x]];
    bool below = true;
    for (std::size_t x = 0; x < n; ++x) below = below && v[x] <= u[x];
    if (below && examples::is_lower_semicontinuous(s, v))
      for (std::size_t x = 0; x < n; ++x) best[x] = std::max(best[x], v[x]);
    std::size_t k = n;
    while (k > 0 && ++d[k - 1] == grid.size()) d[--k] = 0;
    if (k == 0) break;
  }
  return best;
}

}  // namespace oracle

#endif  // FUZZINT_TESTS_ORACLES_HPP
