#ifndef FUZZINT_EXAMPLES_HPP
#define FUZZINT_EXAMPLES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzint/enumerate.hpp"
#include "fuzzint/interior.hpp"
#include "fuzzint/io.hpp"
#include "fuzzint/monoid.hpp"

namespace fuzzint::examples {

inline constexpr double kTolerance = 1e-12;

/// Subsets of {0, …, n-1} as bitmasks.
using Mask = std::uint32_t;

/// Finite topological space; points are named p1, …, pn.
class FiniteTopSpace {
 public:
  /// Throws InvalidTopology when ∅ or the full set is missing or the family
  /// is not closed under pairwise unions and intersections.
  static FiniteTopSpace make(std::size_t points, std::vector<Mask> opens);
  static FiniteTopSpace discrete(std::size_t points);
  static FiniteTopSpace indiscrete(std::size_t points);

  std::size_t points() const noexcept { return points_; }
  Mask full() const noexcept { return static_cast<Mask>((Mask{1} << points_) - 1); }
  const std::vector<Mask>& opens() const noexcept { return opens_; }
  bool is_open(Mask m) const;
  /// Largest open subset of m.
  Mask interior(Mask m) const;
  /// "{{},{p1},{p1,p2}}"
  std::string render() const;

 private:
  FiniteTopSpace(std::size_t points, std::vector<Mask> opens)
      : points_(points), opens_(std::move(opens)) {}
  std::size_t points_;
  std::vector<Mask> opens_;
};

/// Every topology on n points (n ≤ 4), ordered by their sorted open lists.
std::vector<FiniteTopSpace> enumerate_topologies(std::size_t points);

/// steps+1 equidistant values k/steps.
std::vector<double> uniform_grid(std::size_t steps);

using GridMap = std::vector<double>;

/// v is lower semi-continuous: every {x | v(x) > a} is open.
bool is_lower_semicontinuous(const FiniteTopSpace& space, const GridMap& v);

/// Largest lower semi-continuous v ≤ u: v(x) = max over open U ∋ x of min_U u.
GridMap lsc_interior(const FiniteTopSpace& space, const GridMap& u);

/// Constant map at min v. Throws EmptyCarrier.
GridMap compact_min_interior(const GridMap& v);

/// Continuity between a topological space X and finite compact spaces Y with
/// `target_points` points, over fuzzy sets valued in `grid`.
/// "ij": every f : X → Y is continuous from lsc_interior to
/// compact_min_interior (asserted).
/// "ji": maps f : Y → X continuous from compact_min_interior to
/// lsc_interior (counted, including non-constant ones).
io::json check_ij_continuity_claims(const FiniteTopSpace& space, std::size_t target_points,
                                    const std::vector<double>& grid);

/// Full Example 1 report over all topologies on ≤ max_points points.
io::json example1_report(std::size_t max_points, const std::vector<double>& grid);

/// Exponent of i_n(t) = tⁿ; `infinite` selects the pointwise limit.
struct PowerIndex {
  unsigned n = 1;
  bool infinite = false;
  std::string label() const;
};

/// tⁿ, or the indicator of t = 1 for n = ∞. Throws InvalidArgument for n = 0
/// or t outside [0,1].
double power_interior(PowerIndex index, double t);

struct PowerScanEntry {
  PowerIndex index;
  bool axioms_hold = false;
  bool idempotent = false;
  std::optional<double> witness;  // first grid t with i(i(t)) ≠ i(t)
};

struct PowerScan {
  std::size_t grid_points = 0;
  std::vector<PowerScanEntry> entries;  // n = 1 … n_max, then ∞
  std::vector<std::string> idempotent;  // labels
};

/// i_n for n = 1 … n_max and ∞ on a grid of `grid_points` equidistant points
/// (at least 2): I1–I3 and idempotency within kTolerance.
PowerScan example2_idempotency_scan(unsigned n_max, std::size_t grid_points);
io::json to_json(const PowerScan& scan);

/// Interior and both closure tables of τ with the closure axioms each mode
/// satisfies. Throws NotGLGround when m does not match τ's ground.
io::json example3_roundtrip(const GlMonoid& m, const LTopology& t);

/// Gödel C3 on one point with τ = {0, 1}.
LTopology example3_default_topology();

/// Every family τ ⊆ L^X containing 0_X and 1_X and closed under binary joins
/// and meets, over the GL grounds within bounds; counts extensionality
/// failures of each closure mode.
io::json example3_sweep(const SearchBounds& bounds);

}  // namespace fuzzint::examples

#endif  // FUZZINT_EXAMPLES_HPP
