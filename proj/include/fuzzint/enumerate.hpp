#ifndef FUZZINT_ENUMERATE_HPP
#define FUZZINT_ENUMERATE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzint/interior.hpp"
#include "fuzzint/monoid.hpp"
#include "fuzzint/powerset.hpp"

namespace fuzzint {

/// Limits for every exhaustive loop.
struct SearchBounds {
  std::size_t max_points = 2;    // |X|, |Y|, |Z|
  std::size_t max_lattice = 3;   // |L|
  double max_tables = 1e9;       // cap on the naive count |L|^(|X|·|L|^|X|)
  std::chrono::milliseconds budget{60000};
  std::string family = "gl";     // "gl" or "cqml"
  std::size_t workers = 1;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// Parses "max_x=2,max_l=3,max_tables=1e9,budget=60,family=gl,workers=1" on
/// top of `base`. Budget accepts a plain number of seconds or a "s"/"ms"
/// suffix. Throws InvalidArgument.
SearchBounds parse_bounds(std::string_view text, SearchBounds base = {});
/// Defaults overridden by FUZZINT_BOUNDS when set.
SearchBounds bounds_from_env();
/// Throws InvalidArgument unless every field is positive and the family known.
void check_bounds(const SearchBounds& bounds);
std::string format_budget(std::chrono::milliseconds budget);

/// Algebras within bounds, deterministic order. Family "gl": Gödel chains of
/// length 2..max_lattice, Łukasiewicz chains of length 3..max_lattice, and the
/// four-element Boolean algebra with ⊗ = ∧ when max_lattice ≥ 4. Family
/// "cqml" appends the ∨-tensor variant of each of those lattices.
std::vector<std::shared_ptr<const Cqml>> algebra_catalog(const SearchBounds& bounds);

/// Grounds with 1..max_points points named p1, p2, ... over each catalog
/// algebra, ordered by point count first.
std::vector<Ground> enumerate_grounds(const SearchBounds& bounds);

/// Code-level view of a materialized L^X.
class PowersetTables {
 public:
  explicit PowersetTables(Ground ground);

  const Ground& ground() const noexcept { return ground_; }
  Code size() const noexcept { return n_; }
  Code top() const noexcept { return top_; }
  Code bottom() const noexcept { return bottom_; }
  bool leq(Code a, Code b) const noexcept { return leq_[std::size_t{a} * n_ + b] != 0; }
  Code join(Code a, Code b) const;
  Code meet(Code a, Code b) const;
  /// Codes ordered so that u < v implies u comes first.
  const std::vector<Code>& linear_extension() const noexcept { return order_; }
  const std::vector<Code>& lower_covers(Code u) const { return lower_covers_[u]; }
  /// Table order: a ≤ b pointwise for every code.
  bool table_leq(const std::vector<Code>& a, const std::vector<Code>& b) const;
  std::vector<Code> table_join(const std::vector<Code>& a, const std::vector<Code>& b) const;
  std::vector<Code> table_meet(const std::vector<Code>& a, const std::vector<Code>& b) const;
  /// I1–I3 on a code table.
  bool is_interior_table(const std::vector<Code>& t) const;

 private:
  Ground ground_;
  Code n_ = 0;
  Code top_ = 0;
  Code bottom_ = 0;
  std::vector<char> leq_;
  std::vector<Code> join_;
  std::vector<Code> meet_;
  std::vector<Code> order_;
  std::vector<std::vector<Code>> lower_covers_;
};

/// |L|^(|X|·|L|^|X|) as a double (inf on overflow).
double naive_operator_count(const Ground& ground);

/// Every interior table on the ground, each exactly once, in lexicographic
/// order of the table read along the linear extension. Throws BoundsExceeded
/// when the naive count exceeds bounds.max_tables or the ground is not
/// materializable.
std::vector<std::vector<Code>> enumerate_interior_tables(const Ground& ground,
                                                         const SearchBounds& bounds = {});
std::vector<InteriorMap> enumerate_interior_maps(const Ground& ground,
                                                 const SearchBounds& bounds = {});

/// Every valid φᵒᵖ : M → L (preserving ⊤, joins and ⊗), lexicographic.
std::vector<std::vector<Elem>> enumerate_basis_maps(const Cqml& m, const Cqml& l);
/// Every ground morphism domain → codomain: point maps in lexicographic
/// order of their image vectors, then basis maps.
std::vector<GroundMorphism> enumerate_morphisms(const Ground& domain, const Ground& codomain);

/// Code tables of a morphism's powerset operators.
struct MorphismTables {
  std::vector<Code> backward;       // M^Y → L^X
  std::vector<Code> right_adjoint;  // L^X → M^Y
};
MorphismTables morphism_tables(const GroundMorphism& g);

/// Wall-clock budget; expired() is cheap enough for inner loops.
class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget);
  bool expired() const;
  /// Throws BoundsExceeded when expired.
  void check() const;

 private:
  std::chrono::steady_clock::time_point end_;
};

}  // namespace fuzzint

#endif  // FUZZINT_ENUMERATE_HPP
