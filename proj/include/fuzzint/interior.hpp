#ifndef FUZZINT_INTERIOR_HPP
#define FUZZINT_INTERIOR_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fuzzint/monoid.hpp"
#include "fuzzint/powerset.hpp"

namespace fuzzint {

/// A map L^X → L^X on a ground, either as a table indexed by Code (when the
/// powerset is materializable) or as a rule.
class FuzzyOperator {
 public:
  using Rule = std::function<FuzzySet(const FuzzySet&)>;

  /// `table[c]` is the code of the image of decode(c).
  static FuzzyOperator from_table(Ground ground, std::vector<Code> table);
  /// Tabulates the rule when the ground is materializable; keeps it otherwise.
  static FuzzyOperator from_rule(Ground ground, Rule rule);

  const Ground& ground() const noexcept { return ground_; }
  bool materialized() const noexcept { return !table_.empty(); }
  const std::vector<Code>& table() const noexcept { return table_; }

  FuzzySet operator()(const FuzzySet& u) const;
  Code operator()(Code u) const { return table_[u]; }

  friend bool operator==(const FuzzyOperator& a, const FuzzyOperator& b) {
    return a.ground_ == b.ground_ && a.materialized() && b.materialized() && a.table_ == b.table_;
  }

 private:
  FuzzyOperator(Ground ground, std::vector<Code> table, Rule rule)
      : ground_(std::move(ground)), table_(std::move(table)), rule_(std::move(rule)) {}
  Ground ground_;
  std::vector<Code> table_;
  Rule rule_;
};

enum class InteriorAxiom { contraction, monotonicity, upper_bound };

struct AxiomViolation {
  InteriorAxiom axiom;
  FuzzySet u;
  std::optional<FuzzySet> v;  // the larger argument for monotonicity
};

/// I1 i(u) ≤ u, I2 u ≤ v ⇒ i(u) ≤ i(v), I3 i(1_X) = 1_X, reported in that
/// order. Materialized operators are checked exhaustively (monotonicity over
/// covering pairs, which suffices on a finite poset); rule-backed operators
/// on large grounds are checked on a deterministic sample.
std::optional<AxiomViolation> check_interior_axioms(const FuzzyOperator& op);

/// An operator known to satisfy I1–I3.
class InteriorMap {
 public:
  /// Throws Error{NotInterior} with the violated axiom and witness.
  static InteriorMap validate(FuzzyOperator op);

  const FuzzyOperator& op() const noexcept { return op_; }
  const Ground& ground() const noexcept { return op_.ground(); }
  bool materialized() const noexcept { return op_.materialized(); }
  const std::vector<Code>& table() const noexcept { return op_.table(); }
  FuzzySet operator()(const FuzzySet& u) const { return op_(u); }
  Code operator()(Code u) const { return op_(u); }

  friend bool operator==(const InteriorMap& a, const InteriorMap& b) { return a.op_ == b.op_; }

 private:
  explicit InteriorMap(FuzzyOperator op) : op_(std::move(op)) {}
  FuzzyOperator op_;
};

std::string to_string(InteriorAxiom axiom);

/// Pointwise join/meet of a nonempty family on one ground.
InteriorMap join_interiors(std::span<const InteriorMap> family);
InteriorMap meet_interiors(std::span<const InteriorMap> family);

/// Identity: the largest interior map.
InteriorMap discrete(const Ground& ground);
/// 1_X ↦ 1_X and every other u ↦ 0_X: the smallest interior map.
InteriorMap least(const Ground& ground);
/// The map u ≠ 0_X ↦ 1_X, 0_X ↦ 0_X. It is not contractive whenever L has an
/// element strictly between ⊥ and ⊤ (or X has two points); kept as an
/// operator so that failure can be demonstrated.
FuzzyOperator trivial_literal(const Ground& ground);

/// Result of an exhaustive predicate: `witness` lists the arguments of the
/// first failure (empty when the predicate holds).
struct Witnessed {
  bool holds = true;
  std::vector<FuzzySet> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// i(i(u)) = i(u) for all u.
Witnessed is_idempotent(const InteriorMap& i);
/// i(u ∧ v) = i(u) ∧ i(v) for all u, v.
Witnessed is_productive(const InteriorMap& i);
/// i(⋀ F) = ⋀ i(F) for every family F ⊆ L^X. Exhaustive over all families
/// when |L^X| ≤ 16; otherwise over the empty family and all pairs, to which
/// arbitrary meets reduce on a finite lattice.
Witnessed is_fully_productive(const InteriorMap& i);

/// Fixed points {u | i(u) = u} in code order.
std::vector<FuzzySet> open_sets(const InteriorMap& i);

/// A family τ ⊆ L^X containing 1_X. Join-closure is recorded, not required.
class LTopology {
 public:
  /// Throws TopMissingFromTopology when 1_X ∉ τ. Duplicates are dropped and
  /// opens sorted by code.
  static LTopology make(Ground ground, std::vector<FuzzySet> opens);

  const Ground& ground() const noexcept { return ground_; }
  const std::vector<FuzzySet>& opens() const noexcept { return opens_; }
  bool join_closed() const noexcept { return join_closed_; }

 private:
  LTopology(Ground ground, std::vector<FuzzySet> opens, bool join_closed)
      : ground_(std::move(ground)), opens_(std::move(opens)), join_closed_(join_closed) {}
  Ground ground_;
  std::vector<FuzzySet> opens_;
  bool join_closed_ = false;
};

/// i(u) = ⋁{v ∈ τ | v ≤ u}.
InteriorMap interior_from_topology(const LTopology& t);

enum class ClosureMode {
  literal,      // ⋀{v → 0_X | v ∈ τ, u ≤ v}
  extensional,  // ⋀{v → 0_X | v ∈ τ, u ≤ v → 0_X}
};

/// Closure derived from τ through the pointwise residuum of `m`. Throws
/// NotGLGround unless m's lattice is the lattice of the topology's ground.
FuzzyOperator closure_from_topology(const LTopology& t, const GlMonoid& m, ClosureMode mode);

}  // namespace fuzzint

#endif  // FUZZINT_INTERIOR_HPP
