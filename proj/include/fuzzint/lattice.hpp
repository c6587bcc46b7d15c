#ifndef FUZZINT_LATTICE_HPP
#define FUZZINT_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fuzzint {

/// Dense index of a lattice element. Names only appear at the I/O boundary.
using Elem = std::uint16_t;

struct LatticeOptions {
  std::size_t max_size = 64;
};

/// A triple (x, y, z) on which a distributive law fails.
/// meet_over_join: (x ∨ y) ∧ z != (x ∧ z) ∨ (y ∧ z); otherwise the dual law.
struct DistributivityWitness {
  Elem x = 0;
  Elem y = 0;
  Elem z = 0;
  bool meet_over_join = true;
};

/// A finite complete lattice with precomputed join/meet tables.
///
/// Instances are immutable once built; every factory validates the partial
/// order axioms and the existence of all binary bounds. Distributivity is
/// recorded as a flag (with a witness) rather than enforced, since a
/// quasi-monoidal lattice need not be distributive.
class FiniteLattice {
 public:
  using OrderPair = std::pair<std::string, std::string>;

  /// Builds from named elements and a list of pairs (a, b) meaning a ≤ b.
  /// With `closure` the reflexive-transitive closure of the pairs is taken,
  /// so covering pairs suffice; without it the pairs must already form the
  /// full order relation.
  static FiniteLattice from_relation(std::vector<std::string> names,
                                     std::span<const OrderPair> leq, bool closure,
                                     const LatticeOptions& options = {});

  /// Builds from a dense n*n boolean matrix (row a, column b is a ≤ b).
  static FiniteLattice from_matrix(std::vector<std::string> names, std::vector<bool> leq,
                                   const LatticeOptions& options = {});

  /// The chain 0 < 1 < ... < n-1 with the given names.
  static FiniteLattice chain(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  Elem top() const noexcept { return top_; }
  Elem bottom() const noexcept { return bottom_; }

  bool leq(Elem a, Elem b) const noexcept { return leq_[index(a, b)] != 0; }
  Elem join(Elem a, Elem b) const noexcept { return join_[index(a, b)]; }
  Elem meet(Elem a, Elem b) const noexcept { return meet_[index(a, b)]; }

  /// Join/meet of an arbitrary subset; join(∅) = ⊥, meet(∅) = ⊤.
  Elem join(std::span<const Elem> subset) const;
  Elem meet(std::span<const Elem> subset) const;

  Elem index_of(std::string_view name) const;
  const std::string& name(Elem e) const { return names_.at(e); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::vector<std::string> names_of(std::span<const Elem> elems) const;

  /// Elements ordered so that a < b implies a appears before b.
  const std::vector<Elem>& linear_extension() const noexcept { return linear_; }
  /// Elements covering e (e < c with nothing strictly between).
  const std::vector<Elem>& upper_covers(Elem e) const { return upper_covers_.at(e); }

  bool distributive() const noexcept { return !distributivity_witness_.has_value(); }
  const std::optional<DistributivityWitness>& distributivity_witness() const noexcept {
    return distributivity_witness_;
  }

  bool is_chain() const noexcept;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  FiniteLattice() = default;
  std::size_t index(Elem a, Elem b) const noexcept { return std::size_t{a} * names_.size() + b; }
  void build(const LatticeOptions& options);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> by_name_;
  std::vector<char> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<Elem> linear_;
  std::vector<std::vector<Elem>> upper_covers_;
  Elem top_ = 0;
  Elem bottom_ = 0;
  std::optional<DistributivityWitness> distributivity_witness_;
};

/// Checks the frame laws (⋁A) ∧ α = ⋁{a ∧ α} and (⋀A) ∨ α = ⋀{a ∨ α}.
/// On a finite lattice both reduce to the binary distributive laws, which is
/// what this evaluates; returns the first failing triple in index order.
std::optional<DistributivityWitness> find_distributivity_violation(const FiniteLattice& lattice);

}  // namespace fuzzint

#endif  // FUZZINT_LATTICE_HPP
