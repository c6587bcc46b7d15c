#ifndef FUZZINT_MONOID_HPP
#define FUZZINT_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fuzzint/lattice.hpp"

namespace fuzzint {

/// Complete quasi-monoidal lattice: a finite lattice with an isotone tensor
/// for which ⊤ ⊗ ⊤ = ⊤.
class Cqml {
 public:
  /// Validates isotonicity and idempotency of ⊤. `tensor` is row-major
  /// (a * n + b). Throws Error{NotIsotone|TopNotIdempotent|IncompleteTable}.
  static Cqml validate(std::shared_ptr<const FiniteLattice> lattice, std::vector<Elem> tensor,
                       std::string label = {});

  /// The lattice with ⊗ = ∧ (always a CQML).
  static Cqml with_meet(std::shared_ptr<const FiniteLattice> lattice, std::string label = {});
  /// The lattice with ⊗ = ∨ (a CQML that is not integral).
  static Cqml with_join(std::shared_ptr<const FiniteLattice> lattice, std::string label = {});

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const FiniteLattice>& lattice_ptr() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_->size(); }
  Elem tensor(Elem a, Elem b) const noexcept { return tensor_[std::size_t{a} * size() + b]; }
  const std::vector<Elem>& tensor_table() const noexcept { return tensor_; }
  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const Cqml& a, const Cqml& b) {
    return *a.lattice_ == *b.lattice_ && a.tensor_ == b.tensor_;
  }

 private:
  Cqml() = default;
  std::shared_ptr<const FiniteLattice> lattice_;
  std::vector<Elem> tensor_;
  std::string label_;
};

struct GlOptions {
  /// Join-distributivity of ⊗ is checked over every subset up to this many
  /// elements; above it, over the empty family, all pairs and a sample.
  std::size_t exhaustive_subset_limit = 12;
  std::size_t sampled_families = 512;
  std::uint64_t seed = 0x5eedf00dULL;
};

/// GL-monoid: commutative, associative, integral, zero-preserving,
/// join-distributive and divisible tensor on a distributive lattice, with its
/// residuum α → β = ⋁{λ | α ⊗ λ ≤ β} precomputed.
class GlMonoid {
 public:
  static GlMonoid validate(std::shared_ptr<const Cqml> cqml, const GlOptions& options = {});
  static GlMonoid validate(Cqml cqml, const GlOptions& options = {}) {
    return validate(std::make_shared<const Cqml>(std::move(cqml)), options);
  }

  const Cqml& algebra() const noexcept { return *cqml_; }
  const std::shared_ptr<const Cqml>& algebra_ptr() const noexcept { return cqml_; }
  const FiniteLattice& lattice() const noexcept { return cqml_->lattice(); }
  std::size_t size() const noexcept { return cqml_->size(); }

  Elem tensor(Elem a, Elem b) const noexcept { return cqml_->tensor(a, b); }
  Elem residuum(Elem a, Elem b) const noexcept { return residuum_[std::size_t{a} * size() + b]; }
  /// Some γ with a = b ⊗ γ; present exactly when a ≤ b.
  std::optional<Elem> divisor(Elem a, Elem b) const noexcept;

 private:
  GlMonoid() = default;
  std::shared_ptr<const Cqml> cqml_;
  std::vector<Elem> residuum_;
  std::vector<std::optional<Elem>> divisor_;
};

/// α → β evaluated directly from the ⋁-formula (no table).
Elem residuum_by_join(const Cqml& m, Elem a, Elem b);

enum class ChainKind { godel, lukasiewicz };

/// Equidistant chain 0, 1/(n-1), ..., 1 with ⊗ = min (Gödel) or
/// ⊗(a, b) = max(0, a + b - 1) (Łukasiewicz). Element names are reduced
/// fractions: "0", "1/2", "1".
GlMonoid builtin_chain(ChainKind kind, std::size_t n);

/// Name of the k-th element of the n-chain ("0", "1/3", ..., "1").
std::string chain_element_name(std::size_t k, std::size_t n);

/// L^k with pointwise order and tensor; elements are named "(a,b,...)".
Cqml pointwise_power(const Cqml& m, std::size_t points);

}  // namespace fuzzint

#endif  // FUZZINT_MONOID_HPP
