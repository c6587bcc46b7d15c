#ifndef FUZZINT_POWERSET_HPP
#define FUZZINT_POWERSET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzint/lattice.hpp"
#include "fuzzint/monoid.hpp"

namespace fuzzint {

/// Position of a fuzzy set in the lexicographic enumeration of L^X.
using Code = std::uint32_t;

/// Fuzzy powersets with at most this many members get materialized tables.
inline constexpr std::uint64_t kMaterializeLimit = 4096;

/// An element of L^X: one lattice element per point, in point order.
struct FuzzySet {
  std::vector<Elem> values;

  std::size_t size() const noexcept { return values.size(); }
  Elem operator[](std::size_t x) const { return values[x]; }
  friend auto operator<=>(const FuzzySet&, const FuzzySet&) = default;
};

/// An object (X, L) of the ground category: a finite point set together with
/// a complete quasi-monoidal lattice. Cheap to copy.
class Ground {
 public:
  Ground(std::vector<std::string> points, std::shared_ptr<const Cqml> algebra);

  std::size_t points() const noexcept { return data_->points.size(); }
  const std::vector<std::string>& point_names() const noexcept { return data_->points; }
  std::size_t point_index(std::string_view name) const;

  const Cqml& algebra() const noexcept { return *data_->algebra; }
  const std::shared_ptr<const Cqml>& algebra_ptr() const noexcept { return data_->algebra; }
  const FiniteLattice& lattice() const noexcept { return data_->algebra->lattice(); }

  /// |L|^|X|, saturating at UINT64_MAX.
  std::uint64_t powerset_size() const noexcept { return data_->powerset_size; }
  bool materializable() const noexcept { return powerset_size() <= kMaterializeLimit; }

  FuzzySet top() const;     // 1_X
  FuzzySet bottom() const;  // 0_X
  FuzzySet constant(Elem value) const;
  bool leq(const FuzzySet& a, const FuzzySet& b) const;
  FuzzySet join(const FuzzySet& a, const FuzzySet& b) const;
  FuzzySet meet(const FuzzySet& a, const FuzzySet& b) const;

  /// Throws CarrierMismatch unless `a` is a total map X -> L.
  void check(const FuzzySet& a) const;

  Code encode(const FuzzySet& a) const;
  FuzzySet decode(Code code) const;
  /// Every member of L^X in code order; throws GroundTooLarge above the limit.
  std::vector<FuzzySet> all_fuzzy_sets(std::uint64_t limit = kMaterializeLimit) const;

  std::string render(const FuzzySet& a) const;  // "(0,1/2)"

  friend bool operator==(const Ground& a, const Ground& b);

 private:
  struct Data {
    std::vector<std::string> points;
    std::shared_ptr<const Cqml> algebra;
    std::uint64_t powerset_size = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// A total map between finite point sets, given by the image of each point.
struct PointMap {
  std::vector<std::size_t> image;
  std::size_t codomain_size = 0;

  std::size_t domain_size() const noexcept { return image.size(); }
  std::size_t operator()(std::size_t x) const { return image[x]; }
  static PointMap identity(std::size_t n);
  friend bool operator==(const PointMap&, const PointMap&) = default;
};

/// Classical image f→(A) and preimage f←(B); throws CarrierMismatch when a
/// member lies outside the carrier.
std::set<std::size_t> classical_image(const PointMap& f, const std::set<std::size_t>& subset);
std::set<std::size_t> classical_preimage(const PointMap& f, const std::set<std::size_t>& subset);

/// Zadeh extension: f_L→(a)(y) = ⋁ over the fiber of y, and f_L←(b) = b ∘ f.
FuzzySet zadeh_forward(const PointMap& f, const FiniteLattice& lattice, const FuzzySet& a);
FuzzySet zadeh_backward(const PointMap& f, const FuzzySet& b);

/// The concrete lattice component φᵒᵖ : M → L of a ground morphism.
/// Stored in this direction because every powerset operator evaluates it so.
struct BasisMap {
  std::shared_ptr<const Cqml> source;  // M
  std::shared_ptr<const Cqml> target;  // L
  std::vector<Elem> map;

  Elem operator()(Elem beta) const { return map[beta]; }
};

/// Checks that φᵒᵖ preserves ⊤, arbitrary joins, and ⊗; throws
/// Error{TopNotPreserved|JoinNotPreserved|TensorNotPreserved} with a witness.
void validate_basis_map(const BasisMap& phi);

/// *φ(α) = ⋀{β ∈ M | α ≤ φᵒᵖ(β)}.
Elem star_phi(const BasisMap& phi, Elem alpha);
/// ⟨*φ⟩(a) = *φ ∘ a and ⟨φᵒᵖ⟩(b) = φᵒᵖ ∘ b.
FuzzySet lift_star_phi(const BasisMap& phi, const FuzzySet& a);
FuzzySet lift_phi_op(const BasisMap& phi, const FuzzySet& b);

/// A morphism (f, φ) : (X, L) → (Y, M), stored as (f, φᵒᵖ).
class GroundMorphism {
 public:
  /// Validates totality of f and φᵒᵖ and the preservation conditions.
  static GroundMorphism validate(Ground domain, Ground codomain, PointMap f,
                                 std::vector<Elem> phi_op);
  static GroundMorphism identity(const Ground& ground);

  const Ground& domain() const noexcept { return domain_; }
  const Ground& codomain() const noexcept { return codomain_; }
  const PointMap& point_map() const noexcept { return f_; }
  const BasisMap& basis_map() const noexcept { return phi_; }
  std::size_t f(std::size_t x) const { return f_(x); }
  Elem phi_op(Elem beta) const { return phi_(beta); }

  friend bool operator==(const GroundMorphism& a, const GroundMorphism& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.f_ == b.f_ &&
           a.phi_.map == b.phi_.map;
  }

 private:
  GroundMorphism(Ground domain, Ground codomain, PointMap f, BasisMap phi)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), f_(std::move(f)),
        phi_(std::move(phi)) {}
  friend GroundMorphism compose(const GroundMorphism& second, const GroundMorphism& first);

  Ground domain_;
  Ground codomain_;
  PointMap f_;
  BasisMap phi_;
};

/// second ∘ first, so that vb_backward(compose(g2, g1)) = vb_backward(g1) ∘ vb_backward(g2).
/// Throws GroundMismatch unless first.codomain() == second.domain().
GroundMorphism compose(const GroundMorphism& second, const GroundMorphism& first);

/// (f, φ)←(b) = φᵒᵖ ∘ b ∘ f : M^Y → L^X.
FuzzySet vb_backward(const GroundMorphism& g, const FuzzySet& b);

/// (f, φ)→(a) = ⋀{b ∈ M^Y | f_L→(a) ≤ ⟨φᵒᵖ⟩(b)}.
/// Enumerates M^Y when it has at most kMaterializeLimit members, otherwise
/// evaluates the equivalent pointwise form *φ(f_L→(a)(y)).
FuzzySet vb_forward(const GroundMorphism& g, const FuzzySet& a);
FuzzySet vb_forward_enumerated(const GroundMorphism& g, const FuzzySet& a);
FuzzySet vb_forward_pointwise(const GroundMorphism& g, const FuzzySet& a);

/// Right adjoint of vb_backward:
/// (f, φ)_*(u)(y) = ⋁{β ∈ M | φᵒᵖ(β) ≤ ⋀_{f(x)=y} u(x)}.
FuzzySet vb_right_adjoint(const GroundMorphism& g, const FuzzySet& u);

/// Checks vb_backward(v) ≤ u ⟺ v ≤ vb_right_adjoint(u) over all of M^Y and
/// L^X; throws AdjointConditionFailed with the first witness pair.
void verify_right_adjoint(const GroundMorphism& g);

/// A pair on which F(p) ≤ q and p ≤ G(q) disagree.
template <class P, class Q>
struct AdjunctionWitness {
  P p;
  Q q;
  bool left_side_holds = false;  // value of F(p) ≤ q
};

/// Checks that F ⊣ G between finite posets, i.e. F(p) ≤ q ⟺ p ≤ G(q) for
/// every p in `ps` and q in `qs`. Returns the first violating pair.
template <class P, class Q, class LeqP, class LeqQ, class Left, class Right>
std::optional<AdjunctionWitness<P, Q>> verify_adjunction(std::span<const P> ps,
                                                          std::span<const Q> qs, LeqP&& leq_p,
                                                          LeqQ&& leq_q, Left&& left,
                                                          Right&& right) {
  std::vector<Q> fp;
  fp.reserve(ps.size());
  for (const P& p : ps) fp.push_back(left(p));
  std::vector<P> gq;
  gq.reserve(qs.size());
  for (const Q& q : qs) gq.push_back(right(q));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < qs.size(); ++j) {
      const bool lhs = leq_q(fp[i], qs[j]);
      if (lhs != leq_p(ps[i], gq[j])) return AdjunctionWitness<P, Q>{ps[i], qs[j], lhs};
    }
  return std::nullopt;
}

}  // namespace fuzzint

#endif  // FUZZINT_POWERSET_HPP
