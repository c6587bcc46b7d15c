#ifndef FUZZINT_CONTINUITY_HPP
#define FUZZINT_CONTINUITY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fuzzint/enumerate.hpp"
#include "fuzzint/interior.hpp"
#include "fuzzint/powerset.hpp"

namespace fuzzint {

/// A ground equipped with an interior map.
struct VbSpace {
  InteriorMap interior;
  const Ground& ground() const noexcept { return interior.ground(); }
};

/// Outcome of a check over all v ∈ M^Y (or all u ∈ L^X).
struct Verdict {
  bool holds = true;
  std::optional<FuzzySet> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// (f,φ)←(i_Y(v)) ≤ i_X((f,φ)←(v)) for every v; first failing v in code order.
Verdict is_continuous(const GroundMorphism& g, const VbSpace& src, const VbSpace& dst);
/// i_X((f,φ)←(v)) ≤ (f,φ)←(i_Y(v)) for every v.
Verdict is_open_morphism(const GroundMorphism& g, const VbSpace& src, const VbSpace& dst);

/// î = (f,φ)← ∘ i_Y ∘ (f,φ)_*, validated against I1–I3.
InteriorMap initial_interior(const GroundMorphism& g, const VbSpace& target);

/// The least interior map on the domain making g continuous into `target`:
/// u ↦ ⋁{(f,φ)←(i_Y(v)) | (f,φ)←(v) ≤ u}, with 1_X ↦ 1_X. Computed without
/// the right adjoint, so it serves as an independent check of initial_interior.
InteriorMap least_continuous_interior(const GroundMorphism& g, const VbSpace& target);

struct SourceMember {
  GroundMorphism morphism;
  VbSpace target;
};

/// A family of morphisms out of one ground, each with a structured codomain.
class StructuredSource {
 public:
  /// Throws GroundMismatch when a member's domain or target ground disagrees.
  static StructuredSource make(Ground domain, std::vector<SourceMember> members);

  const Ground& domain() const noexcept { return domain_; }
  const std::vector<SourceMember>& members() const noexcept { return members_; }

 private:
  StructuredSource(Ground domain, std::vector<SourceMember> members)
      : domain_(std::move(domain)), members_(std::move(members)) {}
  Ground domain_;
  std::vector<SourceMember> members_;
};

enum class LiftRule {
  join,  // ⋁ of the members' initial interiors; least for the empty family
  meet,  // ⋀ of the members' initial interiors; discrete for the empty family
};

InteriorMap initial_from_source(const StructuredSource& s, LiftRule rule = LiftRule::join);

/// A test space (Z, N, i_Z) and morphism h : (Z, N) → (X, L) on which
/// "h continuous into the lift" and "every f_λ ∘ h continuous" disagree.
struct InitialityWitness {
  GroundMorphism test_morphism;
  InteriorMap test_interior;
  bool continuous_into_lift = false;
  std::vector<bool> composites_continuous;
};

struct InitialityVerdict {
  bool holds = true;
  std::optional<InitialityWitness> witness;
  std::size_t instances_checked = 0;  // (Z, N, i_Z, h) tuples covered
  explicit operator bool() const noexcept { return holds; }
};

/// Checks the initial-lift equivalence for every test ground within bounds,
/// every morphism into the source domain and every interior map on the test
/// ground. Throws BoundsTooLarge when a test ground or the domain exceeds the
/// bounds.
///
/// For fixed h the test interiors making either side true are exactly those
/// above one interior map (the least one making h, respectively all f_λ ∘ h,
/// continuous), so the equivalence holds for all i_Z iff the two least maps
/// coincide; otherwise one of them is the witness.
InitialityVerdict verify_initiality(const StructuredSource& s, const InteriorMap& lift,
                                    const SearchBounds& bounds);

/// Throws PropertyPreconditionFailed unless the target interior is idempotent
/// (resp. fully productive); otherwise reports whether initial_interior(g,
/// target) keeps the property, with the first failing argument.
Verdict preserves_idempotency_check(const GroundMorphism& g, const VbSpace& target);
Verdict preserves_full_productivity_check(const GroundMorphism& g, const VbSpace& target);

/// Throws NotContinuous unless g is continuous, PropertyPreconditionFailed
/// unless v is open in dst; then checks that (f,φ)←(v) is open in src.
Verdict preimage_of_open_is_open(const GroundMorphism& g, const VbSpace& src, const VbSpace& dst,
                                 const FuzzySet& v);

/// The inverse of a morphism whose point map and φᵒᵖ are bijections, when the
/// inverse φᵒᵖ is itself a valid basis map.
std::optional<GroundMorphism> inverse(const GroundMorphism& g);

/// Code-level forms used by the exhaustive sweeps. `x` is the domain's table.
bool continuous_tables(const PowersetTables& x, const MorphismTables& g,
                       const std::vector<Code>& src, const std::vector<Code>& dst);
bool open_tables(const PowersetTables& x, const MorphismTables& g, const std::vector<Code>& src,
                 const std::vector<Code>& dst);
/// Table of least_continuous_interior.
std::vector<Code> continuity_requirement(const PowersetTables& x, const MorphismTables& g,
                                         const std::vector<Code>& dst);
/// Table of initial_interior.
std::vector<Code> initial_table(const MorphismTables& g, const std::vector<Code>& dst);

}  // namespace fuzzint

#endif  // FUZZINT_CONTINUITY_HPP
