#include "fuzzint/powerset.hpp"

#include <limits>
#include <unordered_map>

#include "fuzzint/error.hpp"

namespace fuzzint {

// ---------------------------------------------------------------------------
// Ground

Ground::Ground(std::vector<std::string> points, std::shared_ptr<const Cqml> algebra) {
  if (!algebra) throw Error(ErrorKind::InvalidArgument, "ground needs an algebra");
  std::set<std::string> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second)
      throw Error(ErrorKind::DuplicateElement, "duplicate point '" + p + "'", {p});
  auto d = std::make_shared<Data>();
  const std::uint64_t n = algebra->size();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / n) {
      size = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    size *= n;
  }
  d->points = std::move(points);
  d->algebra = std::move(algebra);
  d->powerset_size = size;
  data_ = std::move(d);
}

std::size_t Ground::point_index(std::string_view name) const {
  for (std::size_t i = 0; i < points(); ++i)
    if (data_->points[i] == name) return i;
  throw Error(ErrorKind::UnknownElement, "unknown point '" + std::string(name) + "'",
              {std::string(name)});
}

FuzzySet Ground::top() const { return constant(lattice().top()); }
FuzzySet Ground::bottom() const { return constant(lattice().bottom()); }
FuzzySet Ground::constant(Elem value) const { return FuzzySet{std::vector<Elem>(points(), value)}; }

bool Ground::leq(const FuzzySet& a, const FuzzySet& b) const {
  const FiniteLattice& l = lattice();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!l.leq(a[x], b[x])) return false;
  return true;
}

FuzzySet Ground::join(const FuzzySet& a, const FuzzySet& b) const {
  FuzzySet r = a;
  for (std::size_t x = 0; x < a.size(); ++x) r.values[x] = lattice().join(a[x], b[x]);
  return r;
}

FuzzySet Ground::meet(const FuzzySet& a, const FuzzySet& b) const {
  FuzzySet r = a;
  for (std::size_t x = 0; x < a.size(); ++x) r.values[x] = lattice().meet(a[x], b[x]);
  return r;
}

void Ground::check(const FuzzySet& a) const {
  if (a.size() != points())
    throw Error(ErrorKind::CarrierMismatch, "fuzzy set has " + std::to_string(a.size()) +
                                                " values but the carrier has " +
                                                std::to_string(points()) + " points");
  for (Elem v : a.values)
    if (v >= lattice().size())
      throw Error(ErrorKind::CarrierMismatch, "fuzzy set value outside the lattice");
}

Code Ground::encode(const FuzzySet& a) const {
  if (powerset_size() > std::numeric_limits<Code>::max())
    throw Error(ErrorKind::GroundTooLarge, "fuzzy powerset too large to encode");
  const Code n = static_cast<Code>(lattice().size());
  Code c = 0;
  for (Elem v : a.values) c = c * n + v;
  return c;
}

FuzzySet Ground::decode(Code code) const {
  const Code n = static_cast<Code>(lattice().size());
  FuzzySet a{std::vector<Elem>(points(), 0)};
  for (std::size_t i = points(); i-- > 0;) {
    a.values[i] = static_cast<Elem>(code % n);
    code /= n;
  }
  return a;
}

std::vector<FuzzySet> Ground::all_fuzzy_sets(std::uint64_t limit) const {
  if (powerset_size() > limit)
    throw Error(ErrorKind::GroundTooLarge, "fuzzy powerset has " +
                                               std::to_string(powerset_size()) +
                                               " members; limit is " + std::to_string(limit));
  std::vector<FuzzySet> out;
  out.reserve(powerset_size());
  for (Code c = 0; c < powerset_size(); ++c) out.push_back(decode(c));
  return out;
}

std::string Ground::render(const FuzzySet& a) const {
  std::string s = "(";
  for (std::size_t x = 0; x < a.size(); ++x) s += (x ? "," : "") + lattice().name(a[x]);
  return s + ")";
}

bool operator==(const Ground& a, const Ground& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->points == b.data_->points &&
         (a.data_->algebra == b.data_->algebra || *a.data_->algebra == *b.data_->algebra);
}

// ---------------------------------------------------------------------------
// Classical and Zadeh operators

PointMap PointMap::identity(std::size_t n) {
  PointMap f;
  f.codomain_size = n;
  for (std::size_t i = 0; i < n; ++i) f.image.push_back(i);
  return f;
}

std::set<std::size_t> classical_image(const PointMap& f, const std::set<std::size_t>& subset) {
  std::set<std::size_t> out;
  for (std::size_t x : subset) {
    if (x >= f.domain_size()) throw Error(ErrorKind::CarrierMismatch, "point outside the domain");
    out.insert(f(x));
  }
  return out;
}

std::set<std::size_t> classical_preimage(const PointMap& f, const std::set<std::size_t>& subset) {
  for (std::size_t y : subset)
    if (y >= f.codomain_size)
      throw Error(ErrorKind::CarrierMismatch, "point outside the codomain");
  std::set<std::size_t> out;
  for (std::size_t x = 0; x < f.domain_size(); ++x)
    if (subset.contains(f(x))) out.insert(x);
  return out;
}

FuzzySet zadeh_forward(const PointMap& f, const FiniteLattice& lattice, const FuzzySet& a) {
  if (a.size() != f.domain_size())
    throw Error(ErrorKind::CarrierMismatch, "fuzzy set does not live on the domain of f");
  FuzzySet b{std::vector<Elem>(f.codomain_size, lattice.bottom())};
  for (std::size_t x = 0; x < a.size(); ++x)
    b.values[f(x)] = lattice.join(b.values[f(x)], a[x]);
  return b;
}

FuzzySet zadeh_backward(const PointMap& f, const FuzzySet& b) {
  if (b.size() != f.codomain_size)
    throw Error(ErrorKind::CarrierMismatch, "fuzzy set does not live on the codomain of f");
  FuzzySet a{std::vector<Elem>(f.domain_size())};
  for (std::size_t x = 0; x < f.domain_size(); ++x) a.values[x] = b[f(x)];
  return a;
}

// ---------------------------------------------------------------------------
// Basis maps

void validate_basis_map(const BasisMap& phi) {
  const Cqml& m = *phi.source;
  const Cqml& l = *phi.target;
  const FiniteLattice& ml = m.lattice();
  const FiniteLattice& ll = l.lattice();
  if (phi.map.size() != ml.size())
    throw Error(ErrorKind::CarrierMismatch, "phi_op must assign a value to every element of M");
  for (Elem v : phi.map)
    if (v >= ll.size()) throw Error(ErrorKind::CarrierMismatch, "phi_op value outside L");

  if (phi(ml.top()) != ll.top())
    throw Error(ErrorKind::TopNotPreserved, "phi_op sends top to " + ll.name(phi(ml.top())),
                {ml.name(ml.top()), ll.name(phi(ml.top()))});

  const auto n = static_cast<Elem>(ml.size());
  auto check_family = [&](const std::vector<Elem>& family) {
    Elem rhs = ll.bottom();
    for (Elem b : family) rhs = ll.join(rhs, phi(b));
    if (phi(ml.join(family)) != rhs)
      throw Error(ErrorKind::JoinNotPreserved, "phi_op does not preserve the join of a family",
                  ml.names_of(family));
  };
  if (n <= 12) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<Elem> family;
      for (Elem b = 0; b < n; ++b)
        if (mask >> b & 1U) family.push_back(b);
      check_family(family);
    }
  } else {
    // Finite joins reduce to the empty join and binary joins.
    check_family({});
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) check_family({a, b});
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (phi(m.tensor(a, b)) != l.tensor(phi(a), phi(b)))
        throw Error(ErrorKind::TensorNotPreserved,
                    "phi_op does not preserve the tensor at (" + ml.name(a) + ", " + ml.name(b) +
                        ")",
                    {ml.name(a), ml.name(b)});
}

Elem star_phi(const BasisMap& phi, Elem alpha) {
  const FiniteLattice& ml = phi.source->lattice();
  const FiniteLattice& ll = phi.target->lattice();
  if (alpha >= ll.size()) throw Error(ErrorKind::UnknownElement, "element outside L");
  Elem acc = ml.top();
  for (Elem beta = 0; beta < ml.size(); ++beta)
    if (ll.leq(alpha, phi(beta))) acc = ml.meet(acc, beta);
  return acc;
}

FuzzySet lift_star_phi(const BasisMap& phi, const FuzzySet& a) {
  FuzzySet out = a;
  for (auto& v : out.values) v = star_phi(phi, v);
  return out;
}

FuzzySet lift_phi_op(const BasisMap& phi, const FuzzySet& b) {
  FuzzySet out = b;
  for (auto& v : out.values) {
    if (v >= phi.map.size()) throw Error(ErrorKind::CarrierMismatch, "value outside M");
    v = phi(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ground morphisms

GroundMorphism GroundMorphism::validate(Ground domain, Ground codomain, PointMap f,
                                        std::vector<Elem> phi_op) {
  if (f.domain_size() != domain.points())
    throw Error(ErrorKind::CarrierMismatch, "point map must be total on the domain");
  f.codomain_size = codomain.points();
  for (std::size_t y : f.image)
    if (y >= codomain.points())
      throw Error(ErrorKind::CarrierMismatch, "point map leaves the codomain");
  BasisMap phi{codomain.algebra_ptr(), domain.algebra_ptr(), std::move(phi_op)};
  validate_basis_map(phi);
  return GroundMorphism(std::move(domain), std::move(codomain), std::move(f), std::move(phi));
}

GroundMorphism GroundMorphism::identity(const Ground& ground) {
  std::vector<Elem> id(ground.lattice().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Elem>(i);
  return validate(ground, ground, PointMap::identity(ground.points()), std::move(id));
}

GroundMorphism compose(const GroundMorphism& second, const GroundMorphism& first) {
  if (!(first.codomain() == second.domain()))
    throw Error(ErrorKind::GroundMismatch, "morphisms are not composable");
  PointMap f;
  f.codomain_size = second.codomain().points();
  for (std::size_t x = 0; x < first.domain().points(); ++x)
    f.image.push_back(second.f(first.f(x)));
  // φᵒᵖ of the composite is N → M → L.
  BasisMap phi{second.codomain().algebra_ptr(), first.domain().algebra_ptr(), {}};
  for (Elem c = 0; c < second.codomain().lattice().size(); ++c)
    phi.map.push_back(first.phi_op(second.phi_op(c)));
  return GroundMorphism(first.domain(), second.codomain(), std::move(f), std::move(phi));
}

FuzzySet vb_backward(const GroundMorphism& g, const FuzzySet& b) {
  g.codomain().check(b);
  FuzzySet a{std::vector<Elem>(g.domain().points())};
  for (std::size_t x = 0; x < a.size(); ++x) a.values[x] = g.phi_op(b[g.f(x)]);
  return a;
}

FuzzySet vb_forward_pointwise(const GroundMorphism& g, const FuzzySet& a) {
  g.domain().check(a);
  FuzzySet fa = zadeh_forward(g.point_map(), g.domain().lattice(), a);
  for (auto& v : fa.values) v = star_phi(g.basis_map(), v);
  return fa;
}

FuzzySet vb_forward_enumerated(const GroundMorphism& g, const FuzzySet& a) {
  g.domain().check(a);
  const Ground& cod = g.codomain();
  if (cod.powerset_size() > kMaterializeLimit)
    throw Error(ErrorKind::GroundTooLarge, "codomain powerset too large to enumerate");
  const FiniteLattice& l = g.domain().lattice();
  const FuzzySet fa = zadeh_forward(g.point_map(), l, a);
  FuzzySet acc = cod.top();
  for (Code c = 0; c < cod.powerset_size(); ++c) {
    const FuzzySet b = cod.decode(c);
    bool qualifies = true;
    for (std::size_t y = 0; y < b.size() && qualifies; ++y)
      qualifies = l.leq(fa[y], g.phi_op(b[y]));
    if (qualifies) acc = cod.meet(acc, b);
  }
  return acc;
}

FuzzySet vb_forward(const GroundMorphism& g, const FuzzySet& a) {
  if (g.codomain().powerset_size() <= kMaterializeLimit) return vb_forward_enumerated(g, a);
  return vb_forward_pointwise(g, a);
}

FuzzySet vb_right_adjoint(const GroundMorphism& g, const FuzzySet& u) {
  g.domain().check(u);
  const FiniteLattice& l = g.domain().lattice();
  const FiniteLattice& m = g.codomain().lattice();
  std::vector<Elem> fiber_meet(g.codomain().points(), l.top());
  for (std::size_t x = 0; x < u.size(); ++x)
    fiber_meet[g.f(x)] = l.meet(fiber_meet[g.f(x)], u[x]);
  FuzzySet v{std::vector<Elem>(g.codomain().points(), m.bottom())};
  for (std::size_t y = 0; y < v.size(); ++y)
    for (Elem beta = 0; beta < m.size(); ++beta)
      if (l.leq(g.phi_op(beta), fiber_meet[y])) v.values[y] = m.join(v.values[y], beta);
  return v;
}

void verify_right_adjoint(const GroundMorphism& g) {
  const auto us = g.domain().all_fuzzy_sets();
  const auto vs = g.codomain().all_fuzzy_sets();
  const Ground& dom = g.domain();
  const Ground& cod = g.codomain();
  auto w = verify_adjunction<FuzzySet, FuzzySet>(
      std::span<const FuzzySet>(vs), std::span<const FuzzySet>(us),
      [&](const FuzzySet& a, const FuzzySet& b) { return cod.leq(a, b); },
      [&](const FuzzySet& a, const FuzzySet& b) { return dom.leq(a, b); },
      [&](const FuzzySet& v) { return vb_backward(g, v); },
      [&](const FuzzySet& u) { return vb_right_adjoint(g, u); });
  if (w)
    throw Error(ErrorKind::AdjointConditionFailed,
                "right adjoint condition fails for v=" + cod.render(w->p) +
                    ", u=" + dom.render(w->q),
                {cod.render(w->p), dom.render(w->q)});
}

}  // namespace fuzzint
