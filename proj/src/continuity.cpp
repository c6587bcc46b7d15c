#include "fuzzint/continuity.hpp"

#include "fuzzint/error.hpp"

namespace fuzzint {

namespace {

void check_grounds(const GroundMorphism& g, const VbSpace& src, const VbSpace& dst) {
  if (!(g.domain() == src.ground()))
    throw Error(ErrorKind::GroundMismatch, "morphism domain differs from the source space");
  if (!(g.codomain() == dst.ground()))
    throw Error(ErrorKind::GroundMismatch, "morphism codomain differs from the target space");
}

template <class Pred>
Verdict scan_codomain(const GroundMorphism& g, Pred&& pred) {
  const Ground& y = g.codomain();
  if (!y.materializable())
    throw Error(ErrorKind::GroundTooLarge, "codomain powerset too large to scan");
  for (Code c = 0; c < y.powerset_size(); ++c) {
    const FuzzySet v = y.decode(c);
    if (!pred(v)) return {false, v};
  }
  return {};
}

}  // namespace

Verdict is_continuous(const GroundMorphism& g, const VbSpace& src, const VbSpace& dst) {
  check_grounds(g, src, dst);
  const Ground& x = src.ground();
  return scan_codomain(g, [&](const FuzzySet& v) {
    return x.leq(vb_backward(g, dst.interior(v)), src.interior(vb_backward(g, v)));
  });
}

Verdict is_open_morphism(const GroundMorphism& g, const VbSpace& src, const VbSpace& dst) {
  check_grounds(g, src, dst);
  const Ground& x = src.ground();
  return scan_codomain(g, [&](const FuzzySet& v) {
    return x.leq(src.interior(vb_backward(g, v)), vb_backward(g, dst.interior(v)));
  });
}

InteriorMap initial_interior(const GroundMorphism& g, const VbSpace& target) {
  if (!(g.codomain() == target.ground()))
    throw Error(ErrorKind::GroundMismatch, "morphism codomain differs from the target space");
  const InteriorMap i = target.interior;
  return InteriorMap::validate(FuzzyOperator::from_rule(g.domain(), [g, i](const FuzzySet& u) {
    return vb_backward(g, i(vb_right_adjoint(g, u)));
  }));
}

InteriorMap least_continuous_interior(const GroundMorphism& g, const VbSpace& target) {
  if (!(g.codomain() == target.ground()))
    throw Error(ErrorKind::GroundMismatch, "morphism codomain differs from the target space");
  const Ground& y = g.codomain();
  if (!y.materializable())
    throw Error(ErrorKind::GroundTooLarge, "codomain powerset too large to scan");
  std::vector<std::pair<FuzzySet, FuzzySet>> pairs;
  for (Code c = 0; c < y.powerset_size(); ++c) {
    const FuzzySet v = y.decode(c);
    pairs.emplace_back(vb_backward(g, v), vb_backward(g, target.interior(v)));
  }
  const Ground x = g.domain();
  return InteriorMap::validate(FuzzyOperator::from_rule(x, [x, pairs](const FuzzySet& u) {
    if (u == x.top()) return x.top();
    FuzzySet acc = x.bottom();
    for (const auto& [bv, biv] : pairs)
      if (x.leq(bv, u)) acc = x.join(acc, biv);
    return acc;
  }));
}

StructuredSource StructuredSource::make(Ground domain, std::vector<SourceMember> members) {
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (!(members[k].morphism.domain() == domain))
      throw Error(ErrorKind::GroundMismatch,
                  "source member " + std::to_string(k) + " starts at a different ground");
    if (!(members[k].morphism.codomain() == members[k].target.ground()))
      throw Error(ErrorKind::GroundMismatch,
                  "source member " + std::to_string(k) + " ends at a different ground");
  }
  return StructuredSource(std::move(domain), std::move(members));
}

InteriorMap initial_from_source(const StructuredSource& s, LiftRule rule) {
  if (s.members().empty()) return rule == LiftRule::join ? least(s.domain()) : discrete(s.domain());
  std::vector<InteriorMap> parts;
  for (const auto& m : s.members()) parts.push_back(initial_interior(m.morphism, m.target));
  return rule == LiftRule::join ? join_interiors(parts) : meet_interiors(parts);
}

// ---------------------------------------------------------------------------
// Code-level forms

bool continuous_tables(const PowersetTables& x, const MorphismTables& g,
                       const std::vector<Code>& src, const std::vector<Code>& dst) {
  for (Code v = 0; v < g.backward.size(); ++v)
    if (!x.leq(g.backward[dst[v]], src[g.backward[v]])) return false;
  return true;
}

bool open_tables(const PowersetTables& x, const MorphismTables& g, const std::vector<Code>& src,
                 const std::vector<Code>& dst) {
  for (Code v = 0; v < g.backward.size(); ++v)
    if (!x.leq(src[g.backward[v]], g.backward[dst[v]])) return false;
  return true;
}

std::vector<Code> continuity_requirement(const PowersetTables& x, const MorphismTables& g,
                                         const std::vector<Code>& dst) {
  std::vector<Code> r(x.size(), x.bottom());
  for (Code v = 0; v < g.backward.size(); ++v)
    r[g.backward[v]] = x.join(r[g.backward[v]], g.backward[dst[v]]);
  for (Code w : x.linear_extension())
    for (Code d : x.lower_covers(w)) r[w] = x.join(r[w], r[d]);
  r[x.top()] = x.top();
  return r;
}

std::vector<Code> initial_table(const MorphismTables& g, const std::vector<Code>& dst) {
  std::vector<Code> out(g.right_adjoint.size());
  for (Code u = 0; u < out.size(); ++u) out[u] = g.backward[dst[g.right_adjoint[u]]];
  return out;
}

// ---------------------------------------------------------------------------

InitialityVerdict verify_initiality(const StructuredSource& s, const InteriorMap& lift,
                                    const SearchBounds& bounds) {
  const Ground& x = s.domain();
  if (!(lift.ground() == x))
    throw Error(ErrorKind::GroundMismatch, "lift lives on a different ground");
  if (!x.materializable() || !lift.materialized())
    throw Error(ErrorKind::BoundsTooLarge, "source domain too large for initiality checks");
  const PowersetTables xt(x);

  struct Member {
    const GroundMorphism* f;
    std::vector<Code> interior;
  };
  std::vector<Member> members;
  for (const auto& m : s.members()) {
    if (!m.target.interior.materialized())
      throw Error(ErrorKind::BoundsTooLarge, "source target too large for initiality checks");
    members.push_back({&m.morphism, m.target.interior.table()});
  }

  std::vector<Ground> tests;
  try {
    tests = enumerate_grounds(bounds);
  } catch (const Error& e) {
    throw Error(ErrorKind::BoundsTooLarge, e.what());
  }

  InitialityVerdict verdict;
  for (const Ground& z : tests) {
    std::size_t interiors = 0;
    try {
      interiors = enumerate_interior_tables(z, bounds).size();
    } catch (const Error& e) {
      throw Error(ErrorKind::BoundsTooLarge, e.what());
    }
    const PowersetTables zt(z);
    for (const GroundMorphism& h : enumerate_morphisms(z, x)) {
      const MorphismTables ht = morphism_tables(h);
      const std::vector<Code> p = continuity_requirement(zt, ht, lift.table());
      std::vector<Code> q(zt.size(), zt.bottom());
      q[zt.top()] = zt.top();
      std::vector<MorphismTables> composite;
      for (const Member& m : members) {
        composite.push_back(morphism_tables(compose(*m.f, h)));
        q = zt.table_join(q, continuity_requirement(zt, composite.back(), m.interior));
      }
      if (p != q) {
        // One of the two least maps lies strictly below the other somewhere.
        const std::vector<Code>& t = zt.table_leq(q, p) ? q : p;
        InitialityWitness w{h, InteriorMap::validate(FuzzyOperator::from_table(z, t)),
                            continuous_tables(zt, ht, t, lift.table()),
                            {}};
        for (std::size_t k = 0; k < members.size(); ++k)
          w.composites_continuous.push_back(
              continuous_tables(zt, composite[k], t, members[k].interior));
        verdict.holds = false;
        verdict.witness = std::move(w);
        return verdict;
      }
      verdict.instances_checked += interiors;
    }
  }
  return verdict;
}

Verdict preserves_idempotency_check(const GroundMorphism& g, const VbSpace& target) {
  if (auto w = is_idempotent(target.interior); !w)
    throw Error(ErrorKind::PropertyPreconditionFailed, "target interior is not idempotent",
                {target.ground().render(w.witness.front())});
  const Witnessed w = is_idempotent(initial_interior(g, target));
  if (w) return {};
  return {false, w.witness.front()};
}

Verdict preserves_full_productivity_check(const GroundMorphism& g, const VbSpace& target) {
  if (!is_fully_productive(target.interior))
    throw Error(ErrorKind::PropertyPreconditionFailed, "target interior is not fully productive");
  const Witnessed w = is_fully_productive(initial_interior(g, target));
  if (w) return {};
  if (w.witness.empty()) return {false, g.domain().top()};
  return {false, w.witness.front()};
}

Verdict preimage_of_open_is_open(const GroundMorphism& g, const VbSpace& src, const VbSpace& dst,
                                 const FuzzySet& v) {
  if (auto c = is_continuous(g, src, dst); !c)
    throw Error(ErrorKind::NotContinuous, "morphism is not continuous",
                {g.codomain().render(*c.witness)});
  if (dst.interior(v) != v)
    throw Error(ErrorKind::PropertyPreconditionFailed, "v is not open in the target",
                {g.codomain().render(v)});
  const FuzzySet u = vb_backward(g, v);
  if (src.interior(u) == u) return {};
  return {false, v};
}

std::optional<GroundMorphism> inverse(const GroundMorphism& g) {
  const std::size_t n = g.domain().points();
  if (g.codomain().points() != n) return std::nullopt;
  PointMap f;
  f.image.assign(n, n);
  f.codomain_size = n;
  for (std::size_t x = 0; x < n; ++x) {
    if (f.image[g.f(x)] != n) return std::nullopt;
    f.image[g.f(x)] = x;
  }
  const std::size_t m = g.codomain().lattice().size();
  if (g.domain().lattice().size() != m) return std::nullopt;
  std::vector<Elem> phi(m, static_cast<Elem>(m));
  for (Elem b = 0; b < m; ++b) {
    if (phi[g.phi_op(b)] != m) return std::nullopt;
    phi[g.phi_op(b)] = b;
  }
  try {
    return GroundMorphism::validate(g.codomain(), g.domain(), std::move(f), std::move(phi));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace fuzzint
