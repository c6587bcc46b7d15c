#include "fuzzint/interior.hpp"

#include <algorithm>
#include <random>

#include "fuzzint/error.hpp"

namespace fuzzint {

FuzzyOperator FuzzyOperator::from_table(Ground ground, std::vector<Code> table) {
  if (!ground.materializable())
    throw Error(ErrorKind::GroundTooLarge, "ground too large for a tabulated operator");
  if (table.size() != ground.powerset_size())
    throw Error(ErrorKind::IncompleteTable, "operator table must cover all of L^X");
  for (Code c : table)
    if (c >= ground.powerset_size())
      throw Error(ErrorKind::CarrierMismatch, "operator table entry outside L^X");
  return FuzzyOperator(std::move(ground), std::move(table), {});
}

FuzzyOperator FuzzyOperator::from_rule(Ground ground, Rule rule) {
  if (!ground.materializable()) return FuzzyOperator(std::move(ground), {}, std::move(rule));
  std::vector<Code> table(ground.powerset_size());
  for (Code c = 0; c < table.size(); ++c) table[c] = ground.encode(rule(ground.decode(c)));
  return FuzzyOperator(std::move(ground), std::move(table), {});
}

FuzzySet FuzzyOperator::operator()(const FuzzySet& u) const {
  ground_.check(u);
  if (materialized()) return ground_.decode(table_[ground_.encode(u)]);
  return rule_(u);
}

std::string to_string(InteriorAxiom axiom) {
  switch (axiom) {
    case InteriorAxiom::contraction: return "I1 contraction";
    case InteriorAxiom::monotonicity: return "I2 monotonicity";
    case InteriorAxiom::upper_bound: return "I3 upper bound";
  }
  return "?";
}

namespace {

/// Upper covers of u in L^X: raise one coordinate to one of its covers.
template <class Fn>
void for_each_upper_cover(const Ground& g, const FuzzySet& u, Fn&& fn) {
  const FiniteLattice& l = g.lattice();
  for (std::size_t x = 0; x < u.size(); ++x)
    for (Elem c : l.upper_covers(u[x])) {
      FuzzySet v = u;
      v.values[x] = c;
      fn(v);
    }
}

std::optional<AxiomViolation> check_one(const FuzzyOperator& op, const FuzzySet& u) {
  const Ground& g = op.ground();
  const FuzzySet iu = op(u);
  if (!g.leq(iu, u)) return AxiomViolation{InteriorAxiom::contraction, u, std::nullopt};
  std::optional<AxiomViolation> out;
  for_each_upper_cover(g, u, [&](const FuzzySet& v) {
    if (!out && !g.leq(iu, op(v))) out = AxiomViolation{InteriorAxiom::monotonicity, u, v};
  });
  return out;
}

}  // namespace

std::optional<AxiomViolation> check_interior_axioms(const FuzzyOperator& op) {
  const Ground& g = op.ground();
  if (op.materialized()) {
    const auto n = static_cast<Code>(g.powerset_size());
    for (Code c = 0; c < n; ++c) {
      const FuzzySet u = g.decode(c);
      if (!g.leq(g.decode(op(c)), u))
        return AxiomViolation{InteriorAxiom::contraction, u, std::nullopt};
    }
    for (Code c = 0; c < n; ++c) {
      const FuzzySet u = g.decode(c);
      const FuzzySet iu = g.decode(op(c));
      std::optional<AxiomViolation> out;
      for_each_upper_cover(g, u, [&](const FuzzySet& v) {
        if (!out && !g.leq(iu, g.decode(op(g.encode(v)))))
          out = AxiomViolation{InteriorAxiom::monotonicity, u, v};
      });
      if (out) return out;
    }
  } else {
    std::mt19937_64 rng(0xfacadeULL);
    std::uniform_int_distribution<std::size_t> pick(0, g.lattice().size() - 1);
    for (int s = 0; s < 2048; ++s) {
      FuzzySet u{std::vector<Elem>(g.points())};
      for (auto& v : u.values) v = static_cast<Elem>(pick(rng));
      if (auto w = check_one(op, u)) return w;
    }
    if (auto w = check_one(op, g.bottom())) return w;
  }
  if (op(g.top()) != g.top())
    return AxiomViolation{InteriorAxiom::upper_bound, g.top(), std::nullopt};
  return std::nullopt;
}

InteriorMap InteriorMap::validate(FuzzyOperator op) {
  if (auto w = check_interior_axioms(op)) {
    const Ground& g = op.ground();
    std::vector<std::string> witness{g.render(w->u)};
    if (w->v) witness.push_back(g.render(*w->v));
    throw Error(ErrorKind::NotInterior, to_string(w->axiom) + " fails at u=" + g.render(w->u),
                std::move(witness));
  }
  return InteriorMap(std::move(op));
}

namespace {

const Ground& common_ground(std::span<const InteriorMap> family) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "family of interior maps is empty");
  for (const auto& i : family)
    if (!(i.ground() == family.front().ground()))
      throw Error(ErrorKind::GroundMismatch, "interior maps live on different grounds");
  return family.front().ground();
}

template <class Combine>
InteriorMap combine(std::span<const InteriorMap> family, Combine&& comb) {
  const Ground& g = common_ground(family);
  std::vector<InteriorMap> members(family.begin(), family.end());
  return InteriorMap::validate(FuzzyOperator::from_rule(g, [g, members, comb](const FuzzySet& u) {
    FuzzySet acc = members.front()(u);
    for (std::size_t k = 1; k < members.size(); ++k) acc = comb(g, acc, members[k](u));
    return acc;
  }));
}

}  // namespace

InteriorMap join_interiors(std::span<const InteriorMap> family) {
  return combine(family, [](const Ground& g, const FuzzySet& a, const FuzzySet& b) {
    return g.join(a, b);
  });
}

InteriorMap meet_interiors(std::span<const InteriorMap> family) {
  return combine(family, [](const Ground& g, const FuzzySet& a, const FuzzySet& b) {
    return g.meet(a, b);
  });
}

InteriorMap discrete(const Ground& ground) {
  return InteriorMap::validate(FuzzyOperator::from_rule(ground, [](const FuzzySet& u) { return u; }));
}

InteriorMap least(const Ground& ground) {
  return InteriorMap::validate(FuzzyOperator::from_rule(ground, [ground](const FuzzySet& u) {
    return u == ground.top() ? ground.top() : ground.bottom();
  }));
}

FuzzyOperator trivial_literal(const Ground& ground) {
  return FuzzyOperator::from_rule(ground, [ground](const FuzzySet& u) {
    return u == ground.bottom() ? ground.bottom() : ground.top();
  });
}

namespace {

void require_table(const InteriorMap& i) {
  if (!i.materialized())
    throw Error(ErrorKind::GroundTooLarge, "predicate needs a materialized interior table");
}

}  // namespace

Witnessed is_idempotent(const InteriorMap& i) {
  require_table(i);
  const Ground& g = i.ground();
  for (Code c = 0; c < g.powerset_size(); ++c)
    if (i(i(c)) != i(c)) return {false, {g.decode(c)}};
  return {};
}

Witnessed is_productive(const InteriorMap& i) {
  require_table(i);
  const Ground& g = i.ground();
  const auto n = static_cast<Code>(g.powerset_size());
  for (Code a = 0; a < n; ++a)
    for (Code b = a + 1; b < n; ++b) {
      const FuzzySet u = g.decode(a);
      const FuzzySet v = g.decode(b);
      if (i(g.meet(u, v)) != g.meet(i(u), i(v))) return {false, {u, v}};
    }
  return {};
}

Witnessed is_fully_productive(const InteriorMap& i) {
  require_table(i);
  const Ground& g = i.ground();
  const auto n = static_cast<Code>(g.powerset_size());
  if (i(g.top()) != g.top()) return {false, {}};  // the empty family
  if (n > 16) return is_productive(i);
  const auto all = g.all_fuzzy_sets();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    FuzzySet meet_u = g.top();
    FuzzySet meet_iu = g.top();
    for (Code c = 0; c < n; ++c)
      if (mask >> c & 1U) {
        meet_u = g.meet(meet_u, all[c]);
        meet_iu = g.meet(meet_iu, i(all[c]));
      }
    if (i(meet_u) != meet_iu) {
      Witnessed w{false, {}};
      for (Code c = 0; c < n; ++c)
        if (mask >> c & 1U) w.witness.push_back(all[c]);
      return w;
    }
  }
  return {};
}

std::vector<FuzzySet> open_sets(const InteriorMap& i) {
  require_table(i);
  const Ground& g = i.ground();
  std::vector<FuzzySet> out;
  for (Code c = 0; c < g.powerset_size(); ++c)
    if (i(c) == c) out.push_back(g.decode(c));
  return out;
}

LTopology LTopology::make(Ground ground, std::vector<FuzzySet> opens) {
  for (const auto& v : opens) ground.check(v);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  if (!std::binary_search(opens.begin(), opens.end(), ground.top()))
    throw Error(ErrorKind::TopMissingFromTopology, "an L-topology must contain 1_X");
  // Finite family: closure under arbitrary joins means the empty join and
  // all binary joins are present.
  bool closed = std::binary_search(opens.begin(), opens.end(), ground.bottom());
  for (std::size_t a = 0; a < opens.size() && closed; ++a)
    for (std::size_t b = a + 1; b < opens.size() && closed; ++b)
      closed = std::binary_search(opens.begin(), opens.end(), ground.join(opens[a], opens[b]));
  return LTopology(std::move(ground), std::move(opens), closed);
}

InteriorMap interior_from_topology(const LTopology& t) {
  const Ground& g = t.ground();
  return InteriorMap::validate(FuzzyOperator::from_rule(g, [t](const FuzzySet& u) {
    const Ground& gr = t.ground();
    FuzzySet acc = gr.bottom();
    for (const auto& v : t.opens())
      if (gr.leq(v, u)) acc = gr.join(acc, v);
    return acc;
  }));
}

FuzzyOperator closure_from_topology(const LTopology& t, const GlMonoid& m, ClosureMode mode) {
  const Ground& g = t.ground();
  if (!(m.lattice() == g.lattice()))
    throw Error(ErrorKind::NotGLGround, "the GL-monoid does not live on the ground's lattice");
  std::vector<FuzzySet> pseudo;
  for (const auto& v : t.opens()) {
    FuzzySet c = v;
    for (auto& e : c.values) e = m.residuum(e, m.lattice().bottom());
    pseudo.push_back(std::move(c));
  }
  return FuzzyOperator::from_rule(g, [t, pseudo, mode](const FuzzySet& u) {
    const Ground& gr = t.ground();
    FuzzySet acc = gr.top();
    for (std::size_t k = 0; k < pseudo.size(); ++k) {
      const FuzzySet& bound = mode == ClosureMode::literal ? t.opens()[k] : pseudo[k];
      if (gr.leq(u, bound)) acc = gr.meet(acc, pseudo[k]);
    }
    return acc;
  });
}

}  // namespace fuzzint
