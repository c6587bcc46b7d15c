#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "fuzzint/enumerate.hpp"
#include "fuzzint/error.hpp"
#include "helpers.hpp"

using namespace fuzzint;

namespace {

FuzzyOperator c3_op(const Ground& g, std::vector<std::string> image) {
  std::vector<Code> table;
  for (const auto& v : image) table.push_back(g.encode(th::fs(g, {v})));
  return FuzzyOperator::from_table(g, table);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("axiom checks on one-point Goedel C3") {
  const Ground g = th::ground(1, th::godel(3));
  CHECK_FALSE(check_interior_axioms(c3_op(g, {"0", "1/2", "1"})));
  CHECK_FALSE(check_interior_axioms(c3_op(g, {"0", "0", "1"})));
  const auto bad = check_interior_axioms(c3_op(g, {"0", "1", "1"}));
  REQUIRE(bad);
  CHECK(bad->axiom == InteriorAxiom::contraction);
  CHECK(bad->u == th::fs(g, {"1/2"}));
  const auto not_top = check_interior_axioms(c3_op(g, {"0", "0", "1/2"}));
  REQUIRE(not_top);
  CHECK(not_top->axiom == InteriorAxiom::upper_bound);
  const auto not_mono = check_interior_axioms(c3_op(g, {"0", "1/2", "0"}));
  REQUIRE(not_mono);
  CHECK(not_mono->axiom != InteriorAxiom::contraction);
  CHECK(kind_of([&] { InteriorMap::validate(c3_op(g, {"0", "1", "1"})); }) == ErrorKind::NotInterior);
}

TEST_CASE("axiom checker agrees with the oracle on every operator of small grounds") {
  for (auto g : {th::ground(1, th::godel(3)), th::ground(2, th::godel(2))}) {
    const Code n = static_cast<Code>(g.powerset_size());
    std::vector<Code> table(n, 0);
    while (true) {
      const auto op = FuzzyOperator::from_table(g, table);
      CHECK(check_interior_axioms(op).has_value() ==
            !oracle::satisfies_axioms(g, [&](const FuzzySet& u) { return op(u); }));
      std::size_t k = n;
      while (k > 0 && ++table[k - 1] == n) table[--k] = 0;
      if (k == 0) break;
    }
  }
}

TEST_CASE("literal trivial operator fails contraction at one half") {
  const Ground g = th::ground(1, th::godel(3));
  const auto bad = check_interior_axioms(trivial_literal(g));
  REQUIRE(bad);
  CHECK(bad->axiom == InteriorAxiom::contraction);
  CHECK(bad->u == th::fs(g, {"1/2"}));
  // On the two-element chain over one point the literal map is the identity.
  CHECK_FALSE(check_interior_axioms(trivial_literal(th::ground(1, th::godel(2)))));
  CHECK(check_interior_axioms(trivial_literal(th::ground(2, th::godel(2)))));
}

TEST_CASE("least and discrete") {
  const Ground g = th::ground(1, th::godel(3));
  const auto lo = least(g);
  CHECK(lo(th::fs(g, {"1"})) == th::fs(g, {"1"}));
  CHECK(lo(th::fs(g, {"1/2"})) == th::fs(g, {"0"}));
  CHECK(lo(th::fs(g, {"0"})) == th::fs(g, {"0"}));
  const auto d = discrete(g);
  for (const auto& u : g.all_fuzzy_sets()) CHECK(d(u) == u);
  CHECK(open_sets(d) == g.all_fuzzy_sets());
  const Ground g2 = th::ground(2, th::luka(3));
  CHECK(open_sets(least(g2)) == std::vector<FuzzySet>{g2.bottom(), g2.top()});
}

TEST_CASE("join and meet of interior maps") {
  const Ground g = th::ground(1, th::godel(3));
  const auto a = InteriorMap::validate(c3_op(g, {"0", "0", "1"}));
  const auto b = InteriorMap::validate(c3_op(g, {"0", "1/2", "1"}));
  std::vector<InteriorMap> one{a};
  CHECK(join_interiors(one) == a);
  std::vector<InteriorMap> ab{a, b};
  CHECK(join_interiors(ab)(th::fs(g, {"1/2"})) == th::fs(g, {"1/2"}));
  CHECK(meet_interiors(ab) == a);
  std::vector<InteriorMap> with_discrete{discrete(g), a};
  CHECK(meet_interiors(with_discrete) == a);
  CHECK(kind_of([] { join_interiors({}); }) == ErrorKind::EmptyFamily);
  std::vector<InteriorMap> mixed{a, discrete(th::ground(1, th::luka(3)))};
  CHECK(kind_of([&] { join_interiors(mixed); }) == ErrorKind::GroundMismatch);
}

TEST_CASE("interior maps form a complete lattice on small grounds") {
  for (auto g : {th::ground(1, th::godel(3)), th::ground(1, th::godel(4)), th::ground(2, th::godel(2))}) {
    const auto all = enumerate_interior_maps(g);
    const auto lo = least(g);
    const auto hi = discrete(g);
    REQUIRE(all.size() <= 8);
    for (std::uint32_t mask = 1; mask < (1U << all.size()); ++mask) {
      std::vector<InteriorMap> fam;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask >> k & 1U) fam.push_back(all[k]);
      const auto j = join_interiors(fam);
      const auto m = meet_interiors(fam);
      for (const auto& u : g.all_fuzzy_sets()) {
        FuzzySet pj = g.bottom();
        FuzzySet pm = g.top();
        for (const auto& i : fam) {
          pj = g.join(pj, i(u));
          pm = g.meet(pm, i(u));
        }
        CHECK(j(u) == pj);
        CHECK(m(u) == pm);
        CHECK(g.leq(lo(u), m(u)));
        CHECK(g.leq(j(u), hi(u)));
      }
    }
  }
}

TEST_CASE("idempotency and productivity") {
  const Ground g = th::ground(1, th::godel(3));
  CHECK(is_idempotent(discrete(g)));
  CHECK(is_fully_productive(discrete(g)));
  CHECK(is_idempotent(least(g)));
  const auto a = InteriorMap::validate(c3_op(g, {"0", "0", "1"}));
  CHECK(is_idempotent(a));
  CHECK(is_productive(a));
  CHECK(is_fully_productive(a));

  const Ground g2 = th::ground(2, th::godel(2));
  const auto lo = least(g2);
  CHECK(is_idempotent(lo));
  CHECK(is_productive(lo));
  CHECK(is_fully_productive(lo));

  // A non-idempotent interior map on two points.
  const Ground x = th::ground(2, th::godel(3));
  bool seen_non_idempotent = false;
  for (const auto& i : enumerate_interior_maps(x)) {
    bool oracle_idem = true;
    for (const auto& u : x.all_fuzzy_sets()) oracle_idem = oracle_idem && i(i(u)) == i(u);
    CHECK(static_cast<bool>(is_idempotent(i)) == oracle_idem);
    bool oracle_prod = true;
    for (const auto& u : x.all_fuzzy_sets())
      for (const auto& v : x.all_fuzzy_sets())
        oracle_prod = oracle_prod && i(x.meet(u, v)) == x.meet(i(u), i(v));
    CHECK(static_cast<bool>(is_productive(i)) == oracle_prod);
    CHECK(static_cast<bool>(is_fully_productive(i)) == (oracle_prod && i(x.top()) == x.top()));
    seen_non_idempotent = seen_non_idempotent || !oracle_idem;
  }
  CHECK(seen_non_idempotent);
}

TEST_CASE("topologies and their interiors") {
  const Ground g = th::ground(1, th::godel(3));
  const auto t = LTopology::make(g, {g.bottom(), g.top()});
  CHECK(t.join_closed());
  const auto i = interior_from_topology(t);
  CHECK(i(th::fs(g, {"1/2"})) == th::fs(g, {"0"}));
  CHECK(i == least(g));
  CHECK(open_sets(i) == t.opens());
  CHECK(interior_from_topology(LTopology::make(g, g.all_fuzzy_sets())) == discrete(g));
  CHECK(kind_of([&] { LTopology::make(g, {g.bottom()}); }) == ErrorKind::TopMissingFromTopology);

  const Ground g2 = th::ground(2, th::godel(2));
  const auto t2 = LTopology::make(g2, {th::fs(g2, {"1", "0"}), th::fs(g2, {"0", "1"}), g2.top()});
  CHECK_FALSE(t2.join_closed());
  const auto i2 = interior_from_topology(t2);
  CHECK(i2(g2.bottom()) == g2.bottom());
  CHECK(open_sets(i2).size() == 4);
}

TEST_CASE("closures from a topology") {
  const GlMonoid m = builtin_chain(ChainKind::godel, 3);
  const Ground g = th::ground(1, m.algebra_ptr());
  const auto t = LTopology::make(g, {g.bottom(), g.top()});
  const auto ext = closure_from_topology(t, m, ClosureMode::extensional);
  CHECK(ext(g.bottom()) == g.bottom());
  CHECK(ext(g.top()) == g.top());
  CHECK(ext(th::fs(g, {"1/2"})) == g.top());
  const auto lit = closure_from_topology(t, m, ClosureMode::literal);
  for (const auto& u : g.all_fuzzy_sets()) CHECK(lit(u) == g.bottom());
  const GlMonoid other = builtin_chain(ChainKind::godel, 4);
  CHECK(kind_of([&] { closure_from_topology(t, other, ClosureMode::literal); }) ==
        ErrorKind::NotGLGround);
}

TEST_CASE("extensional closures are extensive on every small topology") {
  for (auto kind : {ChainKind::godel, ChainKind::lukasiewicz}) {
    const GlMonoid m = builtin_chain(kind, 3);
    for (std::size_t n = 1; n <= 2; ++n) {
      const Ground g = th::ground(n, m.algebra_ptr());
      for (const auto& i : enumerate_interior_maps(g)) {
        if (!is_idempotent(i)) continue;
        const auto t = LTopology::make(g, open_sets(i));
        const auto c = closure_from_topology(t, m, ClosureMode::extensional);
        for (const auto& u : g.all_fuzzy_sets()) CHECK(g.leq(u, c(u)));
      }
    }
  }
}
