#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "fuzzint/continuity.hpp"
#include "fuzzint/enumerate.hpp"
#include "fuzzint/error.hpp"
#include "helpers.hpp"

using namespace fuzzint;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

std::vector<Ground> grounds() {
  std::vector<Ground> out;
  for (auto alg : {th::godel(2), th::godel(3), th::luka(3)})
    for (std::size_t n = 1; n <= 2; ++n) out.push_back(th::ground(n, alg));
  return out;
}

// Brute-force minimum over all interior maps making g continuous into dst:
// the candidate equal to the pointwise meet of every continuous candidate.
std::optional<InteriorMap> oracle_least_continuous(const GroundMorphism& g, const InteriorMap& dst) {
  const Ground& x = g.domain();
  const auto sets = x.all_fuzzy_sets();
  std::vector<FuzzySet> meet(sets.size(), x.top());
  std::vector<InteriorMap> good;
  for (const auto& i : enumerate_interior_maps(x)) {
    if (!oracle::continuous(g, oracle::as_op(i), oracle::as_op(dst))) continue;
    good.push_back(i);
    for (std::size_t k = 0; k < sets.size(); ++k) meet[k] = x.meet(meet[k], i(sets[k]));
  }
  for (const auto& i : good) {
    bool equal = true;
    for (std::size_t k = 0; k < sets.size(); ++k) equal = equal && i(sets[k]) == meet[k];
    if (equal) return i;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("continuity and openness examples on one point") {
  const Ground g = th::ground(1, th::godel(3));
  const auto id = GroundMorphism::identity(g);
  const VbSpace lo{least(g)};
  const VbSpace hi{discrete(g)};
  CHECK(is_continuous(id, lo, lo));
  CHECK(is_continuous(id, hi, hi));
  CHECK(is_open_morphism(id, lo, lo));

  const auto c = is_continuous(id, lo, hi);
  REQUIRE_FALSE(c);
  CHECK(*c.witness == th::fs(g, {"1/2"}));
  const auto o = is_open_morphism(id, hi, lo);
  REQUIRE_FALSE(o);
  CHECK(*o.witness == th::fs(g, {"1/2"}));
}

TEST_CASE("continuity and openness match the defining inequalities") {
  const auto gs = grounds();
  std::size_t checked = 0;
  for (const Ground& x : gs)
    for (const Ground& y : gs) {
      const auto xs = enumerate_interior_maps(x);
      const auto ys = enumerate_interior_maps(y);
      for (const auto& g : enumerate_morphisms(x, y))
        for (std::size_t a = 0; a < xs.size(); a += 7)
          for (std::size_t b = 0; b < ys.size(); b += 5) {
            const VbSpace src{xs[a]};
            const VbSpace dst{ys[b]};
            CHECK(static_cast<bool>(is_continuous(g, src, dst)) ==
                  oracle::continuous(g, oracle::as_op(xs[a]), oracle::as_op(ys[b])));
            CHECK(static_cast<bool>(is_open_morphism(g, src, dst)) ==
                  oracle::open(g, oracle::as_op(xs[a]), oracle::as_op(ys[b])));
            ++checked;
          }
    }
  CHECK(checked > 1000);
}

TEST_CASE("anything between discrete spaces is continuous") {
  for (const Ground& x : grounds())
    for (const Ground& y : grounds())
      for (const auto& g : enumerate_morphisms(x, y))
        CHECK(is_continuous(g, VbSpace{discrete(x)}, VbSpace{discrete(y)}));
}

TEST_CASE("initial interior examples") {
  auto c3 = th::godel(3);
  const Ground x = th::ground(2, c3);
  const Ground y = th::ground(1, c3);
  const auto g = th::morphism(x, y, {0, 0}, {"0", "1/2", "1"});
  CHECK(initial_interior(g, VbSpace{least(y)}) == least(x));

  const auto id = GroundMorphism::identity(x);
  for (const auto& i : enumerate_interior_maps(x)) CHECK(initial_interior(id, VbSpace{i}) == i);

  for (const Ground& dom : grounds())
    for (const auto& h : enumerate_morphisms(dom, x)) {
      const auto init = initial_interior(h, VbSpace{discrete(x)});
      for (const auto& u : dom.all_fuzzy_sets())
        CHECK(init(u) == vb_backward(h, vb_right_adjoint(h, u)));
    }
}

TEST_CASE("initial interior is the least interior map making g continuous") {
  std::size_t compared = 0;
  for (const Ground& x : grounds())
    for (const Ground& y : grounds()) {
      if (x.powerset_size() * y.powerset_size() > 81) continue;
      const auto ys = enumerate_interior_maps(y);
      for (const auto& g : enumerate_morphisms(x, y))
        for (std::size_t b = 0; b < ys.size(); b += 3) {
          const VbSpace dst{ys[b]};
          const auto init = initial_interior(g, dst);
          CHECK(init == least_continuous_interior(g, dst));
          CHECK(is_continuous(g, VbSpace{init}, dst));
          const auto o = oracle_least_continuous(g, ys[b]);
          REQUIRE(o.has_value());
          CHECK(init == *o);
          const PowersetTables pt(x);
          const auto mt = morphism_tables(g);
          CHECK(initial_table(mt, ys[b].table()) == init.table());
          CHECK(continuity_requirement(pt, mt, ys[b].table()) == init.table());
          ++compared;
        }
    }
  CHECK(compared > 100);
}

TEST_CASE("structured sources and their lifts") {
  auto c3 = th::godel(3);
  const Ground x = th::ground(2, c3);
  const Ground y = th::ground(1, c3);
  const auto g = th::morphism(x, y, {0, 0}, {"0", "1/2", "1"});
  const SourceMember to_discrete{g, VbSpace{discrete(y)}};
  const SourceMember to_least{g, VbSpace{least(y)}};

  const auto single = StructuredSource::make(x, {to_discrete});
  CHECK(initial_from_source(single) == initial_interior(g, to_discrete.target));
  CHECK(initial_from_source(StructuredSource::make(x, {to_discrete, to_discrete})) ==
        initial_from_source(single));

  const auto both = StructuredSource::make(x, {to_discrete, to_least});
  const auto j = initial_from_source(both, LiftRule::join);
  const auto m = initial_from_source(both, LiftRule::meet);
  const auto a = initial_interior(g, to_discrete.target);
  const auto b = initial_interior(g, to_least.target);
  for (const auto& u : x.all_fuzzy_sets()) {
    CHECK(j(u) == x.join(a(u), b(u)));
    CHECK(m(u) == x.meet(a(u), b(u)));
  }
  CHECK(initial_from_source(StructuredSource::make(x, {}), LiftRule::join) == least(x));
  CHECK(initial_from_source(StructuredSource::make(x, {}), LiftRule::meet) == discrete(x));
  CHECK(kind_of([&] { StructuredSource::make(y, {to_discrete}); }) == ErrorKind::GroundMismatch);
}

TEST_CASE("initiality of the join lift against the direct oracle") {
  SearchBounds bounds;
  const std::vector<Ground> tests{th::ground(1, th::godel(2)), th::ground(1, th::godel(3)),
                                  th::ground(1, th::luka(3)), th::ground(2, th::godel(2))};
  std::size_t sources = 0;
  for (const Ground& x : {th::ground(1, th::godel(3)), th::ground(2, th::godel(2))})
    for (const Ground& y : grounds()) {
      const auto ys = enumerate_interior_maps(y);
      const auto ms = enumerate_morphisms(x, y);
      for (std::size_t k = 0; k < ms.size(); k += 2)
        for (std::size_t b = 0; b < ys.size(); b += 9) {
          const auto s = StructuredSource::make(x, {SourceMember{ms[k], VbSpace{ys[b]}}});
          const auto lift = initial_from_source(s);
          CHECK_FALSE(oracle::initiality_counterexample(s, lift, tests).has_value());
          const auto v = verify_initiality(s, lift, bounds);
          CHECK(v.holds);
          ++sources;
          if (!(lift == discrete(x))) {
            CHECK(oracle::initiality_counterexample(s, discrete(x), tests).has_value());
            CHECK_FALSE(verify_initiality(s, discrete(x), bounds).holds);
          }
        }
    }
  CHECK(sources > 20);
}

TEST_CASE("initiality verdict on a two-member source") {
  auto c3 = th::godel(3);
  const Ground x = th::ground(2, c3);
  const Ground y = th::ground(1, c3);
  const auto collapse = th::morphism(x, y, {0, 0}, {"0", "1/2", "1"});
  const auto first = th::morphism(x, y, {0, 0}, {"0", "1", "1"});
  const auto s = StructuredSource::make(
      x, {SourceMember{collapse, VbSpace{discrete(y)}}, SourceMember{first, VbSpace{least(y)}}});
  SearchBounds bounds;
  const auto lift = initial_from_source(s);
  const auto ok = verify_initiality(s, lift, bounds);
  CHECK(ok.holds);
  CHECK(ok.instances_checked > 0);
  const auto bad = verify_initiality(s, discrete(x), bounds);
  REQUIRE_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  bool all = true;
  for (bool c : bad.witness->composites_continuous) all = all && c;
  CHECK(bad.witness->continuous_into_lift != all);
  CHECK(bad.witness->test_morphism.codomain() == x);
  SearchBounds huge;
  huge.max_lattice = 5;
  huge.max_points = 3;
  CHECK(kind_of([&] { verify_initiality(s, lift, huge); }) == ErrorKind::BoundsTooLarge);
}

TEST_CASE("idempotency and full productivity are preserved") {
  for (const Ground& x : grounds())
    for (const Ground& y : grounds()) {
      const auto ys = enumerate_interior_maps(y);
      std::vector<char> idem, full;
      for (const auto& i : ys) {
        idem.push_back(static_cast<bool>(is_idempotent(i)));
        full.push_back(static_cast<bool>(is_fully_productive(i)));
      }
      for (const auto& g : enumerate_morphisms(x, y))
        for (std::size_t k = 0; k < ys.size(); ++k) {
          const VbSpace t{ys[k]};
          if (idem[k]) {
            CHECK(preserves_idempotency_check(g, t));
          } else if (k % 17 == 0) {
            CHECK(kind_of([&] { preserves_idempotency_check(g, t); }) ==
                  ErrorKind::PropertyPreconditionFailed);
          }
          if (full[k]) CHECK(preserves_full_productivity_check(g, t));
        }
    }
}

TEST_CASE("preimages of open sets are open") {
  auto c3 = th::godel(3);
  const Ground x = th::ground(2, c3);
  const Ground y = th::ground(1, c3);
  const auto g = th::morphism(x, y, {0, 0}, {"0", "1/2", "1"});
  const VbSpace src{least(x)};
  const VbSpace dst{least(y)};
  CHECK(preimage_of_open_is_open(g, src, dst, y.top()));
  CHECK(preimage_of_open_is_open(g, src, dst, y.bottom()));
  CHECK(kind_of([&] { preimage_of_open_is_open(g, src, dst, th::fs(y, {"1/2"})); }) ==
        ErrorKind::PropertyPreconditionFailed);
  CHECK(kind_of([&] { preimage_of_open_is_open(g, src, VbSpace{discrete(y)}, y.top()); }) ==
        ErrorKind::NotContinuous);

  for (const Ground& a : grounds())
    for (const Ground& b : grounds()) {
      if (a.powerset_size() * b.powerset_size() > 81) continue;
      const auto as = enumerate_interior_maps(a);
      const auto bs = enumerate_interior_maps(b);
      for (const auto& h : enumerate_morphisms(a, b))
        for (std::size_t p = 0; p < as.size(); p += 13)
          for (std::size_t q = 0; q < bs.size(); q += 13) {
            if (!is_continuous(h, VbSpace{as[p]}, VbSpace{bs[q]})) continue;
            for (const auto& v : open_sets(bs[q]))
              CHECK(preimage_of_open_is_open(h, VbSpace{as[p]}, VbSpace{bs[q]}, v));
          }
    }
}

TEST_CASE("inverses") {
  auto c3 = th::godel(3);
  const Ground x = th::ground(2, c3);
  const auto swap = th::morphism(x, x, {1, 0}, {"0", "1/2", "1"});
  const auto inv = inverse(swap);
  REQUIRE(inv.has_value());
  CHECK(compose(*inv, swap) == GroundMorphism::identity(x));
  const Ground y = th::ground(1, c3);
  CHECK_FALSE(inverse(th::morphism(x, y, {0, 0}, {"0", "1/2", "1"})).has_value());
  CHECK_FALSE(inverse(th::morphism(x, x, {0, 1}, {"0", "1", "1"})).has_value());
}
