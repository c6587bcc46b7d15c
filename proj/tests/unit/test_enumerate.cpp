#include <doctest.h>

#include <set>

#include "../oracles/oracles.hpp"
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

// Backtracking count of contractive, monotone maps fixing 1_X. Values are
// assigned in code order and checked against every earlier comparable code.
std::size_t backtrack_count(const Ground& g) {
  const auto all = oracle::all_sets(g);
  const std::size_t n = all.size();
  std::vector<std::size_t> img(n, 0);
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      ++count;
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!oracle::leq(g.lattice(), all[c], all[k])) continue;
      if (all[k] == g.top() && !(all[c] == g.top())) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (oracle::leq(g.lattice(), all[j], all[k])) ok = oracle::leq(g.lattice(), all[img[j]], all[c]);
        if (ok && oracle::leq(g.lattice(), all[k], all[j]))
          ok = oracle::leq(g.lattice(), all[c], all[img[j]]);
      }
      if (!ok) continue;
      img[k] = c;
      go(k + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace

TEST_CASE("interior map counts agree with generate-and-filter") {
  CHECK(enumerate_interior_maps(th::ground(1, th::godel(2))).size() == 1);
  CHECK(enumerate_interior_maps(th::ground(1, th::godel(3))).size() == 2);
  CHECK(enumerate_interior_maps(th::ground(1, th::godel(4))).size() == 5);
  CHECK(enumerate_interior_maps(th::ground(2, th::godel(2))).size() == 4);
  for (auto g : {th::ground(1, th::godel(2)), th::ground(1, th::godel(3)), th::ground(1, th::godel(4)),
                 th::ground(2, th::godel(2))})
    CHECK(enumerate_interior_maps(g).size() == oracle::count_interior_maps(g));
}

TEST_CASE("interior map counts agree with backtracking on larger grounds") {
  const Ground x = th::ground(2, th::godel(3));
  CHECK(enumerate_interior_tables(x).size() == 400);
  CHECK(backtrack_count(x) == 400);
  CHECK(enumerate_interior_tables(th::ground(1, th::godel(5))).size() ==
        backtrack_count(th::ground(1, th::godel(5))));
}

TEST_CASE("enumerated interior tables are distinct and valid") {
  for (auto g : {th::ground(2, th::godel(3)), th::ground(2, th::luka(3)), th::ground(1, th::godel(5))}) {
    const auto tables = enumerate_interior_tables(g);
    const PowersetTables pt(g);
    std::set<std::vector<Code>> seen(tables.begin(), tables.end());
    CHECK(seen.size() == tables.size());
    for (const auto& t : tables) {
      CHECK(pt.is_interior_table(t));
      CHECK_FALSE(check_interior_axioms(FuzzyOperator::from_table(g, t)));
    }
  }
}

TEST_CASE("operator-space cap") {
  const Ground big = th::ground(2, th::godel(4));
  CHECK(kind_of([&] { enumerate_interior_tables(big); }) == ErrorKind::BoundsExceeded);
  CHECK(naive_operator_count(th::ground(1, th::godel(3))) == doctest::Approx(27.0));
}

TEST_CASE("powerset tables") {
  const Ground g = th::ground(2, th::godel(3));
  const PowersetTables pt(g);
  CHECK(pt.size() == 9);
  CHECK(g.decode(pt.top()) == g.top());
  CHECK(g.decode(pt.bottom()) == g.bottom());
  for (Code a = 0; a < 9; ++a)
    for (Code b = 0; b < 9; ++b) {
      CHECK(pt.leq(a, b) == g.leq(g.decode(a), g.decode(b)));
      CHECK(g.decode(pt.join(a, b)) == g.join(g.decode(a), g.decode(b)));
      CHECK(g.decode(pt.meet(a, b)) == g.meet(g.decode(a), g.decode(b)));
    }
  const auto& order = pt.linear_extension();
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) CHECK_FALSE(pt.leq(order[j], order[i]));
}

TEST_CASE("basis maps and morphisms") {
  // Valid φᵒᵖ : C3 → C2 are the maps sending 1 to 1 and 0 to 0 that are monotone
  // and preserve min: exactly ½ ↦ 0 and ½ ↦ 1.
  const auto maps = enumerate_basis_maps(*th::godel(3), *th::godel(2));
  CHECK(maps.size() == 2);
  CHECK(enumerate_basis_maps(*th::godel(3), *th::godel(3)).size() == 3);  // ½ ↦ 0, ½, 1
  // Łukasiewicz ⊗ is not preserved by anything that keeps ½ strictly inside.
  for (const auto& m : enumerate_basis_maps(*th::luka(3), *th::godel(3))) CHECK(m[1] != 1);
  const Ground x = th::ground(2, th::godel(3));
  const Ground y = th::ground(1, th::godel(3));
  CHECK(enumerate_morphisms(x, y).size() == 3);
  CHECK(enumerate_morphisms(y, x).size() == 2 * 3);
}

TEST_CASE("bounds parsing") {
  const SearchBounds b = parse_bounds("max_x=3,max_l=4,max_tables=1e6,budget=90s,family=cqml,workers=2");
  CHECK(b.max_points == 3);
  CHECK(b.max_lattice == 4);
  CHECK(b.max_tables == doctest::Approx(1e6));
  CHECK(b.budget == std::chrono::seconds(90));
  CHECK(b.family == "cqml");
  CHECK(b.workers == 2);
  CHECK(parse_bounds("") == SearchBounds{});
  CHECK(parse_bounds("budget=250ms").budget == std::chrono::milliseconds(250));
  CHECK(format_budget(std::chrono::seconds(60)) == "60s");
  CHECK(format_budget(std::chrono::milliseconds(250)) == "250ms");
  for (const char* bad : {"max_x", "max_x=0", "max_l=1", "family=ring", "foo=1", "max_x=1.5",
                          "budget=-1s", "workers=0"})
    CHECK(kind_of([&] { parse_bounds(bad); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("ground catalog") {
  SearchBounds b;
  CHECK(algebra_catalog(b).size() == 3);  // godel-2, godel-3, lukasiewicz-3
  b.max_lattice = 4;
  CHECK(algebra_catalog(b).size() == 6);  // + godel-4, lukasiewicz-4, boolean-4
  b.family = "cqml";
  const auto with_join = algebra_catalog(b);
  CHECK(with_join.size() == 6 + 4);  // one ∨-tensor per distinct lattice
  b.max_points = 2;
  CHECK(enumerate_grounds(b).size() == 2 * with_join.size());
}
