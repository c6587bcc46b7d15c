#include <doctest.h>

#include "fuzzint/enumerate.hpp"
#include "fuzzint/error.hpp"
#include "helpers.hpp"

using namespace fuzzint;
using io::json;

namespace {

const std::filesystem::path kFixtures = FUZZINT_FIXTURE_DIR;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

io::Context fixtures() { return io::Context{kFixtures}; }

}  // namespace

TEST_CASE("lattice round trip") {
  for (auto l : {th::diamond(), th::pentagon(), th::godel(5)->lattice_ptr()}) {
    const json j = io::to_json(*l);
    CHECK(*io::lattice_from_json(j) == *l);
    CHECK(io::to_json(*io::lattice_from_json(j)) == j);
  }
  const auto n5 = io::lattice_from_json(json("n5.json"), fixtures());
  CHECK(n5->size() == 5);
  CHECK_FALSE(n5->distributive());
}

TEST_CASE("monoid round trip and builtins") {
  const auto g3 = io::monoid_from_json(io::read_json(kFixtures / "godel3.json"));
  REQUIRE(g3.gl.has_value());
  CHECK(*g3.cqml == builtin_chain(ChainKind::godel, 3).algebra());
  const auto l3 = io::monoid_from_json(json("lukasiewicz-3"));
  CHECK(*l3.cqml == builtin_chain(ChainKind::lukasiewicz, 3).algebra());
  for (const auto& m : {g3.cqml, l3.cqml}) CHECK(*io::monoid_from_json(io::to_json(*m)).cqml == *m);

  const json diamond_meet{{"lattice", io::to_json(*th::diamond())}, {"tensor", "meet"}};
  CHECK(io::monoid_from_json(diamond_meet).gl.has_value());
  const json c3_join{{"lattice", io::to_json(th::godel(3)->lattice())}, {"tensor", "join"}, {"kind", "cqml"}};
  const auto cj = io::monoid_from_json(c3_join);
  CHECK_FALSE(cj.gl.has_value());
  CHECK(*io::monoid_from_json(io::to_json(*cj.cqml), {}).cqml == *cj.cqml);

  CHECK(kind_of([] { io::monoid_from_json(io::read_json(kFixtures / "n5_gl.json"), fixtures()); }) ==
        ErrorKind::DistributivityViolation);
}

TEST_CASE("ground and fuzzy set formats") {
  const Ground x = io::ground_from_json(json("ground_x.json"), fixtures());
  CHECK(x.point_names() == std::vector<std::string>{"p1", "p2"});
  CHECK(io::ground_from_json(io::to_json(x)) == x);
  const FuzzySet u = th::fs(x, {"1/2", "1"});
  CHECK(io::fuzzy_set_from_json(io::to_json(x, u), x) == u);
  CHECK(io::fuzzy_set_from_json(json{{"p2", "1"}, {"p1", "1/2"}}, x) == u);
  CHECK(io::fuzzy_set_from_json(json("(1/2,1)"), x) == u);
  CHECK(kind_of([&] { io::fuzzy_set_from_json(json{"1/2"}, x); }) == ErrorKind::CarrierMismatch);
  CHECK(kind_of([&] { io::fuzzy_set_from_json(json{"1/3", "1"}, x); }) == ErrorKind::UnknownElement);
}

TEST_CASE("morphism round trip") {
  const auto g = io::morphism_from_json(json("morphism_swap.json"), fixtures());
  CHECK(g.f(0) == 1);
  CHECK(g.f(1) == 0);
  CHECK(io::morphism_from_json(io::to_json(g)) == g);
  const Ground x = th::ground(2, th::godel(3));
  const Ground y = th::ground(2, th::luka(3));
  for (const auto& h : enumerate_morphisms(x, y)) CHECK(io::morphism_from_json(io::to_json(h)) == h);
}

TEST_CASE("operator and topology formats") {
  const auto t = io::topology_from_json(json("topology_c3.json"), fixtures());
  CHECK(t.opens().size() == 2);
  const auto i = io::interior_from_json(json("topology_c3.json"), fixtures());
  CHECK(i == least(t.ground()));
  CHECK(io::topology_from_json(io::to_json(t)).opens() == t.opens());
  const auto d = io::interior_from_json(json("discrete_c3.json"), fixtures());
  CHECK(d == discrete(d.ground()));
  for (const auto& m : enumerate_interior_maps(th::ground(2, th::godel(3))))
    CHECK(io::interior_from_json(io::to_json(m)) == m);
  CHECK(kind_of([] { io::interior_from_json(json("trivial_c3.json"), fixtures()); }) ==
        ErrorKind::NotInterior);
  CHECK_NOTHROW(io::operator_from_json(json("trivial_c3.json"), fixtures()));
}

TEST_CASE("structured source round trip") {
  const auto s = io::source_from_json(json("source.json"), fixtures());
  CHECK(s.members().size() == 2);
  const auto back = io::source_from_json(io::to_json(s));
  REQUIRE(back.members().size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(back.members()[k].morphism == s.members()[k].morphism);
    CHECK(back.members()[k].target.interior == s.members()[k].target.interior);
  }
}

TEST_CASE("malformed input") {
  CHECK(kind_of([] { io::read_json(kFixtures / "malformed.json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::read_json(kFixtures / "does-not-exist.json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::parse_json("{"); }) == ErrorKind::ParseError);
  CHECK(io::dump(json{{"a", 1}}) == "{\n  \"a\": 1\n}\n");
}
