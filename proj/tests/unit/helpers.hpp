#ifndef FUZZINT_TESTS_HELPERS_HPP
#define FUZZINT_TESTS_HELPERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "fuzzint/io.hpp"
#include "fuzzint/monoid.hpp"
#include "fuzzint/powerset.hpp"

namespace th {

using namespace fuzzint;

inline std::shared_ptr<const Cqml> godel(std::size_t n) {
  return builtin_chain(ChainKind::godel, n).algebra_ptr();
}
inline std::shared_ptr<const Cqml> luka(std::size_t n) {
  return builtin_chain(ChainKind::lukasiewicz, n).algebra_ptr();
}

inline Ground ground(std::size_t points, std::shared_ptr<const Cqml> algebra) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < points; ++k) names.push_back("p" + std::to_string(k + 1));
  return Ground(names, std::move(algebra));
}

inline FuzzySet fs(const Ground& g, std::vector<std::string> values) {
  return io::fuzzy_set_from_json(io::json(values), g);
}

inline std::vector<Elem> elems(const FiniteLattice& l, std::vector<std::string> names) {
  std::vector<Elem> out;
  for (const auto& n : names) out.push_back(l.index_of(n));
  return out;
}

inline GroundMorphism morphism(const Ground& x, const Ground& y, std::vector<std::size_t> f,
                               std::vector<std::string> phi_op) {
  PointMap pm{std::move(f), y.points()};
  return GroundMorphism::validate(x, y, pm, elems(x.lattice(), phi_op));
}

inline std::shared_ptr<const FiniteLattice> diamond() {
  std::vector<FiniteLattice::OrderPair> leq{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::from_relation({"0", "a", "b", "1"}, leq, true));
}

inline std::shared_ptr<const FiniteLattice> pentagon() {
  std::vector<FiniteLattice::OrderPair> leq{{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}};
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::from_relation({"0", "a", "b", "c", "1"}, leq, true));
}

}  // namespace th

#endif  // FUZZINT_TESTS_HELPERS_HPP
