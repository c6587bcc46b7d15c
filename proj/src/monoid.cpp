#include "fuzzint/monoid.hpp"

#include <numeric>
#include <random>

#include "fuzzint/error.hpp"

namespace fuzzint {

namespace {

std::vector<std::string> names3(const FiniteLattice& l, Elem a, Elem b, Elem c) {
  return {l.name(a), l.name(b), l.name(c)};
}

}  // namespace

Cqml Cqml::validate(std::shared_ptr<const FiniteLattice> lattice, std::vector<Elem> tensor,
                    std::string label) {
  const FiniteLattice& l = *lattice;
  const std::size_t n = l.size();
  if (tensor.size() != n * n)
    throw Error(ErrorKind::IncompleteTable, "tensor table must have " + std::to_string(n * n) +
                                                " entries, got " + std::to_string(tensor.size()));
  for (Elem v : tensor)
    if (v >= n) throw Error(ErrorKind::UnknownElement, "tensor value out of range");
  auto t = [&](Elem a, Elem b) { return tensor[std::size_t{a} * n + b]; };
  const auto m = static_cast<Elem>(n);
  for (Elem a1 = 0; a1 < m; ++a1)
    for (Elem a2 = 0; a2 < m; ++a2) {
      if (a1 == a2 || !l.leq(a1, a2)) continue;
      for (Elem b = 0; b < m; ++b) {
        if (!l.leq(t(a1, b), t(a2, b)))
          throw Error(ErrorKind::NotIsotone,
                      "tensor is not isotone in its first argument: " + l.name(a1) + " <= " +
                          l.name(a2) + " but " + l.name(a1) + "*" + l.name(b) + " > " +
                          l.name(a2) + "*" + l.name(b),
                      names3(l, a1, a2, b));
        if (!l.leq(t(b, a1), t(b, a2)))
          throw Error(ErrorKind::NotIsotone,
                      "tensor is not isotone in its second argument: " + l.name(a1) + " <= " +
                          l.name(a2) + " but " + l.name(b) + "*" + l.name(a1) + " > " +
                          l.name(b) + "*" + l.name(a2),
                      names3(l, a1, a2, b));
      }
    }
  if (t(l.top(), l.top()) != l.top())
    throw Error(ErrorKind::TopNotIdempotent, "top is not idempotent: top*top = " +
                                                 l.name(t(l.top(), l.top())),
                {l.name(t(l.top(), l.top()))});
  Cqml c;
  c.lattice_ = std::move(lattice);
  c.tensor_ = std::move(tensor);
  c.label_ = std::move(label);
  return c;
}

Cqml Cqml::with_meet(std::shared_ptr<const FiniteLattice> lattice, std::string label) {
  const auto n = static_cast<Elem>(lattice->size());
  std::vector<Elem> t(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[std::size_t{a} * n + b] = lattice->meet(a, b);
  return validate(std::move(lattice), std::move(t), std::move(label));
}

Cqml Cqml::with_join(std::shared_ptr<const FiniteLattice> lattice, std::string label) {
  const auto n = static_cast<Elem>(lattice->size());
  std::vector<Elem> t(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[std::size_t{a} * n + b] = lattice->join(a, b);
  return validate(std::move(lattice), std::move(t), std::move(label));
}

Elem residuum_by_join(const Cqml& m, Elem a, Elem b) {
  const FiniteLattice& l = m.lattice();
  Elem acc = l.bottom();
  for (Elem lam = 0; lam < l.size(); ++lam)
    if (l.leq(m.tensor(a, lam), b)) acc = l.join(acc, lam);
  return acc;
}

GlMonoid GlMonoid::validate(std::shared_ptr<const Cqml> cqml, const GlOptions& options) {
  const Cqml& m = *cqml;
  const FiniteLattice& l = m.lattice();
  const auto n = static_cast<Elem>(l.size());

  if (const auto& w = l.distributivity_witness()) {
    const std::string law = w->meet_over_join ? "(x v y) ^ z != (x ^ z) v (y ^ z)"
                                              : "(x ^ y) v z != (x v z) ^ (y v z)";
    throw Error(ErrorKind::DistributivityViolation,
                "lattice is not distributive: " + law + " for x=" + l.name(w->x) +
                    ", y=" + l.name(w->y) + ", z=" + l.name(w->z),
                names3(l, w->x, w->y, w->z));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (m.tensor(a, b) != m.tensor(b, a))
        throw Error(ErrorKind::NotCommutative,
                    "tensor is not commutative at (" + l.name(a) + ", " + l.name(b) + ")",
                    {l.name(a), l.name(b)});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (m.tensor(m.tensor(a, b), c) != m.tensor(a, m.tensor(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "tensor is not associative at (" + l.name(a) + ", " + l.name(b) + ", " +
                          l.name(c) + ")",
                      names3(l, a, b, c));
  for (Elem a = 0; a < n; ++a)
    if (m.tensor(a, l.top()) != a)
      throw Error(ErrorKind::NotIntegral, "top is not a unit: " + l.name(a) + "*top = " +
                                              l.name(m.tensor(a, l.top())),
                  {l.name(a)});
  for (Elem a = 0; a < n; ++a)
    if (m.tensor(a, l.bottom()) != l.bottom())
      throw Error(ErrorKind::NoZero, "bottom is not a zero: " + l.name(a) + "*bottom = " +
                                         l.name(m.tensor(a, l.bottom())),
                  {l.name(a)});

  auto check_family = [&](const std::vector<Elem>& family) {
    const Elem joined = l.join(family);
    for (Elem a = 0; a < n; ++a) {
      Elem rhs = l.bottom();
      for (Elem b : family) rhs = l.join(rhs, m.tensor(a, b));
      if (m.tensor(a, joined) != rhs) {
        std::vector<std::string> w{l.name(a)};
        for (Elem b : family) w.push_back(l.name(b));
        throw Error(ErrorKind::NotJoinDistributive,
                    "tensor does not distribute over the join of a family at " + l.name(a), w);
      }
    }
  };
  if (n <= options.exhaustive_subset_limit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Elem> family;
      for (Elem b = 0; b < n; ++b)
        if (mask >> b & 1U) family.push_back(b);
      check_family(family);
    }
  } else {
    check_family({});
    for (Elem b = 0; b < n; ++b)
      for (Elem c = b; c < n; ++c) check_family({b, c});
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution pick(0.5);
    for (std::size_t s = 0; s < options.sampled_families; ++s) {
      std::vector<Elem> family;
      for (Elem b = 0; b < n; ++b)
        if (pick(rng)) family.push_back(b);
      check_family(family);
    }
  }

  GlMonoid g;
  g.divisor_.assign(std::size_t{n} * n, std::nullopt);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (m.tensor(b, c) == a) {
          g.divisor_[std::size_t{a} * n + b] = c;
          break;
        }
      if (!g.divisor_[std::size_t{a} * n + b])
        throw Error(ErrorKind::NotDivisible,
                    "no divisor: " + l.name(a) + " <= " + l.name(b) + " but no c has " +
                        l.name(b) + "*c = " + l.name(a),
                    {l.name(a), l.name(b)});
    }

  g.residuum_.resize(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) g.residuum_[std::size_t{a} * n + b] = residuum_by_join(m, a, b);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (l.leq(m.tensor(a, b), c) != l.leq(a, g.residuum_[std::size_t{b} * n + c]))
          throw Error(ErrorKind::NotResiduated,
                      "residuation law fails at (" + l.name(a) + ", " + l.name(b) + ", " +
                          l.name(c) + ")",
                      names3(l, a, b, c));
  g.cqml_ = std::move(cqml);
  return g;
}

std::optional<Elem> GlMonoid::divisor(Elem a, Elem b) const noexcept {
  return divisor_[std::size_t{a} * size() + b];
}

std::string chain_element_name(std::size_t k, std::size_t n) {
  const std::size_t den = n - 1;
  if (k == 0) return "0";
  if (k == den) return "1";
  const std::size_t g = std::gcd(k, den);
  return std::to_string(k / g) + "/" + std::to_string(den / g);
}

GlMonoid builtin_chain(ChainKind kind, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "chain length must be at least 2");
  if (n > 64) throw Error(ErrorKind::TooLarge, "chain length limit is 64");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(chain_element_name(k, n));
  auto lattice = std::make_shared<const FiniteLattice>(FiniteLattice::chain(std::move(names)));
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t v = kind == ChainKind::godel ? std::min(a, b)
                                                     : (a + b >= n - 1 ? a + b - (n - 1) : 0);
      t[a * n + b] = static_cast<Elem>(v);
    }
  const std::string label =
      (kind == ChainKind::godel ? "godel-" : "lukasiewicz-") + std::to_string(n);
  return GlMonoid::validate(Cqml::validate(std::move(lattice), std::move(t), label));
}

Cqml pointwise_power(const Cqml& m, std::size_t points) {
  const FiniteLattice& l = m.lattice();
  const std::size_t n = l.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < points; ++i) {
    count *= n;
    if (count > 4096) throw Error(ErrorKind::TooLarge, "pointwise power too large");
  }
  auto digit = [&](std::size_t code, std::size_t pos) {
    for (std::size_t i = pos + 1; i < points; ++i) code /= n;
    return static_cast<Elem>(code % n);
  };
  std::vector<std::string> names;
  for (std::size_t c = 0; c < count; ++c) {
    std::string s = "(";
    for (std::size_t p = 0; p < points; ++p) s += (p ? "," : "") + l.name(digit(c, p));
    names.push_back(s + ")");
  }
  std::vector<bool> rel(count * count);
  std::vector<Elem> t(count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      bool le = true;
      std::size_t prod = 0;
      for (std::size_t p = 0; p < points; ++p) {
        le = le && l.leq(digit(a, p), digit(b, p));
        prod = prod * n + m.tensor(digit(a, p), digit(b, p));
      }
      rel[a * count + b] = le;
      t[a * count + b] = static_cast<Elem>(prod);
    }
  auto lattice = std::make_shared<const FiniteLattice>(
      FiniteLattice::from_matrix(std::move(names), std::move(rel), LatticeOptions{count}));
  return Cqml::validate(std::move(lattice), std::move(t),
                        m.label() + "^" + std::to_string(points));
}

}  // namespace fuzzint
