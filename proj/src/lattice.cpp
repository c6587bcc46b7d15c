#include "fuzzint/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fuzzint/error.hpp"

namespace fuzzint {

namespace {

std::vector<bool> closure_of(std::size_t n, std::vector<bool> rel) {
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = true;
  return rel;
}

}  // namespace

FiniteLattice FiniteLattice::from_relation(std::vector<std::string> names,
                                           std::span<const OrderPair> leq, bool closure,
                                           const LatticeOptions& options) {
  const std::size_t n = names.size();
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx.emplace(names[i], i);
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end())
      throw Error(ErrorKind::UnknownElement, "order relation mentions unknown element '" + s + "'",
                  {s});
    return it->second;
  };
  std::vector<bool> rel(n * n, false);
  for (const auto& [a, b] : leq) rel[lookup(a) * n + lookup(b)] = true;
  if (closure) rel = closure_of(n, std::move(rel));
  return from_matrix(std::move(names), std::move(rel), options);
}

FiniteLattice FiniteLattice::from_matrix(std::vector<std::string> names, std::vector<bool> leq,
                                         const LatticeOptions& options) {
  FiniteLattice l;
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::EmptyCarrier, "lattice has no elements");
  if (n > options.max_size)
    throw Error(ErrorKind::TooLarge, "lattice has " + std::to_string(n) +
                                         " elements; limit is " + std::to_string(options.max_size));
  if (leq.size() != n * n) throw Error(ErrorKind::InvalidArgument, "order matrix has wrong size");
  l.names_ = std::move(names);
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.by_name_.emplace(l.names_[i], static_cast<Elem>(i)).second)
      throw Error(ErrorKind::DuplicateElement, "duplicate element '" + l.names_[i] + "'",
                  {l.names_[i]});
  }
  l.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n * n; ++i) l.leq_[i] = leq[i] ? 1 : 0;
  l.build(options);
  return l;
}

FiniteLattice FiniteLattice::chain(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<bool> rel(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) rel[i * n + j] = true;
  return from_matrix(std::move(names), std::move(rel), LatticeOptions{std::max<std::size_t>(n, 64)});
}

void FiniteLattice::build(const LatticeOptions&) {
  const std::size_t n = names_.size();
  auto le = [&](std::size_t a, std::size_t b) { return leq_[a * n + b] != 0; };

  for (std::size_t a = 0; a < n; ++a)
    if (!le(a, a))
      throw Error(ErrorKind::NotAPartialOrder, "relation is not reflexive at " + names_[a],
                  {names_[a]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (le(a, b) && le(b, a))
        throw Error(ErrorKind::NotAPartialOrder,
                    "relation is not antisymmetric: " + names_[a] + " and " + names_[b],
                    {names_[a], names_[b]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (le(a, b))
        for (std::size_t c = 0; c < n; ++c)
          if (le(b, c) && !le(a, c))
            throw Error(ErrorKind::NotAPartialOrder,
                        "relation is not transitive: " + names_[a] + " <= " + names_[b] +
                            " <= " + names_[c],
                        {names_[a], names_[b], names_[c]});

  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::optional<std::size_t> lub;
      std::optional<std::size_t> glb;
      for (std::size_t c = 0; c < n; ++c) {
        if (le(a, c) && le(b, c) && (!lub || le(c, *lub))) lub = c;
        if (le(c, a) && le(c, b) && (!glb || le(*glb, c))) glb = c;
      }
      // The candidate found above is minimal among those seen; it is the
      // least upper bound only if it lies below every upper bound.
      bool lub_ok = lub.has_value();
      bool glb_ok = glb.has_value();
      for (std::size_t c = 0; c < n && (lub_ok || glb_ok); ++c) {
        if (lub_ok && le(a, c) && le(b, c) && !le(*lub, c)) lub_ok = false;
        if (glb_ok && le(c, a) && le(c, b) && !le(c, *glb)) glb_ok = false;
      }
      if (!lub_ok)
        throw Error(ErrorKind::MissingBound,
                    "no least upper bound for " + names_[a] + " and " + names_[b],
                    {names_[a], names_[b], "join"});
      if (!glb_ok)
        throw Error(ErrorKind::MissingBound,
                    "no greatest lower bound for " + names_[a] + " and " + names_[b],
                    {names_[a], names_[b], "meet"});
      join_[a * n + b] = join_[b * n + a] = static_cast<Elem>(*lub);
      meet_[a * n + b] = meet_[b * n + a] = static_cast<Elem>(*glb);
    }
  }

  Elem top = 0;
  Elem bot = 0;
  for (std::size_t a = 1; a < n; ++a) {
    top = join_[top * n + a];
    bot = meet_[bot * n + a];
  }
  top_ = top;
  bottom_ = bot;
  if (top_ == bottom_)
    throw Error(ErrorKind::TopEqualsBottom, "lattice must have at least two elements",
                {names_[top_]});

  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) below[a] += le(b, a) ? 1 : 0;
  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), Elem{0});
  std::stable_sort(linear_.begin(), linear_.end(),
                   [&](Elem a, Elem b) { return below[a] < below[b]; });

  upper_covers_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c || !le(a, c)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < n && cover; ++m)
        if (m != a && m != c && le(a, m) && le(m, c)) cover = false;
      if (cover) upper_covers_[a].push_back(static_cast<Elem>(c));
    }

  distributivity_witness_ = find_distributivity_violation(*this);
}

Elem FiniteLattice::join(std::span<const Elem> subset) const {
  Elem acc = bottom_;
  for (Elem e : subset) {
    if (e >= size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
    acc = join(acc, e);
  }
  return acc;
}

Elem FiniteLattice::meet(std::span<const Elem> subset) const {
  Elem acc = top_;
  for (Elem e : subset) {
    if (e >= size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
    acc = meet(acc, e);
  }
  return acc;
}

Elem FiniteLattice::index_of(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end())
    throw Error(ErrorKind::UnknownElement, "unknown lattice element '" + std::string(name) + "'",
                {std::string(name)});
  return it->second;
}

std::vector<std::string> FiniteLattice::names_of(std::span<const Elem> elems) const {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (Elem e : elems) out.push_back(name(e));
  return out;
}

bool FiniteLattice::is_chain() const noexcept {
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

std::optional<DistributivityWitness> find_distributivity_violation(const FiniteLattice& l) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (l.meet(l.join(x, y), z) != l.join(l.meet(x, z), l.meet(y, z)))
          return DistributivityWitness{x, y, z, true};
        if (l.join(l.meet(x, y), z) != l.meet(l.join(x, z), l.join(y, z)))
          return DistributivityWitness{x, y, z, false};
      }
  return std::nullopt;
}

}  // namespace fuzzint
