#include "fuzzint/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "fuzzint/error.hpp"

namespace fuzzint {

namespace {

std::size_t parse_count(std::string_view key, std::string_view value) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(std::string(value), &pos);
    if (pos != value.size() || d < 0 || d != std::floor(d)) throw std::invalid_argument("");
    return static_cast<std::size_t>(d);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument,
                "bound " + std::string(key) + " needs a non-negative integer, got '" +
                    std::string(value) + "'");
  }
}

std::chrono::milliseconds parse_budget(std::string_view value) {
  std::string v(value);
  double scale = 1000.0;
  if (v.size() > 2 && v.ends_with("ms")) {
    scale = 1.0;
    v.resize(v.size() - 2);
  } else if (v.size() > 1 && v.ends_with("s")) {
    v.resize(v.size() - 1);
  }
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size() || !(d > 0)) throw std::invalid_argument("");
    return std::chrono::milliseconds(static_cast<long long>(std::llround(d * scale)));
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "budget needs a positive duration, got '" +
                                                std::string(value) + "'");
  }
}

}  // namespace

SearchBounds parse_bounds(std::string_view text, SearchBounds base) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::InvalidArgument, "bound '" + std::string(item) + "' lacks '='");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "max_x") {
      base.max_points = parse_count(key, value);
    } else if (key == "max_l") {
      base.max_lattice = parse_count(key, value);
    } else if (key == "max_tables") {
      try {
        base.max_tables = std::stod(std::string(value));
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "max_tables needs a number");
      }
    } else if (key == "budget") {
      base.budget = parse_budget(value);
    } else if (key == "family") {
      base.family = std::string(value);
    } else if (key == "workers") {
      base.workers = parse_count(key, value);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown bound '" + std::string(key) + "'");
    }
  }
  check_bounds(base);
  return base;
}

SearchBounds bounds_from_env() {
  if (const char* env = std::getenv("FUZZINT_BOUNDS")) return parse_bounds(env);
  return {};
}

void check_bounds(const SearchBounds& b) {
  if (b.max_points == 0 || b.max_lattice < 2 || !(b.max_tables > 0) || b.budget.count() <= 0 ||
      b.workers == 0)
    throw Error(ErrorKind::InvalidArgument,
                "bounds must be positive (max_x >= 1, max_l >= 2, workers >= 1)");
  if (b.family != "gl" && b.family != "cqml")
    throw Error(ErrorKind::InvalidArgument, "family must be 'gl' or 'cqml'");
}

std::string format_budget(std::chrono::milliseconds budget) {
  if (budget.count() % 1000 == 0) return std::to_string(budget.count() / 1000) + "s";
  return std::to_string(budget.count()) + "ms";
}

std::vector<std::shared_ptr<const Cqml>> algebra_catalog(const SearchBounds& bounds) {
  check_bounds(bounds);
  std::vector<std::shared_ptr<const Cqml>> out;
  const std::size_t max_l = std::min<std::size_t>(bounds.max_lattice, 64);
  for (std::size_t n = 2; n <= max_l; ++n)
    out.push_back(builtin_chain(ChainKind::godel, n).algebra_ptr());
  for (std::size_t n = 3; n <= max_l; ++n)
    out.push_back(builtin_chain(ChainKind::lukasiewicz, n).algebra_ptr());
  if (max_l >= 4) {
    const std::vector<FiniteLattice::OrderPair> covers{{"0", "a"}, {"0", "b"}, {"a", "1"},
                                                       {"b", "1"}};
    auto diamond = std::make_shared<const FiniteLattice>(
        FiniteLattice::from_relation({"0", "a", "b", "1"}, covers, true));
    out.push_back(std::make_shared<const Cqml>(Cqml::with_meet(diamond, "boolean-4")));
  }
  if (bounds.family == "cqml") {
    const std::size_t base = out.size();
    for (std::size_t k = 0; k < base; ++k) {
      const auto& lat = out[k]->lattice_ptr();
      bool seen = false;
      for (std::size_t j = base; j < out.size(); ++j) seen = seen || *out[j]->lattice_ptr() == *lat;
      if (seen) continue;
      std::string label = out[k]->label();
      label = label.substr(0, label.find('-'));
      if (label == "godel" || label == "lukasiewicz") label = "chain";
      out.push_back(std::make_shared<const Cqml>(
          Cqml::with_join(lat, label + "-" + std::to_string(lat->size()) + "-join")));
    }
  }
  return out;
}

std::vector<Ground> enumerate_grounds(const SearchBounds& bounds) {
  const auto algebras = algebra_catalog(bounds);
  std::vector<Ground> out;
  for (std::size_t n = 1; n <= bounds.max_points; ++n) {
    std::vector<std::string> points;
    for (std::size_t p = 1; p <= n; ++p) points.push_back("p" + std::to_string(p));
    for (const auto& a : algebras) out.emplace_back(points, a);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {
constexpr Code kDenseLimit = 1024;
}

PowersetTables::PowersetTables(Ground ground) : ground_(std::move(ground)) {
  if (!ground_.materializable())
    throw Error(ErrorKind::GroundTooLarge, "powerset too large for code tables");
  n_ = static_cast<Code>(ground_.powerset_size());
  top_ = ground_.encode(ground_.top());
  bottom_ = ground_.encode(ground_.bottom());
  const FiniteLattice& l = ground_.lattice();
  std::vector<FuzzySet> all = ground_.all_fuzzy_sets();
  leq_.assign(std::size_t{n_} * n_, 0);
  for (Code a = 0; a < n_; ++a)
    for (Code b = 0; b < n_; ++b) leq_[std::size_t{a} * n_ + b] = ground_.leq(all[a], all[b]);
  if (n_ <= kDenseLimit) {
    join_.resize(std::size_t{n_} * n_);
    meet_.resize(std::size_t{n_} * n_);
    for (Code a = 0; a < n_; ++a)
      for (Code b = 0; b < n_; ++b) {
        join_[std::size_t{a} * n_ + b] = ground_.encode(ground_.join(all[a], all[b]));
        meet_[std::size_t{a} * n_ + b] = ground_.encode(ground_.meet(all[a], all[b]));
      }
  }
  std::vector<std::size_t> rank(l.size());
  for (std::size_t k = 0; k < l.linear_extension().size(); ++k) rank[l.linear_extension()[k]] = k;
  std::vector<std::size_t> weight(n_);
  for (Code c = 0; c < n_; ++c)
    for (Elem e : all[c].values) weight[c] += rank[e];
  order_.resize(n_);
  for (Code c = 0; c < n_; ++c) order_[c] = c;
  std::stable_sort(order_.begin(), order_.end(),
                   [&](Code a, Code b) { return weight[a] < weight[b]; });
  lower_covers_.resize(n_);
  for (Code c = 0; c < n_; ++c)
    for (std::size_t x = 0; x < all[c].size(); ++x)
      for (Elem up : l.upper_covers(all[c][x])) {
        FuzzySet v = all[c];
        v.values[x] = up;
        lower_covers_[ground_.encode(v)].push_back(c);
      }
  for (auto& lc : lower_covers_) std::sort(lc.begin(), lc.end());
}

Code PowersetTables::join(Code a, Code b) const {
  if (!join_.empty()) return join_[std::size_t{a} * n_ + b];
  return ground_.encode(ground_.join(ground_.decode(a), ground_.decode(b)));
}

Code PowersetTables::meet(Code a, Code b) const {
  if (!meet_.empty()) return meet_[std::size_t{a} * n_ + b];
  return ground_.encode(ground_.meet(ground_.decode(a), ground_.decode(b)));
}

bool PowersetTables::table_leq(const std::vector<Code>& a, const std::vector<Code>& b) const {
  for (Code c = 0; c < n_; ++c)
    if (!leq(a[c], b[c])) return false;
  return true;
}

std::vector<Code> PowersetTables::table_join(const std::vector<Code>& a,
                                             const std::vector<Code>& b) const {
  std::vector<Code> out(n_);
  for (Code c = 0; c < n_; ++c) out[c] = join(a[c], b[c]);
  return out;
}

std::vector<Code> PowersetTables::table_meet(const std::vector<Code>& a,
                                             const std::vector<Code>& b) const {
  std::vector<Code> out(n_);
  for (Code c = 0; c < n_; ++c) out[c] = meet(a[c], b[c]);
  return out;
}

bool PowersetTables::is_interior_table(const std::vector<Code>& t) const {
  if (t.size() != n_ || t[top_] != top_) return false;
  for (Code c = 0; c < n_; ++c) {
    if (!leq(t[c], c)) return false;
    for (Code d : lower_covers_[c])
      if (!leq(t[d], t[c])) return false;
  }
  return true;
}

double naive_operator_count(const Ground& ground) {
  const double l = static_cast<double>(ground.lattice().size());
  const double x = static_cast<double>(ground.points());
  return std::pow(l, x * std::pow(l, x));
}

std::vector<std::vector<Code>> enumerate_interior_tables(const Ground& ground,
                                                         const SearchBounds& bounds) {
  const double estimate = naive_operator_count(ground);
  if (!ground.materializable() || !(estimate <= bounds.max_tables)) {
    std::ostringstream msg;
    msg << "operator space |L|^(|X|*|L|^|X|) = " << estimate << " exceeds max_tables "
        << bounds.max_tables;
    throw Error(ErrorKind::BoundsExceeded, msg.str());
  }
  const PowersetTables pt(ground);
  const Code n = pt.size();
  const auto& order = pt.linear_extension();
  std::vector<std::vector<Code>> candidates(n);
  for (Code u = 0; u < n; ++u)
    for (Code c = 0; c < n; ++c)
      if (pt.leq(c, u) && (u != pt.top() || c == pt.top())) candidates[u].push_back(c);

  std::vector<std::vector<Code>> out;
  std::vector<Code> table(n, 0);
  std::vector<std::size_t> choice(n, 0);
  std::size_t depth = 0;
  // Iterative backtracking along the linear extension.
  auto admissible = [&](Code u, Code c) {
    for (Code d : pt.lower_covers(u))
      if (!pt.leq(table[d], c)) return false;
    return true;
  };
  choice[0] = 0;
  while (true) {
    const Code u = order[depth];
    bool placed = false;
    while (choice[depth] < candidates[u].size()) {
      const Code c = candidates[u][choice[depth]++];
      if (admissible(u, c)) {
        table[u] = c;
        placed = true;
        break;
      }
    }
    if (placed) {
      if (depth + 1 == n) {
        out.push_back(table);
      } else {
        ++depth;
        choice[depth] = 0;
      }
    } else {
      if (depth == 0) break;
      --depth;
    }
  }
  return out;
}

std::vector<InteriorMap> enumerate_interior_maps(const Ground& ground,
                                                 const SearchBounds& bounds) {
  std::vector<InteriorMap> out;
  for (auto& t : enumerate_interior_tables(ground, bounds))
    out.push_back(InteriorMap::validate(FuzzyOperator::from_table(ground, std::move(t))));
  return out;
}

std::vector<std::vector<Elem>> enumerate_basis_maps(const Cqml& m, const Cqml& l) {
  const std::size_t nm = m.size();
  const std::size_t nl = l.size();
  auto ms = std::make_shared<const Cqml>(m);
  auto ls = std::make_shared<const Cqml>(l);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> phi(nm, 0);
  while (true) {
    if (phi[m.lattice().top()] == l.lattice().top() &&
        phi[m.lattice().bottom()] == l.lattice().bottom()) {
      try {
        validate_basis_map(BasisMap{ms, ls, phi});
        out.push_back(phi);
      } catch (const Error&) {
      }
    }
    std::size_t k = nm;
    while (k > 0) {
      --k;
      if (++phi[k] < nl) break;
      phi[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::vector<GroundMorphism> enumerate_morphisms(const Ground& domain, const Ground& codomain) {
  const auto phis = enumerate_basis_maps(codomain.algebra(), domain.algebra());
  std::vector<GroundMorphism> out;
  if (phis.empty()) return out;
  const std::size_t nx = domain.points();
  const std::size_t ny = codomain.points();
  PointMap f;
  f.image.assign(nx, 0);
  f.codomain_size = ny;
  while (true) {
    for (const auto& phi : phis) out.push_back(GroundMorphism::validate(domain, codomain, f, phi));
    std::size_t k = nx;
    bool done = true;
    while (k > 0) {
      --k;
      if (++f.image[k] < ny) {
        done = false;
        break;
      }
      f.image[k] = 0;
    }
    if (done) return out;
  }
}

MorphismTables morphism_tables(const GroundMorphism& g) {
  const Ground& x = g.domain();
  const Ground& y = g.codomain();
  if (!x.materializable() || !y.materializable())
    throw Error(ErrorKind::GroundTooLarge, "powerset too large for code tables");
  MorphismTables t;
  t.backward.resize(y.powerset_size());
  for (Code v = 0; v < t.backward.size(); ++v) t.backward[v] = x.encode(vb_backward(g, y.decode(v)));
  t.right_adjoint.resize(x.powerset_size());
  for (Code u = 0; u < t.right_adjoint.size(); ++u)
    t.right_adjoint[u] = y.encode(vb_right_adjoint(g, x.decode(u)));
  return t;
}

Deadline::Deadline(std::chrono::milliseconds budget)
    : end_(std::chrono::steady_clock::now() + budget) {}

bool Deadline::expired() const { return std::chrono::steady_clock::now() > end_; }

void Deadline::check() const {
  if (expired()) throw Error(ErrorKind::BoundsExceeded, "time budget exhausted");
}

}  // namespace fuzzint
