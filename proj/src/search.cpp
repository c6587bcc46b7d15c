#include "fuzzint/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <thread>
#include <unordered_map>

#include "fuzzint/continuity.hpp"
#include "fuzzint/error.hpp"

namespace fuzzint {

namespace {

using json = io::json;
using Table = std::vector<Code>;

struct TableHash {
  std::size_t operator()(const Table& t) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Code c : t) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// Shared, read-only enumeration data

struct GroundInfo {
  explicit GroundInfo(const Ground& g) : pt(g) {}
  PowersetTables pt;
  std::vector<Table> interiors;
  std::unordered_map<Table, std::uint32_t, TableHash> index;
  std::vector<std::uint32_t> join_idx;  // interiors × interiors
  std::vector<std::uint32_t> meet_idx;
  std::uint32_t least_idx = 0;
  std::uint32_t discrete_idx = 0;

  const Ground& ground() const noexcept { return pt.ground(); }
  std::uint32_t idx(const Table& t) const {
    auto it = index.find(t);
    if (it == index.end()) throw Error(ErrorKind::NotInterior, "table is not an interior map");
    return it->second;
  }
};

struct MorphInfo {
  GroundMorphism g;
  MorphismTables t;
};

struct UniverseOptions {
  bool interiors = true;
  bool operator_lattice = false;
};

class Universe {
 public:
  Universe(const SearchBounds& bounds, UniverseOptions opts) {
    for (const Ground& g : enumerate_grounds(bounds)) {
      if (!g.materializable())
        throw Error(ErrorKind::BoundsExceeded, "powerset of a ground exceeds the table limit");
      auto info = std::make_unique<GroundInfo>(g);
      if (opts.interiors) {
        info->interiors = enumerate_interior_tables(g, bounds);
        for (std::uint32_t k = 0; k < info->interiors.size(); ++k)
          info->index.emplace(info->interiors[k], k);
        info->least_idx = info->idx(least(g).table());
        info->discrete_idx = info->idx(discrete(g).table());
      }
      if (opts.interiors && opts.operator_lattice) {
        const std::size_t n = info->interiors.size();
        info->join_idx.resize(n * n);
        info->meet_idx.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            info->join_idx[a * n + b] =
                info->idx(info->pt.table_join(info->interiors[a], info->interiors[b]));
            info->meet_idx[a * n + b] =
                info->idx(info->pt.table_meet(info->interiors[a], info->interiors[b]));
          }
      }
      grounds_.push_back(std::move(info));
    }
    const std::size_t n = grounds_.size();
    morphs_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (auto& g : enumerate_morphisms(grounds_[a]->ground(), grounds_[b]->ground())) {
          MorphismTables t = morphism_tables(g);
          morphs_[a * n + b].push_back({std::move(g), std::move(t)});
        }
  }

  std::size_t size() const noexcept { return grounds_.size(); }
  const GroundInfo& ground(std::size_t k) const { return *grounds_[k]; }
  const std::vector<MorphInfo>& morphisms(std::size_t dom, std::size_t cod) const {
    return morphs_[dom * grounds_.size() + cod];
  }

 private:
  std::vector<std::unique_ptr<GroundInfo>> grounds_;
  std::vector<std::vector<MorphInfo>> morphs_;
};

// ---------------------------------------------------------------------------
// Deterministic parallel runner

struct Found {
  json instance;
  json witness;
};

struct ItemOutcome {
  std::size_t checked = 0;
  std::optional<Found> found;
  std::map<std::string, std::size_t> notes;
};

struct RunOutcome {
  std::size_t checked = 0;
  std::optional<Found> found;
  std::map<std::string, std::size_t> notes;
};

using ItemFn = std::function<ItemOutcome(std::size_t)>;

RunOutcome run_items(std::size_t count, const ItemFn& fn, std::size_t workers,
                     const Deadline& deadline) {
  std::vector<std::optional<ItemOutcome>> outcomes(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> best{count};
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < count; i += workers) {
      if (i > best.load()) return;
      try {
        deadline.check();
        outcomes[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
        return;
      }
      if (outcomes[i]->found) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  RunOutcome out;
  const std::size_t last = best.load();
  for (std::size_t i = 0; i < count && i <= last; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.checked += outcomes[i]->checked;
    for (const auto& [k, v] : outcomes[i]->notes) out.notes[k] += v;
    if (i == last) out.found = std::move(outcomes[i]->found);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON helpers

json jset(const Ground& g, Code c) { return io::to_json(g, g.decode(c)); }

json jspace(const Ground& g, const Table& t) {
  return io::to_json(InteriorMap::validate(FuzzyOperator::from_table(g, t)));
}

json jaxiom(const Ground& g, const AxiomViolation& w) {
  json out{{"axiom", to_string(w.axiom)}, {"u", io::to_json(g, w.u)}};
  if (w.v) out["v"] = io::to_json(g, *w.v);
  return out;
}

InteriorAxiom parse_axiom(const std::string& s) {
  for (auto a : {InteriorAxiom::contraction, InteriorAxiom::monotonicity, InteriorAxiom::upper_bound})
    if (to_string(a) == s) return a;
  throw Error(ErrorKind::MalformedBundle, "unknown axiom '" + s + "'");
}

bool axiom_fails(const FuzzyOperator& op, InteriorAxiom ax, const FuzzySet& u,
                 const std::optional<FuzzySet>& v) {
  const Ground& g = op.ground();
  switch (ax) {
    case InteriorAxiom::contraction: return !g.leq(op(u), u);
    case InteriorAxiom::monotonicity: return v && g.leq(u, *v) && !g.leq(op(u), op(*v));
    case InteriorAxiom::upper_bound: return op(g.top()) != g.top();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Bit matrices for continuity/openness relations between interior maps

struct BitMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  BitMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), words((c + 63) / 64), bits(r * ((c + 63) / 64), 0) {}
  void set(std::size_t r, std::size_t c) { bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64); }
  bool get(std::size_t r, std::size_t c) const {
    return (bits[r * words + c / 64] >> (c % 64)) & 1U;
  }
  const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
};

/// Entry (i, j): g is continuous (or open) from src interior i to dst interior j.
BitMatrix relation_matrix(const GroundInfo& src, const GroundInfo& dst, const Table& backward,
                          bool open) {
  const std::size_t nv = backward.size();
  BitMatrix m(src.interiors.size(), dst.interiors.size());
  std::vector<Table> pulled(dst.interiors.size(), Table(nv));
  for (std::size_t j = 0; j < dst.interiors.size(); ++j)
    for (Code v = 0; v < nv; ++v) pulled[j][v] = backward[dst.interiors[j][v]];
  Table lhs(nv);
  for (std::size_t i = 0; i < src.interiors.size(); ++i) {
    for (Code v = 0; v < nv; ++v) lhs[v] = src.interiors[i][backward[v]];
    for (std::size_t j = 0; j < dst.interiors.size(); ++j) {
      bool ok = true;
      for (Code v = 0; v < nv && ok; ++v)
        ok = open ? src.pt.leq(lhs[v], pulled[j][v]) : src.pt.leq(pulled[j][v], lhs[v]);
      if (ok) m.set(i, j);
    }
  }
  return m;
}

Table compose_backward(const Table& first_backward, const Table& second_backward) {
  Table out(second_backward.size());
  for (Code v = 0; v < out.size(); ++v) out[v] = first_backward[second_backward[v]];
  return out;
}

bool table_idempotent(const Table& t) {
  for (Code u = 0; u < t.size(); ++u)
    if (t[t[u]] != t[u]) return false;
  return true;
}

/// First family on which i(⋀F) ≠ ⋀ i(F); empty optional when none.
std::optional<std::vector<Code>> fully_productive_failure(const PowersetTables& pt,
                                                          const Table& t) {
  const Code n = pt.size();
  if (t[pt.top()] != pt.top()) return std::vector<Code>{};
  if (n <= 16) {
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      Code mu = pt.top();
      Code mi = pt.top();
      for (Code c = 0; c < n; ++c)
        if (mask >> c & 1U) {
          mu = pt.meet(mu, c);
          mi = pt.meet(mi, t[c]);
        }
      if (t[mu] != mi) {
        std::vector<Code> family;
        for (Code c = 0; c < n; ++c)
          if (mask >> c & 1U) family.push_back(c);
        return family;
      }
    }
    return std::nullopt;
  }
  for (Code a = 0; a < n; ++a)
    for (Code b = a + 1; b < n; ++b)
      if (t[pt.meet(a, b)] != pt.meet(t[a], t[b])) return std::vector<Code>{a, b};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Properties

struct Property {
  PropertyInfo info;
  std::function<RunOutcome(const SearchBounds&, const Deadline&)> run;
  std::function<ReplayResult(const json& instance, const json& witness)> replay;
};

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.emplace_back(a, b);
  return out;
}

// trivial-literal ------------------------------------------------------------

RunOutcome run_trivial_literal(const SearchBounds& b, const Deadline& d) {
  const auto grounds = enumerate_grounds(b);
  return run_items(
      grounds.size(),
      [&](std::size_t i) {
        ItemOutcome o;
        const Ground& g = grounds[i];
        const FuzzyOperator op = trivial_literal(g);
        o.checked = g.powerset_size();
        if (auto w = check_interior_axioms(op)) {
          json wit = jaxiom(g, *w);
          wit["image"] = io::to_json(g, op(w->u));
          o.found = Found{json{{"ground", io::to_json(g)}, {"operator", "trivial-literal"}}, wit};
        }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_axiom_on(const FuzzyOperator& op, const json& w) {
  const Ground& g = op.ground();
  const FuzzySet u = io::fuzzy_set_from_json(w.at("u"), g);
  std::optional<FuzzySet> v;
  if (w.contains("v")) v = io::fuzzy_set_from_json(w.at("v"), g);
  const InteriorAxiom ax = parse_axiom(w.at("axiom").get<std::string>());
  ReplayResult r;
  r.counterexample = axiom_fails(op, ax, u, v);
  r.detail = to_string(ax) + (r.counterexample ? " fails" : " holds") + " at u=" + g.render(u) +
             " (image " + g.render(op(u)) + ")";
  return r;
}

ReplayResult replay_trivial_literal(const json& inst, const json& w) {
  return replay_axiom_on(trivial_literal(io::ground_from_json(inst.at("ground"))), w);
}

// interior-join-closure / interior-meet-closure -----------------------------

RunOutcome run_operator_closure(const SearchBounds& b, const Deadline& d, bool join) {
  const Universe u(b, {true, false});
  return run_items(
      u.size(),
      [&](std::size_t i) {
        ItemOutcome o;
        const GroundInfo& gi = u.ground(i);
        const auto& T = gi.interiors;
        const Ground& g = gi.ground();
        auto fail_extremal = [&](const char* check, std::size_t k) {
          o.found = Found{json{{"ground", io::to_json(g)}, {"family", json::array({jspace(g, T[k])})}},
                          json{{"check", check}}};
        };
        for (std::size_t k = 0; k < T.size() && !o.found; ++k) {
          if (!gi.pt.table_leq(T[gi.least_idx], T[k])) fail_extremal("least-below", k);
          else if (!gi.pt.table_leq(T[k], T[gi.discrete_idx])) fail_extremal("discrete-above", k);
          ++o.checked;
        }
        auto check_family = [&](const std::vector<std::size_t>& family) {
          Table acc = T[family.front()];
          for (std::size_t k = 1; k < family.size(); ++k)
            acc = join ? gi.pt.table_join(acc, T[family[k]]) : gi.pt.table_meet(acc, T[family[k]]);
          ++o.checked;
          if (gi.pt.is_interior_table(acc)) return;
          json fam = json::array();
          for (std::size_t k : family) fam.push_back(jspace(g, T[k]));
          const auto w = check_interior_axioms(FuzzyOperator::from_table(g, acc));
          json wit = jaxiom(g, *w);
          wit["check"] = join ? "join" : "meet";
          o.found = Found{json{{"ground", io::to_json(g)}, {"family", fam}}, wit};
        };
        const std::size_t n = T.size();
        for (std::size_t a = 0; a < n && !o.found; ++a)
          for (std::size_t c = a; c < n && !o.found; ++c) check_family({a, c});
        if (n <= 16) {
          for (std::uint32_t mask = 1; mask < (1U << n) && !o.found; ++mask) {
            if (std::popcount(mask) < 3) continue;
            std::vector<std::size_t> family;
            for (std::size_t k = 0; k < n; ++k)
              if (mask >> k & 1U) family.push_back(k);
            check_family(family);
          }
        } else {
          std::mt19937_64 rng(0x0b5e55edULL + i);
          std::uniform_int_distribution<std::size_t> pick(0, n - 1);
          std::uniform_int_distribution<std::size_t> size(3, std::min<std::size_t>(n, 8));
          for (int s = 0; s < 4096 && !o.found; ++s) {
            std::vector<std::size_t> family(size(rng));
            for (auto& k : family) k = pick(rng);
            check_family(family);
          }
        }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_operator_closure(const json& inst, const json& w, bool join) {
  const Ground g = io::ground_from_json(inst.at("ground"));
  std::vector<InteriorMap> family;
  for (const auto& m : inst.at("family")) family.push_back(io::interior_from_json(m));
  if (family.empty()) throw Error(ErrorKind::MalformedBundle, "witness family is empty");
  const std::string check = w.at("check").get<std::string>();
  ReplayResult r;
  if (check == "least-below" || check == "discrete-above") {
    const InteriorMap& m = family.front();
    bool ok = true;
    for (Code c = 0; c < g.powerset_size(); ++c) {
      const FuzzySet x = g.decode(c);
      ok = ok && (check == "least-below" ? g.leq(least(g)(x), m(x)) : g.leq(m(x), x));
    }
    r.counterexample = !ok;
    r.detail = check + (ok ? " holds" : " fails");
    return r;
  }
  const Ground gr = g;
  const FuzzyOperator op = FuzzyOperator::from_rule(g, [&](const FuzzySet& x) {
    FuzzySet acc = family.front()(x);
    for (std::size_t k = 1; k < family.size(); ++k)
      acc = join ? gr.join(acc, family[k](x)) : gr.meet(acc, family[k](x));
    return acc;
  });
  return replay_axiom_on(op, w);
}

// continuity-composition / openness-composition ------------------------------

RunOutcome run_composition(const SearchBounds& b, const Deadline& d, bool open) {
  const Universe u(b, {true, false});
  const std::size_t n = u.size();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) triples.push_back({x, y, z});
  return run_items(
      triples.size(),
      [&](std::size_t item) {
        ItemOutcome o;
        const auto [xi, yi, zi] = triples[item];
        const GroundInfo& X = u.ground(xi);
        const GroundInfo& Y = u.ground(yi);
        const GroundInfo& Z = u.ground(zi);
        const auto& m1 = u.morphisms(xi, yi);
        const auto& m2 = u.morphisms(yi, zi);
        std::vector<BitMatrix> c1, c2;
        for (const auto& g : m1) c1.push_back(relation_matrix(X, Y, g.t.backward, open));
        for (const auto& g : m2) c2.push_back(relation_matrix(Y, Z, g.t.backward, open));
        std::map<Table, BitMatrix> c21_cache;
        std::vector<std::uint64_t> acc;
        for (std::size_t a = 0; a < m1.size(); ++a)
          for (std::size_t bb = 0; bb < m2.size(); ++bb) {
            const Table back = compose_backward(m1[a].t.backward, m2[bb].t.backward);
            auto it = c21_cache.find(back);
            if (it == c21_cache.end())
              it = c21_cache.emplace(back, relation_matrix(X, Z, back, open)).first;
            const BitMatrix& A = c1[a];
            const BitMatrix& B = c2[bb];
            const BitMatrix& C = it->second;
            for (std::size_t r = 0; r < A.rows; ++r) {
              acc.assign(B.words, 0);
              for (std::size_t y = 0; y < A.cols; ++y) {
                if (!A.get(r, y)) continue;
                const std::uint64_t* row = B.row(y);
                for (std::size_t w = 0; w < B.words; ++w) {
                  acc[w] |= row[w];
                  o.checked += static_cast<std::size_t>(std::popcount(row[w]));
                }
              }
              bool bad = false;
              for (std::size_t w = 0; w < B.words; ++w) bad = bad || (acc[w] & ~C.row(r)[w]);
              if (!bad) continue;
              for (std::size_t y = 0; y < A.cols && !o.found; ++y) {
                if (!A.get(r, y)) continue;
                for (std::size_t z = 0; z < B.cols; ++z)
                  if (B.get(y, z) && !C.get(r, z)) {
                    const Ground& gz = Z.ground();
                    const GroundMorphism comp = compose(m2[bb].g, m1[a].g);
                    const VbSpace sx{InteriorMap::validate(
                        FuzzyOperator::from_table(X.ground(), X.interiors[r]))};
                    const VbSpace sz{InteriorMap::validate(
                        FuzzyOperator::from_table(gz, Z.interiors[z]))};
                    const Verdict v = open ? is_open_morphism(comp, sx, sz)
                                           : is_continuous(comp, sx, sz);
                    o.found = Found{
                        json{{"g1", io::to_json(m1[a].g)},
                             {"g2", io::to_json(m2[bb].g)},
                             {"X", jspace(X.ground(), X.interiors[r])},
                             {"Y", jspace(Y.ground(), Y.interiors[y])},
                             {"Z", jspace(gz, Z.interiors[z])}},
                        json{{"v", v.witness ? io::to_json(gz, *v.witness) : json()}}};
                    break;
                  }
              }
              return o;
            }
          }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_composition(const json& inst, const json&, bool open) {
  const GroundMorphism g1 = io::morphism_from_json(inst.at("g1"));
  const GroundMorphism g2 = io::morphism_from_json(inst.at("g2"));
  const VbSpace x{io::interior_from_json(inst.at("X"))};
  const VbSpace y{io::interior_from_json(inst.at("Y"))};
  const VbSpace z{io::interior_from_json(inst.at("Z"))};
  auto check = [&](const GroundMorphism& g, const VbSpace& s, const VbSpace& t) {
    return open ? is_open_morphism(g, s, t) : is_continuous(g, s, t);
  };
  const bool first = bool(check(g1, x, y));
  const bool second = bool(check(g2, y, z));
  const bool composite = bool(check(compose(g2, g1), x, z));
  ReplayResult r;
  r.counterexample = first && second && !composite;
  const std::string word = open ? "open" : "continuous";
  r.detail = std::string("g1 ") + (first ? "" : "not ") + word + ", g2 " + (second ? "" : "not ") +
             word + ", composite " + (composite ? "" : "not ") + word;
  return r;
}

// preimage-open ---------------------------------------------------------------

RunOutcome run_preimage_open(const SearchBounds& b, const Deadline& d) {
  const Universe u(b, {true, false});
  const auto pairs = all_pairs(u.size());
  return run_items(
      pairs.size(),
      [&](std::size_t item) {
        ItemOutcome o;
        const auto [xi, yi] = pairs[item];
        const GroundInfo& X = u.ground(xi);
        const GroundInfo& Y = u.ground(yi);
        for (const auto& g : u.morphisms(xi, yi)) {
          const BitMatrix c = relation_matrix(X, Y, g.t.backward, false);
          for (std::size_t j = 0; j < Y.interiors.size(); ++j) {
            std::vector<Code> opens;
            for (Code v = 0; v < Y.pt.size(); ++v)
              if (Y.interiors[j][v] == v) opens.push_back(v);
            for (std::size_t i = 0; i < X.interiors.size(); ++i) {
              if (!c.get(i, j)) continue;
              for (Code v : opens) {
                ++o.checked;
                const Code bv = g.t.backward[v];
                if (X.interiors[i][bv] == bv) continue;
                o.found = Found{json{{"g", io::to_json(g.g)},
                                     {"src", jspace(X.ground(), X.interiors[i])},
                                     {"dst", jspace(Y.ground(), Y.interiors[j])}},
                                json{{"v", jset(Y.ground(), v)}}};
                return o;
              }
            }
          }
        }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_preimage_open(const json& inst, const json& w) {
  const GroundMorphism g = io::morphism_from_json(inst.at("g"));
  const VbSpace src{io::interior_from_json(inst.at("src"))};
  const VbSpace dst{io::interior_from_json(inst.at("dst"))};
  const FuzzySet v = io::fuzzy_set_from_json(w.at("v"), g.codomain());
  ReplayResult r;
  r.counterexample = !preimage_of_open_is_open(g, src, dst, v);
  r.detail = "preimage of " + g.codomain().render(v) + (r.counterexample ? " is not" : " is") +
             " open";
  return r;
}

// initiality / initiality-meet-lift -------------------------------------------

RunOutcome run_initiality(const SearchBounds& b, const Deadline& d, LiftRule rule) {
  const Universe u(b, {true, true});
  const std::size_t n = u.size();
  return run_items(
      n,
      [&](std::size_t xi) {
        ItemOutcome o;
        const GroundInfo& X = u.ground(xi);
        const std::size_t nx = X.interiors.size();

        struct Test {
          std::size_t z;
          const MorphInfo* h;
        };
        std::vector<Test> tests;
        std::size_t test_weight = 0;  // Σ over tests of |interiors on Z|
        for (std::size_t z = 0; z < n; ++z)
          for (const auto& h : u.morphisms(z, xi)) {
            tests.push_back({z, &h});
            test_weight += u.ground(z).interiors.size();
          }

        struct Member {
          std::size_t y;
          std::size_t f;
          std::size_t j;
        };
        struct Class {
          std::uint32_t ihat;
          std::uint32_t req;
          std::vector<std::uint32_t> q;
          std::size_t count = 0;
          Member rep;
        };
        std::vector<Class> classes;
        std::map<std::vector<std::uint32_t>, std::size_t> by_signature;
        o.notes["members_without_meet_interchange"] += 0;
        o.notes["initial_differs_from_least_continuous"] += 0;

        for (std::size_t y = 0; y < n; ++y) {
          const GroundInfo& Y = u.ground(y);
          const auto& fs = u.morphisms(xi, y);
          for (std::size_t f = 0; f < fs.size(); ++f) {
            const MorphismTables& ft = fs[f].t;
            bool meet_ok = true;
            for (Code v1 = 0; v1 < Y.pt.size() && meet_ok; ++v1)
              for (Code v2 = v1 + 1; v2 < Y.pt.size() && meet_ok; ++v2)
                meet_ok = ft.backward[Y.pt.meet(v1, v2)] ==
                          X.pt.meet(ft.backward[v1], ft.backward[v2]);
            for (std::size_t j = 0; j < Y.interiors.size(); ++j) {
              const Table ihat = initial_table(ft, Y.interiors[j]);
              const Table req = continuity_requirement(X.pt, ft, Y.interiors[j]);
              if (!meet_ok) ++o.notes["members_without_meet_interchange"];
              if (ihat != req) ++o.notes["initial_differs_from_least_continuous"];
              ++o.notes[open_tables(X.pt, ft, ihat, Y.interiors[j]) ? "members_open_from_initial"
                                                                     : "members_not_open_from_initial"];
              auto it = X.index.find(ihat);
              if (it == X.index.end()) {
                const auto w = check_interior_axioms(FuzzyOperator::from_table(X.ground(), ihat));
                json wit = jaxiom(X.ground(), *w);
                wit["check"] = "interior";
                const StructuredSource s = StructuredSource::make(
                    X.ground(), {{fs[f].g, VbSpace{InteriorMap::validate(FuzzyOperator::from_table(
                                                Y.ground(), Y.interiors[j]))}}});
                o.found = Found{json{{"rule", rule == LiftRule::join ? "join" : "meet"},
                                     {"source", io::to_json(s)}},
                                wit};
                return o;
              }
              std::vector<std::uint32_t> sig{it->second, X.idx(req)};
              for (const Test& t : tests) {
                const GroundInfo& Z = u.ground(t.z);
                const MorphismTables comp{compose_backward(t.h->t.backward, ft.backward), {}};
                sig.push_back(Z.idx(continuity_requirement(Z.pt, comp, Y.interiors[j])));
              }
              auto [pos, fresh] = by_signature.emplace(sig, classes.size());
              if (fresh) {
                Class c;
                c.ihat = sig[0];
                c.req = sig[1];
                c.q.assign(sig.begin() + 2, sig.end());
                c.rep = {y, f, j};
                classes.push_back(std::move(c));
              }
              ++classes[pos->second].count;
            }
          }
        }
        o.notes["member_classes"] += classes.size();

        // P(lift, test): index of the least test interior making h continuous into the lift.
        std::vector<std::vector<std::int64_t>> p_cache(nx);
        auto p_of = [&](std::uint32_t lift, std::size_t t) {
          auto& row = p_cache[lift];
          if (row.empty()) row.assign(tests.size(), -1);
          if (row[t] < 0) {
            const GroundInfo& Z = u.ground(tests[t].z);
            row[t] = Z.idx(continuity_requirement(Z.pt, tests[t].h->t, X.interiors[lift]));
          }
          return static_cast<std::uint32_t>(row[t]);
        };

        auto source_json = [&](const std::vector<std::size_t>& cls) {
          std::vector<SourceMember> ms;
          for (std::size_t c : cls) {
            const Member& m = classes[c].rep;
            const GroundInfo& Y = u.ground(m.y);
            ms.push_back({u.morphisms(xi, m.y)[m.f].g,
                          VbSpace{InteriorMap::validate(
                              FuzzyOperator::from_table(Y.ground(), Y.interiors[m.j]))}});
          }
          return io::to_json(StructuredSource::make(X.ground(), std::move(ms)));
        };

        auto check_source = [&](const std::vector<std::size_t>& cls, std::size_t multiplicity) {
          std::uint32_t lift = rule == LiftRule::join ? X.least_idx : X.discrete_idx;
          for (std::size_t k = 0; k < cls.size(); ++k) {
            const std::uint32_t ih = classes[cls[k]].ihat;
            lift = k == 0 ? ih
                          : (rule == LiftRule::join ? X.join_idx[lift * nx + ih]
                                                    : X.meet_idx[lift * nx + ih]);
          }
          const json rule_name = rule == LiftRule::join ? "join" : "meet";
          for (std::size_t k = 0; k < cls.size(); ++k)
            if (!X.pt.table_leq(X.interiors[classes[cls[k]].req], X.interiors[lift])) {
              o.found = Found{json{{"rule", rule_name}, {"source", source_json(cls)}},
                              json{{"check", "member-continuity"}, {"member", k}}};
              return;
            }
          for (std::size_t t = 0; t < tests.size(); ++t) {
            const GroundInfo& Z = u.ground(tests[t].z);
            const std::size_t nz = Z.interiors.size();
            std::uint32_t q = Z.least_idx;
            for (std::size_t c : cls) q = Z.join_idx[q * nz + classes[c].q[t]];
            const std::uint32_t p = p_of(lift, t);
            if (p == q) continue;
            const Table& witness_table =
                Z.pt.table_leq(Z.interiors[q], Z.interiors[p]) ? Z.interiors[q] : Z.interiors[p];
            o.found = Found{json{{"rule", rule_name}, {"source", source_json(cls)}},
                            json{{"check", "equivalence"},
                                 {"test_morphism", io::to_json(tests[t].h->g)},
                                 {"test_space", jspace(Z.ground(), witness_table)}}};
            return;
          }
          o.checked += multiplicity * test_weight;
        };

        if (rule == LiftRule::join) check_source({}, 1);
        for (std::size_t a = 0; a < classes.size() && !o.found; ++a)
          check_source({a}, classes[a].count);
        for (std::size_t a = 0; a < classes.size() && !o.found; ++a)
          for (std::size_t c = a; c < classes.size() && !o.found; ++c) {
            const std::size_t ma = classes[a].count;
            const std::size_t mult = a == c ? ma * (ma + 1) / 2 : ma * classes[c].count;
            check_source({a, c}, mult);
          }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_initiality(const json& inst, const json& w) {
  const LiftRule rule = inst.at("rule").get<std::string>() == "meet" ? LiftRule::meet
                                                                     : LiftRule::join;
  const StructuredSource s = io::source_from_json(inst.at("source"));
  const std::string check = w.at("check").get<std::string>();
  ReplayResult r;
  if (check == "interior") {
    try {
      initial_from_source(s, rule);
      r.detail = "lift satisfies I1-I3";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInterior) throw;
      r.counterexample = true;
      r.detail = e.what();
    }
    return r;
  }
  const VbSpace lift{initial_from_source(s, rule)};
  if (check == "member-continuity") {
    const std::size_t k = w.at("member").get<std::size_t>();
    if (k >= s.members().size()) throw Error(ErrorKind::MalformedBundle, "member out of range");
    const auto& m = s.members()[k];
    const Verdict v = is_continuous(m.morphism, lift, m.target);
    r.counterexample = !v;
    r.detail = "member " + std::to_string(k) + (v ? " is" : " is not") +
               " continuous from the lift" +
               (v.witness ? " (v=" + m.target.ground().render(*v.witness) + ")" : "");
    return r;
  }
  if (check != "equivalence") throw Error(ErrorKind::MalformedBundle, "unknown check " + check);
  const GroundMorphism h = io::morphism_from_json(w.at("test_morphism"));
  const VbSpace z{io::interior_from_json(w.at("test_space"))};
  const bool lhs = bool(is_continuous(h, z, lift));
  bool rhs = true;
  std::string sides;
  for (const auto& m : s.members()) {
    const bool c = bool(is_continuous(compose(m.morphism, h), z, m.target));
    rhs = rhs && c;
    sides += std::string(sides.empty() ? "" : ", ") + (c ? "yes" : "no");
  }
  r.counterexample = lhs != rhs;
  r.detail = std::string("test morphism ") + (lhs ? "is" : "is not") +
             " continuous into the lift; composites continuous: [" + sides + "]";
  return r;
}

// idempotency / full-productivity preservation ----------------------------------

RunOutcome run_preservation(const SearchBounds& b, const Deadline& d, bool full) {
  const Universe u(b, {true, false});
  const auto pairs = all_pairs(u.size());
  return run_items(
      pairs.size(),
      [&](std::size_t item) {
        ItemOutcome o;
        const auto [xi, yi] = pairs[item];
        const GroundInfo& X = u.ground(xi);
        const GroundInfo& Y = u.ground(yi);
        std::vector<std::size_t> targets;
        for (std::size_t j = 0; j < Y.interiors.size(); ++j)
          if (full ? !fully_productive_failure(Y.pt, Y.interiors[j])
                   : table_idempotent(Y.interiors[j]))
            targets.push_back(j);
        for (const auto& g : u.morphisms(xi, yi))
          for (std::size_t j : targets) {
            ++o.checked;
            const Table ihat = initial_table(g.t, Y.interiors[j]);
            json family = json::array();
            if (full) {
              auto f = fully_productive_failure(X.pt, ihat);
              if (!f) continue;
              for (Code c : *f) family.push_back(jset(X.ground(), c));
            } else {
              Code bad = 0;
              while (bad < ihat.size() && ihat[ihat[bad]] == ihat[bad]) ++bad;
              if (bad == ihat.size()) continue;
              family.push_back(jset(X.ground(), bad));
            }
            o.found = Found{json{{"g", io::to_json(g.g)},
                                 {"target", jspace(Y.ground(), Y.interiors[j])}},
                            json{{"family", family}}};
            return o;
          }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_preservation(const json& inst, const json&, bool full) {
  const GroundMorphism g = io::morphism_from_json(inst.at("g"));
  const VbSpace t{io::interior_from_json(inst.at("target"))};
  const Verdict v = full ? preserves_full_productivity_check(g, t) : preserves_idempotency_check(g, t);
  ReplayResult r;
  r.counterexample = !v;
  r.detail = std::string("initial interior ") + (v ? "keeps" : "loses") + " the property";
  return r;
}

// backward-meet-interchange ------------------------------------------------------

RunOutcome run_meet_interchange(const SearchBounds& b, const Deadline& d) {
  const Universe u(b, {false, false});
  const auto pairs = all_pairs(u.size());
  return run_items(
      pairs.size(),
      [&](std::size_t item) {
        ItemOutcome o;
        const auto [xi, yi] = pairs[item];
        const GroundInfo& X = u.ground(xi);
        const GroundInfo& Y = u.ground(yi);
        for (const auto& g : u.morphisms(xi, yi)) {
          ++o.checked;
          if (g.t.backward[Y.pt.top()] != X.pt.top()) {
            o.found = Found{json{{"g", io::to_json(g.g)}},
                            json{{"family", json::array()}}};
            return o;
          }
          for (Code v1 = 0; v1 < Y.pt.size(); ++v1)
            for (Code v2 = v1 + 1; v2 < Y.pt.size(); ++v2) {
              ++o.checked;
              if (g.t.backward[Y.pt.meet(v1, v2)] ==
                  X.pt.meet(g.t.backward[v1], g.t.backward[v2]))
                continue;
              o.found = Found{json{{"g", io::to_json(g.g)}},
                              json{{"family", json::array({jset(Y.ground(), v1),
                                                           jset(Y.ground(), v2)})}}};
              return o;
            }
        }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_meet_interchange(const json& inst, const json& w) {
  const GroundMorphism g = io::morphism_from_json(inst.at("g"));
  const Ground& x = g.domain();
  const Ground& y = g.codomain();
  FuzzySet meet_v = y.top();
  FuzzySet meet_b = x.top();
  for (const auto& v : w.at("family")) {
    const FuzzySet fv = io::fuzzy_set_from_json(v, y);
    meet_v = y.meet(meet_v, fv);
    meet_b = x.meet(meet_b, vb_backward(g, fv));
  }
  const FuzzySet lhs = vb_backward(g, meet_v);
  ReplayResult r;
  r.counterexample = lhs != meet_b;
  r.detail = "backward of the meet is " + x.render(lhs) + ", meet of backwards is " +
             x.render(meet_b);
  return r;
}

// adjunctions ------------------------------------------------------------------

struct AdjunctionCheck {
  std::string name;
  std::optional<std::pair<FuzzySet, FuzzySet>> witness;
  std::size_t pairs = 0;
};

/// The four Galois connections attached to a ground morphism, in a fixed order.
std::vector<AdjunctionCheck> check_adjunctions(const GroundMorphism& g) {
  const Ground& x = g.domain();
  const Ground& y = g.codomain();
  const Ground yl(y.point_names(), x.algebra_ptr());  // (Y, L)
  const Ground xm(x.point_names(), y.algebra_ptr());  // (X, M)
  const auto lx = x.all_fuzzy_sets();
  const auto my = y.all_fuzzy_sets();
  const auto ly = yl.all_fuzzy_sets();
  const auto mx = xm.all_fuzzy_sets();
  auto leq_of = [](const Ground& gr) {
    return [gr](const FuzzySet& a, const FuzzySet& b) { return gr.leq(a, b); };
  };
  std::vector<AdjunctionCheck> out;
  auto record = [&](std::string name, auto w, std::size_t pairs) {
    AdjunctionCheck c{std::move(name), std::nullopt, pairs};
    if (w) c.witness = std::make_pair(w->p, w->q);
    out.push_back(std::move(c));
  };
  const FiniteLattice& l = x.lattice();
  record("zadeh-forward -| zadeh-backward",
         verify_adjunction<FuzzySet, FuzzySet>(
             lx, ly, leq_of(x), leq_of(yl),
             [&](const FuzzySet& a) { return zadeh_forward(g.point_map(), l, a); },
             [&](const FuzzySet& b) { return zadeh_backward(g.point_map(), b); }),
         lx.size() * ly.size());
  record("star-phi -| phi-op",
         verify_adjunction<FuzzySet, FuzzySet>(
             lx, mx, leq_of(x), leq_of(xm),
             [&](const FuzzySet& a) { return lift_star_phi(g.basis_map(), a); },
             [&](const FuzzySet& b) { return lift_phi_op(g.basis_map(), b); }),
         lx.size() * mx.size());
  record("vb-forward -| vb-backward",
         verify_adjunction<FuzzySet, FuzzySet>(
             lx, my, leq_of(x), leq_of(y), [&](const FuzzySet& a) { return vb_forward(g, a); },
             [&](const FuzzySet& b) { return vb_backward(g, b); }),
         lx.size() * my.size());
  record("vb-backward -| right-adjoint",
         verify_adjunction<FuzzySet, FuzzySet>(
             my, lx, leq_of(y), leq_of(x), [&](const FuzzySet& b) { return vb_backward(g, b); },
             [&](const FuzzySet& a) { return vb_right_adjoint(g, a); }),
         my.size() * lx.size());
  return out;
}

/// Renders p and q of an adjunction witness over their own grounds.
json adjunction_witness_json(const GroundMorphism& g, const AdjunctionCheck& c) {
  const Ground& x = g.domain();
  const Ground& y = g.codomain();
  auto names = [](const FiniteLattice& l, const FuzzySet& u) {
    json out = json::array();
    for (Elem e : u.values) out.push_back(l.name(e));
    return out;
  };
  const FiniteLattice& l = x.lattice();
  const FiniteLattice& m = y.lattice();
  const auto& [p, q] = *c.witness;
  const bool backward_left = c.name == "vb-backward -| right-adjoint";
  const FiniteLattice& ql = c.name == "star-phi -| phi-op" || c.name == "vb-forward -| vb-backward"
                                ? m
                                : l;
  return json{{"adjunction", c.name},
              {"p", names(backward_left ? m : l, p)},
              {"q", names(ql, q)}};
}

RunOutcome run_adjunctions(const SearchBounds& b, const Deadline& d) {
  const Universe u(b, {false, false});
  const auto pairs = all_pairs(u.size());
  return run_items(
      pairs.size(),
      [&](std::size_t item) {
        ItemOutcome o;
        const auto [xi, yi] = pairs[item];
        for (const auto& g : u.morphisms(xi, yi))
          for (const auto& c : check_adjunctions(g.g)) {
            o.checked += c.pairs;
            if (!c.witness) continue;
            o.found = Found{json{{"g", io::to_json(g.g)}}, adjunction_witness_json(g.g, c)};
            return o;
          }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_adjunctions(const json& inst, const json& w) {
  const GroundMorphism g = io::morphism_from_json(inst.at("g"));
  const std::string name = w.at("adjunction").get<std::string>();
  for (const auto& c : check_adjunctions(g)) {
    if (c.name != name) continue;
    ReplayResult r;
    r.counterexample = c.witness.has_value();
    r.detail = name + (r.counterexample ? " fails" : " holds");
    return r;
  }
  throw Error(ErrorKind::MalformedBundle, "unknown adjunction '" + name + "'");
}

// homeomorphism-group -------------------------------------------------------------

RunOutcome run_homeomorphisms(const SearchBounds& b, const Deadline& d) {
  const Universe u(b, {true, false});
  return run_items(
      u.size(),
      [&](std::size_t xi) {
        ItemOutcome o;
        const GroundInfo& X = u.ground(xi);
        const auto& ms = u.morphisms(xi, xi);
        std::vector<std::size_t> bijective;
        std::vector<std::optional<std::size_t>> inv(ms.size());
        for (std::size_t k = 0; k < ms.size(); ++k) {
          auto gi = inverse(ms[k].g);
          if (!gi) continue;
          bijective.push_back(k);
          for (std::size_t j = 0; j < ms.size(); ++j)
            if (ms[j].g == *gi) inv[k] = j;
        }
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> product;
        for (std::size_t a : bijective)
          for (std::size_t c : bijective) {
            const GroundMorphism gc = compose(ms[a].g, ms[c].g);
            for (std::size_t j = 0; j < ms.size(); ++j)
              if (ms[j].g == gc) product[{a, c}] = j;
          }
        for (std::size_t i = 0; i < X.interiors.size(); ++i) {
          const Table& t = X.interiors[i];
          auto homeo = [&](std::size_t k) {
            return continuous_tables(X.pt, ms[k].t, t, t) && open_tables(X.pt, ms[k].t, t, t);
          };
          std::vector<std::size_t> group;
          for (std::size_t k : bijective)
            if (homeo(k)) group.push_back(k);
          auto fail = [&](const char* check, std::size_t a, std::optional<std::size_t> c) {
            json inst{{"space", jspace(X.ground(), t)}, {"a", io::to_json(ms[a].g)}};
            if (c) inst["b"] = io::to_json(ms[*c].g);
            o.found = Found{inst, json{{"check", check}}};
          };
          for (std::size_t a : group) {
            ++o.checked;
            if (!inv[a] || !homeo(*inv[a])) {
              fail("inverse", a, std::nullopt);
              return o;
            }
          }
          for (std::size_t a : group)
            for (std::size_t c : group) {
              ++o.checked;
              auto it = product.find({a, c});
              if (it == product.end() || !homeo(it->second)) {
                fail("compose", a, c);
                return o;
              }
            }
        }
        return o;
      },
      b.workers, d);
}

ReplayResult replay_homeomorphisms(const json& inst, const json& w) {
  const VbSpace s{io::interior_from_json(inst.at("space"))};
  const GroundMorphism a = io::morphism_from_json(inst.at("a"));
  auto homeo = [&](const GroundMorphism& g) {
    return bool(is_continuous(g, s, s)) && bool(is_open_morphism(g, s, s));
  };
  ReplayResult r;
  const std::string check = w.at("check").get<std::string>();
  if (check == "inverse") {
    const auto ai = inverse(a);
    r.counterexample = homeo(a) && (!ai || !homeo(*ai));
    r.detail = ai ? "inverse exists" : "inverse is not a valid morphism";
    return r;
  }
  const GroundMorphism bm = io::morphism_from_json(inst.at("b"));
  r.counterexample = homeo(a) && homeo(bm) && !homeo(compose(a, bm));
  r.detail = std::string("composite ") + (homeo(compose(a, bm)) ? "is" : "is not") +
             " continuous and open";
  return r;
}

// registry ------------------------------------------------------------------------

const std::vector<Property>& registry() {
  static const std::vector<Property> props = [] {
    std::vector<Property> p;
    p.push_back({{"trivial-literal",
                  "the map sending every nonzero fuzzy set to 1_X satisfies I1-I3"},
                 run_trivial_literal, replay_trivial_literal});
    p.push_back({{"interior-join-closure",
                  "pointwise joins of interior maps are interior; discrete is the top and "
                  "least the bottom"},
                 [](const SearchBounds& b, const Deadline& d) {
                   return run_operator_closure(b, d, true);
                 },
                 [](const json& i, const json& w) { return replay_operator_closure(i, w, true); }});
    p.push_back({{"interior-meet-closure",
                  "pointwise meets of interior maps are interior; discrete is the top and "
                  "least the bottom"},
                 [](const SearchBounds& b, const Deadline& d) {
                   return run_operator_closure(b, d, false);
                 },
                 [](const json& i, const json& w) { return replay_operator_closure(i, w, false); }});
    p.push_back({{"continuity-composition", "composites of continuous morphisms are continuous"},
                 [](const SearchBounds& b, const Deadline& d) { return run_composition(b, d, false); },
                 [](const json& i, const json& w) { return replay_composition(i, w, false); }});
    p.push_back({{"openness-composition", "composites of open morphisms are open"},
                 [](const SearchBounds& b, const Deadline& d) { return run_composition(b, d, true); },
                 [](const json& i, const json& w) { return replay_composition(i, w, true); }});
    p.push_back({{"preimage-open",
                  "backward images of open fuzzy sets under continuous morphisms are open"},
                 run_preimage_open, replay_preimage_open});
    p.push_back({{"initiality",
                  "the join of the members' initial interiors is the initial lift of every "
                  "structured source with at most two members"},
                 [](const SearchBounds& b, const Deadline& d) {
                   return run_initiality(b, d, LiftRule::join);
                 },
                 replay_initiality});
    p.push_back({{"initiality-meet-lift",
                  "the meet of the members' initial interiors is the initial lift of every "
                  "nonempty structured source with at most two members"},
                 [](const SearchBounds& b, const Deadline& d) {
                   return run_initiality(b, d, LiftRule::meet);
                 },
                 replay_initiality});
    p.push_back({{"idempotency-preservation",
                  "initial interiors of idempotent targets are idempotent"},
                 [](const SearchBounds& b, const Deadline& d) { return run_preservation(b, d, false); },
                 [](const json& i, const json& w) { return replay_preservation(i, w, false); }});
    p.push_back({{"full-productivity-preservation",
                  "initial interiors of fully productive targets are fully productive"},
                 [](const SearchBounds& b, const Deadline& d) { return run_preservation(b, d, true); },
                 [](const json& i, const json& w) { return replay_preservation(i, w, true); }});
    p.push_back({{"backward-meet-interchange",
                  "backward images preserve meets of fuzzy sets"},
                 run_meet_interchange, replay_meet_interchange});
    p.push_back({{"adjunctions",
                  "the Zadeh, basis and variable-basis operator pairs are Galois connections, "
                  "and the backward operator has its stated right adjoint"},
                 run_adjunctions, replay_adjunctions});
    p.push_back({{"homeomorphism-group",
                  "bijective morphisms of a space that are continuous and open form a group"},
                 run_homeomorphisms, replay_homeomorphisms});
    return p;
  }();
  return props;
}

const Property& find_property(const std::string& name) {
  for (const auto& p : registry())
    if (p.info.name == name) return p;
  throw Error(ErrorKind::UnknownProperty, "unknown property '" + name + "'", {name});
}

}  // namespace

const std::vector<PropertyInfo>& registered_properties() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> out;
    for (const auto& p : registry()) out.push_back(p.info);
    return out;
  }();
  return infos;
}

SearchResult search(const std::string& property, const SearchBounds& bounds) {
  const Property& p = find_property(property);
  check_bounds(bounds);
  const Deadline deadline(bounds.budget);
  RunOutcome run = p.run(bounds, deadline);
  SearchResult r;
  r.property = property;
  r.bounds = bounds;
  r.instances_checked = run.checked;
  for (const auto& [k, v] : run.notes) r.notes[k] = v;
  if (run.found) {
    r.counterexample = true;
    r.instance = std::move(run.found->instance);
    r.witness = std::move(run.found->witness);
  }
  return r;
}

json bounds_to_json(const SearchBounds& b) {
  return json{{"max_x", b.max_points},
              {"max_l", b.max_lattice},
              {"max_tables", b.max_tables < 9.0e15 && b.max_tables == static_cast<double>(
                                                                static_cast<std::uint64_t>(b.max_tables))
                                ? json(static_cast<std::uint64_t>(b.max_tables))
                                : json(b.max_tables)},
              {"budget", format_budget(b.budget)},
              {"family", b.family}};
}

json to_bundle(const SearchResult& r) {
  json out{{"property", r.property},
           {"status", r.counterexample ? "fail" : "ok"},
           {"bounds", bounds_to_json(r.bounds)},
           {"instances_checked", r.instances_checked}};
  if (r.counterexample) {
    out["instance"] = r.instance;
    out["witness"] = r.witness;
  }
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

ReplayResult replay(const json& bundle) {
  if (!bundle.is_object() || !bundle.contains("property") || !bundle["property"].is_string())
    throw Error(ErrorKind::MalformedBundle, "bundle lacks a property name");
  if (!bundle.contains("witness") || !bundle.contains("instance"))
    throw Error(ErrorKind::MalformedBundle, "bundle carries no witness (summary bundles cannot be replayed)");
  const std::string name = bundle["property"].get<std::string>();
  const Property* p = nullptr;
  for (const auto& q : registry())
    if (q.info.name == name) p = &q;
  if (!p) throw Error(ErrorKind::MalformedBundle, "unknown property '" + name + "'");
  try {
    ReplayResult r = p->replay(bundle["instance"], bundle["witness"]);
    r.property = name;
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedBundle, std::string("bundle does not parse: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError)
      throw Error(ErrorKind::MalformedBundle, std::string("bundle does not parse: ") + e.what());
    throw;
  }
}

}  // namespace fuzzint
