#include "goi/nilpotency.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "goi/transforms.hpp"

namespace goi {

std::uint64_t capacity_from_environment() {
  if (const char* env = std::getenv("GOI_NILPOTENCY_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultCapacity;
}

ProductDynamics::ProductDynamics(const Observation& o, BinaryWord w)
    : observation(&o), word(std::move(w)), graph(build_graph(word)) {}

std::uint64_t ProductDynamics::dimension() const {
  const int p = observation->pointers();
  std::uint64_t d = 6;
  for (int i = 0; i <= p; ++i) d *= word.period();
  d *= factorial(p + 1);
  d *= observation->state_dimension();
  return d;
}

std::vector<Weighted> step_product(const ProductDynamics& dyn, const BasisVector& v) {
  auto w = apply_integer(dyn.graph, v);
  if (!w) return {};
  return apply_observation(*dyn.observation, *w);
}

namespace {

// Mixed-radix index: pi + 6 (positions + P (sigma rank + F state)).
struct Compiled {
  int p = 1;
  std::uint64_t n = 1, P = 1, F = 1, S = 1, D = 0;
  std::vector<std::uint64_t> pow_n;
  std::vector<std::int64_t> partner;
  std::vector<std::uint8_t> inv0;
  std::vector<std::uint32_t> compose;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> obs;

  explicit Compiled(const ProductDynamics& dyn) {
    const Observation& o = *dyn.observation;
    p = o.pointers();
    n = dyn.word.period();
    pow_n.assign(p + 1, 1);
    for (int i = 1; i <= p; ++i) pow_n[i] = pow_n[i - 1] * n;
    P = pow_n[p] * n;
    F = factorial(p + 1);
    S = o.state_dimension();
    D = dyn.dimension();

    partner.assign(6 * n, -1);
    for (const auto& [a, b] : dyn.graph.partner) {
      partner[static_cast<std::uint64_t>(a.flavor) * n + a.slice] = static_cast<std::int64_t>(static_cast<std::uint64_t>(b.flavor) * n + b.slice);
    }
    std::vector<Permutation> perms;
    for (std::uint64_t r = 0; r < F; ++r) perms.push_back(Permutation::unrank(p + 1, r));
    inv0.resize(F);
    compose.resize(F * F);
    for (std::uint64_t r = 0; r < F; ++r) {
      inv0[r] = static_cast<std::uint8_t>(perms[r].inverse()(0));
      for (std::uint64_t s = 0; s < F; ++s) compose[r * F + s] = static_cast<std::uint32_t>(perms[r].compose(perms[s]).rank());
    }
    obs.resize(6 * S);
    for (const auto& [ts, e] : o.entries()) {
      for (const auto& [g, a] : e.terms()) obs[ts.second].push_back({ts.first, static_cast<std::uint32_t>(g.rank())});
    }
  }

  void successors(std::uint64_t idx, std::vector<std::uint64_t>& out) const {
    const std::uint64_t pi = idx % 6;
    std::uint64_t r = idx / 6;
    const std::uint64_t pos = r % P;
    r /= P;
    const std::uint64_t sr = r % F, st = r / F;
    const std::uint64_t j = inv0[sr];
    const std::uint64_t aj = (pos / pow_n[j]) % n;
    const std::int64_t pid = partner[pi * n + aj];
    if (pid < 0) return;
    const std::uint64_t pi2 = static_cast<std::uint64_t>(pid) / n, a2 = static_cast<std::uint64_t>(pid) % n;
    const std::uint64_t pos2 = pos - aj * pow_n[j] + a2 * pow_n[j];
    for (auto [tkey, nu] : obs[pi2 + 6 * st]) {
      const std::uint64_t sr2 = compose[nu * F + sr];
      out.push_back(tkey % 6 + 6 * (pos2 + P * (sr2 + F * (tkey / 6))));
    }
  }

  BasisVector decode(const Observation& o, std::uint64_t idx) const {
    BasisVector v;
    v.pi = static_cast<Flavor>(idx % 6);
    std::uint64_t r = idx / 6;
    std::uint64_t pos = r % P;
    r /= P;
    for (int i = 0; i <= p; ++i) {
      v.positions.push_back(static_cast<std::uint32_t>(pos % n));
      pos /= n;
    }
    v.sigma = Permutation::unrank(p + 1, r % F);
    v.state = o.node(6 * (r / F)).state;
    return v;
  }
};

}  // namespace

NilpotencyResult is_nilpotent(const ProductDynamics& dyn, std::uint64_t cap) {
  const std::uint64_t D = dyn.dimension();
  if (D > cap) throw CapacityError("basis of " + std::to_string(D) + " vectors exceeds the cap of " + std::to_string(cap));
  Compiled c(dyn);
  NilpotencyResult result;
  result.basis_size = D;

  std::vector<std::uint8_t> color(D, 0);
  std::vector<std::uint32_t> depth(D, 0);
  struct Frame {
    std::uint64_t v;
    std::size_t begin, cur;
    std::uint32_t best;
  };
  std::vector<Frame> stack;
  std::vector<std::uint64_t> arena;
  std::uint32_t longest = 0;

  auto push = [&](std::uint64_t v) {
    color[v] = 1;
    std::size_t begin = arena.size();
    c.successors(v, arena);
    result.edges += arena.size() - begin;
    stack.push_back({v, begin, begin, 0});
  };

  for (std::uint64_t start = 0; start < D; ++start) {
    if (color[start]) continue;
    push(start);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.cur < arena.size()) {
        const std::uint64_t w = arena[f.cur++];
        if (color[w] == 0) {
          push(w);
        } else if (color[w] == 1) {
          auto at = std::find_if(stack.begin(), stack.end(), [w](const Frame& fr) { return fr.v == w; });
          for (; at != stack.end(); ++at) result.cycle.push_back(c.decode(*dyn.observation, at->v));
          result.nilpotent = false;
          return result;
        } else {
          f.best = std::max(f.best, depth[w] + 1);
        }
        continue;
      }
      const std::uint64_t v = f.v;
      const std::uint32_t best = f.best;
      arena.resize(f.begin);
      stack.pop_back();
      color[v] = 2;
      depth[v] = best;
      longest = std::max(longest, best);
      if (!stack.empty()) stack.back().best = std::max(stack.back().best, best + 1);
    }
  }
  result.degree = static_cast<std::uint64_t>(longest) + 1;
  return result;
}

MatrixNilpotency is_nilpotent_matrix(const ProductDynamics& dyn, std::uint64_t cap, std::uint64_t power_check_limit) {
  const Observation& o = *dyn.observation;
  const int p = o.pointers();
  const std::size_t k = dyn.word.length();
  const std::uint64_t n = k + 1;

  // Basis size counted directly from the factors of the enumeration below.
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> perm(p + 1);
  for (int i = 0; i <= p; ++i) perm[i] = static_cast<std::uint8_t>(i);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<std::uint8_t>, std::uint64_t> perm_id;
  for (std::uint64_t i = 0; i < perms.size(); ++i) perm_id[perms[i]] = i;

  std::uint64_t positions = 1;
  for (int i = 0; i <= p; ++i) positions *= n;
  const std::uint64_t states = o.state_dimension();
  const std::uint64_t D = states * perms.size() * positions * 6;
  if (D > cap) throw CapacityError("basis of " + std::to_string(D) + " vectors exceeds the cap of " + std::to_string(cap));

  // The integer, read off the assembled block matrix (layout coordinates).
  std::vector<std::int64_t> partner(6 * n, -1);
  if (k == 0) {
    partner[layout_index(Flavor::S) * n] = static_cast<std::int64_t>(layout_index(Flavor::E) * n);
    partner[layout_index(Flavor::E) * n] = static_cast<std::int64_t>(layout_index(Flavor::S) * n);
  } else {
    for (auto [r, col] : build_matrix(dyn.word).assembled()) partner[r] = static_cast<std::int64_t>(col);
  }

  // Φ indexed by source node, coefficients interned.
  std::vector<Rational> coefficients;
  std::map<Rational, std::uint32_t> coefficient_id;
  auto intern = [&](const Rational& a) {
    auto [it, fresh] = coefficient_id.try_emplace(a, static_cast<std::uint32_t>(coefficients.size()));
    if (fresh) coefficients.push_back(a);
    return it->second;
  };
  struct Term {
    NodeKey target;
    std::vector<std::uint8_t> nu;
    std::uint32_t coef;
  };
  std::map<NodeKey, std::vector<Term>> phi;
  for (const auto& [ts, e] : o.entries()) {
    for (const auto& [g, a] : e.terms()) phi[ts.second].push_back({ts.first, g.images(), intern(a)});
  }

  // id = (((state * |S_{p+1}| + perm) * positions + position code) * 6 + flavor)
  auto id_of = [&](std::uint64_t state, std::uint64_t pid, const std::vector<std::uint64_t>& a, Flavor f) {
    std::uint64_t code = 0;
    for (int i = 0; i <= p; ++i) code = code * n + a[i];
    return ((state * perms.size() + pid) * positions + code) * 6 + static_cast<std::uint64_t>(f);
  };

  std::vector<std::uint64_t> offsets;
  offsets.reserve(D + 1);
  offsets.push_back(0);
  std::vector<std::uint64_t> targets;
  std::vector<std::uint32_t> coefs;
  std::vector<std::uint64_t> a(p + 1, 0);

  for (std::uint64_t state = 0; state < states; ++state) {
    const StateBasisElement se = o.node(6 * state).state;
    for (std::uint64_t pid = 0; pid < perms.size(); ++pid) {
      const auto& sigma = perms[pid];
      std::size_t j = 0;
      while (sigma[j] != 0) ++j;
      for (std::uint64_t code = 0; code < positions; ++code) {
        std::uint64_t rest = code;
        for (int i = p; i >= 0; --i) {
          a[i] = rest % n;
          rest /= n;
        }
        for (std::size_t li = 0; li < 6; ++li) {
          const Flavor f = static_cast<Flavor>(li);
          const std::int64_t col = partner[layout_index(f) * n + a[j]];
          if (col >= 0) {
            const Flavor f2 = kLayoutOrder[static_cast<std::uint64_t>(col) / n];
            std::vector<std::uint64_t> a2 = a;
            a2[j] = static_cast<std::uint64_t>(col) % n;
            auto it = phi.find(o.key({f2, se}));
            if (it != phi.end()) {
              for (const Term& t : it->second) {
                std::vector<std::uint8_t> composed(p + 1);
                for (int x = 0; x <= p; ++x) composed[x] = t.nu[sigma[x]];
                const ObsNode tn = o.node(t.target);
                targets.push_back(id_of(t.target / 6, perm_id.at(composed), a2, tn.flavor));
                coefs.push_back(t.coef);
              }
            }
          }
          offsets.push_back(targets.size());
        }
      }
    }
  }

  MatrixNilpotency result;
  result.basis_size = D;
  result.nonzeros = targets.size();

  std::vector<std::uint32_t> indegree(D, 0);
  for (auto t : targets) ++indegree[t];
  std::deque<std::uint64_t> ready;
  for (std::uint64_t v = 0; v < D; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<std::uint32_t> dist(D, 0);
  std::uint64_t removed = 0;
  std::uint32_t longest = 0;
  while (!ready.empty()) {
    const std::uint64_t v = ready.front();
    ready.pop_front();
    ++removed;
    longest = std::max(longest, dist[v]);
    for (std::uint64_t e = offsets[v]; e < offsets[v + 1]; ++e) {
      const std::uint64_t t = targets[e];
      dist[t] = std::max(dist[t], dist[v] + 1);
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  result.nilpotent = removed == D;
  if (!result.nilpotent) return result;
  result.degree = static_cast<std::uint64_t>(longest) + 1;

  if (D <= power_check_limit) {
    // With nonnegative entries, M^m = 0 iff M^m applied to the all-ones vector is 0.
    std::vector<Rational> x(D, Rational(1));
    std::uint64_t power = 0;
    auto nonzero = [](const std::vector<Rational>& y) {
      return std::any_of(y.begin(), y.end(), [](const Rational& r) { return r != 0; });
    };
    while (nonzero(x) && power <= result.degree) {
      std::vector<Rational> y(D, Rational(0));
      for (std::uint64_t v = 0; v < D; ++v) {
        if (x[v] == 0) continue;
        for (std::uint64_t e = offsets[v]; e < offsets[v + 1]; ++e) y[targets[e]] += coefficients[coefs[e]] * x[v];
      }
      x = std::move(y);
      ++power;
    }
    result.power_checked = !nonzero(x) && power == result.degree;
  }
  return result;
}

CrossvalReport crossval(const Machine& m, const PseudoConfiguration& c, const BinaryWord& word, const CrossvalOptions& options) {
  CrossvalReport r;
  r.verdict = run(m, c, word).verdict;
  Transformed normalized = normalize_for_encoding(m);
  r.acyclic_everywhere = halts_everywhere(normalized.machine, word);
  Observation obs = encode_machine(normalized.machine, normalized.map(c));
  ProductDynamics dyn(obs, word);
  NilpotencyResult tree = is_nilpotent(dyn, options.cap);
  r.nilpotent = tree.nilpotent;
  r.degree = tree.degree;
  r.dimension = dyn.dimension();
  r.degree_within_bound = !tree.nilpotent || tree.degree <= r.dimension;
  r.consistent = ((r.verdict == Verdict::Accept) == r.nilpotent) && r.degree_within_bound;
  if (options.with_matrix) {
    MatrixNilpotency mx = is_nilpotent_matrix(dyn, options.cap);
    r.matrix_nilpotent = mx.nilpotent;
    if (mx.nilpotent) r.matrix_degree = mx.degree;
    r.consistent = r.consistent && mx.nilpotent == tree.nilpotent && (!mx.nilpotent || mx.degree == tree.degree);
  }
  return r;
}

}  // namespace goi
