#include "goi/batteries.hpp"

#include <chrono>
#include <memory>
#include <random>
#include <sstream>

#include "goi/catalog.hpp"
#include "goi/integer_rep.hpp"
#include "goi/operators.hpp"
#include "goi/transforms.hpp"

namespace goi {

namespace {

struct Instance {
  std::string label;
  std::shared_ptr<const Observation> obs;
  BinaryWord word;
};

std::vector<PseudoConfiguration> starts_for(const CatalogEntry& e, const Machine& m) {
  if (e.every_pseudo || !m.initial) return all_pseudo_configurations(m);
  return {*m.initial};
}

// Every (curated machine, pseudo-configuration, word) triple of the equivalence battery.
std::vector<Instance> encoded_catalog_instances() {
  std::vector<Instance> out;
  const auto words = words_up_to(3);
  for (const auto& e : acyclic_catalog()) {
    Machine m = load(e);
    Transformed t = normalize_for_encoding(m);
    for (const auto& c : starts_for(e, m)) {
      auto obs = std::make_shared<const Observation>(encode_machine(t.machine, t.map(c)));
      for (const auto& w : words) out.push_back({e.name + " " + describe(m, c) + " ⋆" + w.str(), obs, w});
    }
  }
  return out;
}

std::vector<Instance> random_instances(std::uint64_t seed) {
  std::vector<Instance> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 50; ++i) {
    auto obs = std::make_shared<const Observation>(random_observation(rng()));
    std::size_t k = rng() % 3;
    std::vector<std::uint8_t> bits(k);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() % 2);
    out.push_back({"random#" + std::to_string(i), obs, BinaryWord(bits)});
  }
  return out;
}

Rational random_positive(std::mt19937_64& rng) {
  return Rational(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 7));
}

std::string first_failures(const std::vector<std::string>& failures, std::size_t limit = 3) {
  std::string s;
  for (std::size_t i = 0; i < failures.size() && i < limit; ++i) s += "; " + failures[i];
  return s;
}

IntegerGraph expected_graph(std::size_t k, const std::vector<std::pair<GraphNode, GraphNode>>& edges) {
  IntegerGraph g;
  g.k = k;
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace

Observation random_observation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n_controls = 1 + rng() % 3;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n_controls; ++i) names.push_back("c" + std::to_string(i));
  Observation o(1, ControlSet(names, 1));
  auto node = [&] {
    return ObsNode{static_cast<Flavor>(rng() % 6),
                   StateBasisElement{{static_cast<Flavor>(rng() % 6)}, static_cast<std::uint32_t>(rng() % n_controls)}};
  };
  const Permutation id = Permutation::identity(2);
  const Permutation swap = Permutation::transposition(2, 0, 1);
  auto add_random = [&](const ObsNode& source) {
    ObsNode target = node();
    if (rng() % 3 == 0) o.add(source, target, id, random_positive(rng));
    if (rng() % 3 != 1) o.add(source, target, swap, random_positive(rng));
    else o.add(source, target, id, random_positive(rng));
  };
  o.begin_summand("random");
  if (rng() % 2 == 0) {
    // Sparse: a handful of entries, almost always nilpotent.
    const std::size_t entries = 4 + rng() % 24;
    for (std::size_t i = 0; i < entries; ++i) add_random(node());
  } else {
    // Dense: every source branches to a few targets, so cycles are common.
    const std::size_t fan_out = 1 + rng() % 4;
    for (std::uint32_t c = 0; c < n_controls; ++c)
      for (int f = 0; f < 6; ++f)
        for (int slot = 0; slot < 6; ++slot)
          for (std::size_t i = 0; i < fan_out; ++i)
            add_random(ObsNode{static_cast<Flavor>(f), StateBasisElement{{static_cast<Flavor>(slot)}, c}});
  }
  return o;
}

BatteryResult representation_battery(const BatteryOptions&) {
  BatteryResult r{1, "representation", false, {}, 0};
  std::size_t count = 0;
  std::vector<std::string> failures;
  for (std::size_t k = 1; k <= 8; ++k) {
    for (const auto& w : words_of_length(k)) {
      ++count;
      IntegerMatrix m = build_matrix(w);
      SparseBlock a = m.assembled();
      if (!check_representation(m)) failures.push_back("⋆" + w.str() + " equations");
      if (!is_symmetric(a)) failures.push_back("⋆" + w.str() + " not symmetric");
      if (!is_matching(a)) failures.push_back("⋆" + w.str() + " not a matching");
    }
  }
  r.pass = failures.empty() && count == 510;
  r.detail = std::to_string(count) + " words, " + std::to_string(failures.size()) + " failures" + first_failures(failures);
  return r;
}

BatteryResult figure_battery(const BatteryOptions&) {
  BatteryResult r{2, "figure-graphs", false, {}, 0};
  using F = Flavor;
  auto n = [](F f, std::size_t s) { return GraphNode{f, s}; };
  struct Case {
    std::string word;
    IntegerGraph expected;
  };
  const std::vector<Case> cases = {
      {"", expected_graph(0, {{n(F::S, 0), n(F::E, 0)}})},
      {"0", expected_graph(1, {{n(F::O0, 1), n(F::E, 0)}, {n(F::S, 0), n(F::I0, 1)}})},
      {"110", expected_graph(3, {{n(F::O0, 1), n(F::E, 0)},
                                 {n(F::I0, 1), n(F::O1, 2)},
                                 {n(F::I1, 2), n(F::O1, 3)},
                                 {n(F::S, 0), n(F::I1, 3)}})},
      {"11010", expected_graph(5, {{n(F::O0, 1), n(F::E, 0)},
                                   {n(F::I0, 1), n(F::O1, 2)},
                                   {n(F::I1, 2), n(F::O0, 3)},
                                   {n(F::O1, 4), n(F::I0, 3)},
                                   {n(F::I1, 4), n(F::O1, 5)},
                                   {n(F::I1, 5), n(F::S, 0)}})},
  };
  std::vector<std::string> failures;
  for (const auto& c : cases) {
    IntegerGraph g = build_graph(parse_word(c.word));
    if (g.edges != c.expected.edges) failures.push_back("⋆" + c.word);
  }
  r.pass = failures.empty();
  r.detail = std::to_string(cases.size()) + " figures, " + std::to_string(failures.size()) + " mismatches" +
             first_failures(failures);
  return r;
}

BatteryResult stconn_battery(const BatteryOptions& options) {
  BatteryResult r{3, "stconn", false, {}, 0};
  std::vector<DirectedGraph> graphs;
  for (std::size_t nodes : {2u, 3u})
    for (std::uint64_t code = 0; code < (1ull << (nodes * nodes)); ++code) graphs.push_back(graph_from_code(nodes, code));
  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < 240; ++i) {
    std::size_t nodes = 4 + static_cast<std::size_t>(i % 3);
    double prob = 0.15 + 0.1 * static_cast<double>(i % 4);
    graphs.push_back(random_graph(nodes, prob, rng));
  }
  std::size_t wrong = 0, diverge = 0;
  std::vector<std::string> failures;
  for (const auto& g : graphs) {
    RunResult res = decide_stconn(g, options.stconn);
    bool path = reach_oracle(g);
    if (res.verdict == Verdict::Diverge) {
      ++diverge;
      failures.push_back("n=" + std::to_string(g.n) + " ⋆" + encode_graph(g.adjacency).str() + " diverges");
    } else if ((res.verdict == Verdict::Accept) == path) {
      ++wrong;
      failures.push_back("n=" + std::to_string(g.n) + " ⋆" + encode_graph(g.adjacency).str() + " wrong");
    }
  }
  r.pass = wrong == 0 && diverge == 0;
  r.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(wrong) + " wrong, " +
             std::to_string(diverge) + " divergent" + first_failures(failures);
  return r;
}

BatteryResult acyclicity_battery(const BatteryOptions&) {
  BatteryResult r{4, "acyclicity", false, {}, 0};
  const auto words = words_up_to(3);
  std::size_t pairs = 0, diverging = 0, machines = 0;
  std::vector<std::string> failures;
  for (const auto& e : looping_catalog()) {
    Machine m = load(e);
    if (m.pointers() > 2) failures.push_back(e.name + " has too many pointers");
    Transformed t = make_acyclic(m);
    std::size_t own_diverging = 0;
    for (const auto& c : all_pseudo_configurations(m)) {
      for (const auto& w : words) {
        ++pairs;
        Verdict before = run(m, c, w).verdict;
        Verdict after = run(t.machine, t.map(c), w).verdict;
        if (before == Verdict::Diverge) ++own_diverging;
        Verdict want = before == Verdict::Diverge ? Verdict::Reject : before;
        if (after != want)
          failures.push_back(e.name + " " + describe(m, c) + " ⋆" + w.str() + ": " + to_string(before) + " became " +
                             to_string(after));
      }
    }
    if (own_diverging == 0) failures.push_back(e.name + " never loops");
    diverging += own_diverging;
    ++machines;
  }
  r.pass = failures.empty() && machines >= 5;
  r.detail = std::to_string(machines) + " machines, " + std::to_string(pairs) + " pairs (" + std::to_string(diverging) +
             " divergent), " + std::to_string(failures.size()) + " failures" + first_failures(failures);
  return r;
}

BatteryResult equivalence_battery(const BatteryOptions& options) {
  BatteryResult r{5, "simulator-operator", false, {}, 0};
  const auto words = words_up_to(3);
  std::size_t cases = 0, nilpotent = 0, machines = 0;
  std::uint64_t max_degree = 0;
  std::vector<std::string> failures;
  CrossvalOptions cv;
  cv.cap = options.cap;
  for (const auto& e : acyclic_catalog()) {
    Machine m = load(e);
    ++machines;
    if (m.pointers() > 2 || m.state_count() > 4) failures.push_back(e.name + " is outside p <= 2, |Q| <= 4");
    for (const auto& t : m.transitions())
      if (t.outcome == Outcome::Step && t.moving_count() != 1) failures.push_back(e.name + " is not one-move");
    for (const auto& c : starts_for(e, m)) {
      for (const auto& w : words) {
        ++cases;
        CrossvalReport rep = crossval(m, c, w, cv);
        std::string where = e.name + " " + describe(m, c) + " ⋆" + w.str();
        if (!rep.acyclic_everywhere) failures.push_back(where + ": normalized machine loops");
        if (!rep.consistent)
          failures.push_back(where + ": " + to_string(rep.verdict) + " vs " + (rep.nilpotent ? "nilpotent" : "not nilpotent"));
        if (rep.nilpotent) {
          ++nilpotent;
          max_degree = std::max(max_degree, rep.degree);
        }
      }
    }
  }
  r.pass = failures.empty() && machines >= 10;
  r.detail = std::to_string(machines) + " machines, " + std::to_string(cases) + " cases (" + std::to_string(nilpotent) +
             " nilpotent, max degree " + std::to_string(max_degree) + "), " + std::to_string(failures.size()) +
             " failures" + first_failures(failures);
  return r;
}

BatteryResult oracle_battery(const BatteryOptions& options) {
  BatteryResult r{6, "oracle-equivalence", false, {}, 0};
  auto instances = encoded_catalog_instances();
  auto randoms = random_instances(options.seed);
  std::size_t random_nilpotent = 0;
  std::vector<std::string> failures;
  for (const auto* group : {&instances, &randoms}) {
    for (const auto& inst : *group) {
      ProductDynamics dyn(*inst.obs, inst.word);
      NilpotencyResult tree = is_nilpotent(dyn, options.cap);
      MatrixNilpotency mx = is_nilpotent_matrix(dyn, options.cap);
      bool agree = tree.nilpotent == mx.nilpotent && (!tree.nilpotent || tree.degree == mx.degree);
      if (!agree) failures.push_back(inst.label);
      if (group == &randoms && tree.nilpotent) ++random_nilpotent;
    }
  }
  r.pass = failures.empty();
  r.detail = std::to_string(instances.size()) + " encoded + " + std::to_string(randoms.size()) + " random (" +
             std::to_string(random_nilpotent) + " nilpotent), " + std::to_string(failures.size()) + " disagreements" +
             first_failures(failures);
  return r;
}

BatteryResult p_plus_battery(const BatteryOptions&) {
  BatteryResult r{7, "p-plus", false, {}, 0};
  std::size_t encodings = 0, coefficients = 0;
  std::vector<std::string> failures;
  for (const auto* catalog : {&acyclic_catalog(), &looping_catalog()}) {
    for (const auto& e : *catalog) {
      Machine m = load(e);
      Transformed t = normalize_for_encoding(m);
      for (const auto& c : all_pseudo_configurations(m)) {
        Observation o = encode_machine(t.machine, t.map(c));
        ++encodings;
        bool ok = true;
        for (const auto& [where, element] : o.entries()) {
          for (const auto& [g, coefficient] : element.terms()) {
            ++coefficients;
            if (coefficient != 1) ok = false;
          }
        }
        if (!ok || !o.in_p_plus()) failures.push_back(e.name + " " + describe(m, c));
      }
    }
  }
  r.pass = failures.empty();
  r.detail = std::to_string(encodings) + " encodings, " + std::to_string(coefficients) + " coefficients scanned, " +
             std::to_string(failures.size()) + " failures" + first_failures(failures);
  return r;
}

BatteryResult positivity_battery(const BatteryOptions& options) {
  BatteryResult r{8, "positivity", false, {}, 0};
  auto instances = encoded_catalog_instances();
  auto randoms = random_instances(options.seed);
  instances.insert(instances.end(), randoms.begin(), randoms.end());
  std::mt19937_64 rng(options.seed ^ 0x5eedULL);
  std::vector<std::string> failures;
  for (const auto& inst : instances) {
    Rational factor = random_positive(rng);
    Observation scaled = inst.obs->scaled(factor);
    ProductDynamics before(*inst.obs, inst.word);
    ProductDynamics after(scaled, inst.word);
    NilpotencyResult a = is_nilpotent(before, options.cap);
    NilpotencyResult b = is_nilpotent(after, options.cap);
    if (a.nilpotent != b.nilpotent || a.degree != b.degree) failures.push_back(inst.label + " x" + to_string(factor));
  }
  r.pass = failures.empty();
  r.detail = std::to_string(instances.size()) + " instances rescaled, " + std::to_string(failures.size()) +
             " verdict changes" + first_failures(failures);
  return r;
}

const std::vector<Battery>& all_batteries() {
  static const std::vector<Battery> batteries = {
      {1, "representation", {"matrix", "words"}, representation_battery},
      {2, "figure-graphs", {"matrix", "graph"}, figure_battery},
      {3, "stconn", {"machine", "graph"}, stconn_battery},
      {4, "acyclicity", {"machine", "clock"}, acyclicity_battery},
      {5, "simulator-operator", {"operators", "crossval"}, equivalence_battery},
      {6, "oracle-equivalence", {"nilpotency"}, oracle_battery},
      {7, "p-plus", {"operators"}, p_plus_battery},
      {8, "positivity", {"nilpotency"}, positivity_battery},
  };
  return batteries;
}

bool battery_matches(const Battery& b, const std::string& filter) {
  if (filter.empty() || filter == std::to_string(b.id)) return true;
  if (b.name.find(filter) != std::string::npos) return true;
  for (const auto& t : b.tags)
    if (t.find(filter) != std::string::npos) return true;
  return false;
}

BatteryResult run_battery(const Battery& b, const BatteryOptions& options) {
  auto start = std::chrono::steady_clock::now();
  BatteryResult r;
  try {
    r = b.run(options);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.id = b.id;
  r.name = b.name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace goi
