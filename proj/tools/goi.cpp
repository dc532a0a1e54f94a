// goi: command-line front end.
//
// Exit codes: 0 success / consistent, 1 inconsistency or failed property,
// 2 usage or parse error. JSON goes to stdout, diagnostics to stderr.

#include <CLI11.hpp>
#include <cstdio>
#include <deque>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>

#include "goi/batteries.hpp"
#include "goi/integer_rep.hpp"
#include "goi/machine_io.hpp"
#include "goi/nilpotency.hpp"
#include "goi/operators.hpp"
#include "goi/stconn.hpp"
#include "goi/transforms.hpp"
#include "goi/words.hpp"

using json = nlohmann::json;
using namespace goi;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BinaryWord word_arg(std::string text) {
  const std::string star = "⋆";
  if (text.rfind(star, 0) == 0) text.erase(0, star.size());
  else if (!text.empty() && text[0] == '*') text.erase(0, 1);
  return parse_word(text);
}

PseudoConfiguration pseudo_arg(const Machine& m, const std::string& text) {
  if (!text.empty()) return parse_pseudo(m, text);
  if (m.initial) return *m.initial;
  throw UsageError("machine has no initial: directive; pass --pseudo");
}

std::string word_label(const BinaryWord& w) { return "⋆" + w.str(); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// Breadth-first listing of reachable configurations, for --trace.
void trace_run(const Machine& m, const PseudoConfiguration& c, const BinaryWord& w, std::size_t limit = 2000) {
  auto show = [&](const Configuration& cfg) {
    std::string s = m.state_name(cfg.state) + " @";
    for (auto pos : cfg.positions) s += " " + std::to_string(pos);
    s += " reads";
    for (auto sym : cfg.slots) s += " " + to_string(sym);
    return s;
  };
  std::set<std::string> seen;
  std::deque<std::pair<Configuration, std::size_t>> queue{{start_configuration(m, c), 0}};
  while (!queue.empty() && seen.size() < limit) {
    auto [cfg, depth] = queue.front();
    queue.pop_front();
    std::string key = show(cfg);
    if (!seen.insert(key).second) continue;
    StepResult r = step(m, w, cfg);
    std::cerr << "[" << depth << "] " << key;
    if (r.reject) std::cerr << "  -> reject";
    if (r.accept) std::cerr << "  -> accept";
    std::cerr << '\n';
    for (auto& n : r.next) queue.push_back({n, depth + 1});
  }
  if (!queue.empty()) std::cerr << "... trace truncated at " << limit << " configurations\n";
}

json run_json(const RunResult& r) {
  return {{"verdict", to_string(r.verdict)},
          {"configurations", r.stats.configurations},
          {"branches", r.stats.branches},
          {"max_depth", r.stats.max_depth}};
}

StconnVariant variant_arg(const std::string& s) {
  if (s == "repaired") return StconnVariant::Repaired;
  if (s == "printed") return StconnVariant::Printed;
  if (s == "mutated") return StconnVariant::Mutated;
  throw UsageError("unknown variant " + s);
}

json nilpotency_json(const NilpotencyResult& r, const Observation& o) {
  json j = {{"nilpotent", r.nilpotent}, {"basis_size", r.basis_size}, {"edges", r.edges}};
  if (r.nilpotent) {
    j["degree"] = r.degree;
  } else {
    json cycle = json::array();
    for (const auto& v : r.cycle) cycle.push_back(to_string(v, o.controls()));
    j["cycle"] = cycle;
  }
  return j;
}

json matrix_json(const MatrixNilpotency& r) {
  json j = {{"nilpotent", r.nilpotent},
            {"basis_size", r.basis_size},
            {"nonzeros", r.nonzeros},
            {"power_checked", r.power_checked}};
  if (r.nilpotent) j["degree"] = r.degree;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integers, pointer machines and nilpotent observations"};
  app.require_subcommand(1);

  std::string machine_path, graph_path, word_text, pseudo_text, variant = "repaired", method = "tree", filter;
  bool trace = false, dot = false, raw = false, with_matrix = false, dump = false, mutate = false, table_only = false;
  std::uint64_t cap = capacity_from_environment();

  auto* run_cmd = app.add_subcommand("run", "run a machine on a word");
  run_cmd->add_option("machine", machine_path, "machine file")->required();
  run_cmd->add_option("--word,-w", word_text, "input word, e.g. 0110")->required();
  run_cmd->add_option("--pseudo,-c", pseudo_text, "start pseudo-configuration sym,...;state");
  run_cmd->add_flag("--trace", trace, "list reachable configurations on stderr");

  auto* stconn_cmd = app.add_subcommand("stconn", "decide st-connectivity complement with the pointer machine");
  stconn_cmd->add_option("graph", graph_path, "adjacency table file")->required();
  stconn_cmd->add_option("--variant", variant, "repaired | printed | mutated");
  stconn_cmd->add_flag("--trace", trace, "list reachable configurations on stderr");

  auto* matrix_cmd = app.add_subcommand("matrix", "symmetric matrix representing a word");
  matrix_cmd->add_option("--word,-w", word_text, "input word")->required();
  matrix_cmd->add_flag("--dot", dot, "print the graph in DOT instead of JSON");

  auto* encode_cmd = app.add_subcommand("encode", "encode a machine as an observation");
  encode_cmd->add_option("machine", machine_path, "machine file")->required();
  encode_cmd->add_option("--pseudo,-c", pseudo_text, "pseudo-configuration restarted after a reject");
  encode_cmd->add_flag("--raw", raw, "encode as is, without normalizing to one-move stay-free form");
  encode_cmd->add_flag("--dump", dump, "include every entry in the output");

  auto* nil_cmd = app.add_subcommand("nilpotency", "decide nilpotency of the observation times the word");
  nil_cmd->add_option("machine", machine_path, "machine file")->required();
  nil_cmd->add_option("--word,-w", word_text, "input word")->required();
  nil_cmd->add_option("--pseudo,-c", pseudo_text, "pseudo-configuration");
  nil_cmd->add_option("--method", method, "tree | matrix | both")->check(CLI::IsMember({"tree", "matrix", "both"}));
  nil_cmd->add_option("--cap", cap, "maximum basis size explored");

  auto* cv_cmd = app.add_subcommand("crossval", "compare the machine's verdict with nilpotency");
  cv_cmd->add_option("machine", machine_path, "machine file")->required();
  cv_cmd->add_option("--word,-w", word_text, "input word")->required();
  cv_cmd->add_option("--pseudo,-c", pseudo_text, "pseudo-configuration");
  cv_cmd->add_flag("--matrix", with_matrix, "also run the matrix oracle");
  cv_cmd->add_option("--cap", cap, "maximum basis size explored");

  auto* suite_cmd = app.add_subcommand("suite", "run the acceptance batteries");
  suite_cmd->add_option("--filter", filter, "battery id, name or tag");
  suite_cmd->add_flag("--table", table_only, "print only the table, no JSON");
  suite_cmd->add_option("--cap", cap, "maximum basis size explored");
  suite_cmd->add_flag("--inject-mutation", mutate)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) {
      Machine m = read_machine_file(machine_path);
      BinaryWord w = word_arg(word_text);
      PseudoConfiguration c = pseudo_arg(m, pseudo_text);
      if (trace) trace_run(m, c, w);
      json j = run_json(run(m, c, w));
      j["word"] = word_label(w);
      j["pseudo"] = describe(m, c);
      print(j);
      return 0;
    }

    if (*stconn_cmd) {
      DirectedGraph g = make_graph(read_graph_file(graph_path));
      StconnVariant v = variant_arg(variant);
      if (trace) {
        Machine m = stconn_machine(v);
        trace_run(m, *m.initial, encode_graph(g.adjacency));
      }
      RunResult r = decide_stconn(g, v);
      bool path = reach_oracle(g);
      json j = run_json(r);
      j["nodes"] = g.n;
      j["word"] = word_label(encode_graph(g.adjacency));
      j["oracle"] = path;
      j["agree"] = r.verdict != Verdict::Diverge && ((r.verdict == Verdict::Accept) == !path);
      print(j);
      return j["agree"].get<bool>() ? 0 : 1;
    }

    if (*matrix_cmd) {
      BinaryWord w = word_arg(word_text);
      if (dot) {
        std::cout << build_graph(w).to_dot();
        return 0;
      }
      IntegerMatrix mx = build_matrix(w);
      SparseBlock a = mx.assembled();
      json entries = json::array();
      for (auto [r, c] : a) entries.push_back({r, c, 1});
      json edges = json::array();
      for (const auto& [x, y] : build_graph(w).edges) edges.push_back({to_string(x), to_string(y)});
      json j = {{"word", word_label(w)},
                {"k", mx.k},
                {"dimension", mx.dim()},
                {"entries", entries},
                {"edges", edges},
                {"representation", check_representation(mx)},
                {"symmetric", is_symmetric(a)},
                {"matching", is_matching(a)}};
      print(j);
      bool ok = j["representation"].get<bool>() && j["symmetric"].get<bool>() && j["matching"].get<bool>();
      return ok ? 0 : 1;
    }

    if (*encode_cmd) {
      Machine m = read_machine_file(machine_path);
      PseudoConfiguration c = pseudo_arg(m, pseudo_text);
      Transformed t = raw ? Transformed{m, 0} : normalize_for_encoding(m);
      Observation o = encode_machine(t.machine, t.map(c));
      json summands = json::array();
      for (const auto& s : o.summands()) summands.push_back({{"label", s.label}, {"entries", s.entries}});
      json j = {{"pointers", o.pointers()},
                {"controls", o.controls().names()},
                {"state_dimension", o.state_dimension()},
                {"entries", o.entries().size()},
                {"summands", summands},
                {"in_p_plus", o.in_p_plus()},
                {"pseudo", describe(t.machine, t.map(c))}};
      if (dump) {
        json lines = json::array();
        std::istringstream in(o.dump());
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        j["dump"] = lines;
      }
      print(j);
      return j["in_p_plus"].get<bool>() ? 0 : 1;
    }

    if (*nil_cmd) {
      Machine m = read_machine_file(machine_path);
      BinaryWord w = word_arg(word_text);
      PseudoConfiguration c = pseudo_arg(m, pseudo_text);
      Transformed t = normalize_for_encoding(m);
      Observation o = encode_machine(t.machine, t.map(c));
      ProductDynamics dyn(o, w);
      json j = {{"word", word_label(w)}, {"dimension", dyn.dimension()}};
      std::optional<bool> tree_v, matrix_v;
      if (method == "tree" || method == "both") {
        NilpotencyResult r = is_nilpotent(dyn, cap);
        j["tree"] = nilpotency_json(r, o);
        tree_v = r.nilpotent;
      }
      if (method == "matrix" || method == "both") {
        MatrixNilpotency r = is_nilpotent_matrix(dyn, cap);
        j["matrix"] = matrix_json(r);
        matrix_v = r.nilpotent;
      }
      const json& primary = tree_v ? j["tree"] : j["matrix"];
      j["method"] = method;
      j["nilpotent"] = primary["nilpotent"];
      j["basis_size"] = primary["basis_size"];
      if (primary.contains("degree")) j["degree"] = primary["degree"];
      if (tree_v && j["tree"].contains("cycle")) j["cycle"] = j["tree"]["cycle"];
      bool agree = !tree_v || !matrix_v || *tree_v == *matrix_v;
      if (tree_v && matrix_v) {
        agree = agree && (!*tree_v || j["tree"]["degree"] == j["matrix"]["degree"]);
        j["agree"] = agree;
      }
      print(j);
      return agree ? 0 : 1;
    }

    if (*cv_cmd) {
      Machine m = read_machine_file(machine_path);
      BinaryWord w = word_arg(word_text);
      PseudoConfiguration c = pseudo_arg(m, pseudo_text);
      CrossvalOptions opts;
      opts.with_matrix = with_matrix;
      opts.cap = cap;
      CrossvalReport r = crossval(m, c, w, opts);
      json j = {{"word", word_label(w)},
                {"pseudo", describe(m, c)},
                {"verdict", to_string(r.verdict)},
                {"nilpotent", r.nilpotent},
                {"dimension", r.dimension},
                {"degree_within_bound", r.degree_within_bound},
                {"acyclic_everywhere", r.acyclic_everywhere},
                {"consistent", r.consistent}};
      if (r.nilpotent) j["degree"] = r.degree;
      if (r.matrix_nilpotent) j["matrix_nilpotent"] = *r.matrix_nilpotent;
      if (r.matrix_degree) j["matrix_degree"] = *r.matrix_degree;
      print(j);
      return r.consistent ? 0 : 1;
    }

    if (*suite_cmd) {
      BatteryOptions opts;
      opts.cap = cap;
      if (mutate) opts.stconn = StconnVariant::Mutated;
      json results = json::array();
      bool all_pass = true;
      std::size_t ran = 0;
      FILE* table = table_only ? stdout : stderr;
      for (const auto& b : all_batteries()) {
        if (!battery_matches(b, filter)) continue;
        BatteryResult r = run_battery(b, opts);
        ++ran;
        all_pass = all_pass && r.pass;
        std::fprintf(table, "%d  %-20s %s  %7.2fs  %s\n", r.id, r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds,
                     r.detail.c_str());
        std::fflush(table);
        results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      if (ran == 0) throw UsageError("no battery matches filter '" + filter + "'");
      if (!table_only) print({{"batteries", results}, {"pass", all_pass}});
      return all_pass ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const AlphabetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::system_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
