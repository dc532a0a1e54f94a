#include "goi/stconn.hpp"

#include <queue>

#include "goi/machine_io.hpp"

namespace goi {

DirectedGraph make_graph(AdjacencyTable adjacency) {
  if (adjacency.empty()) throw EmptyGraphError("graph must have at least one node");
  DirectedGraph g{adjacency.size(), std::move(adjacency)};
  for (const auto& row : g.adjacency) {
    if (row.size() != g.n) throw std::invalid_argument("adjacency table is not square");
  }
  return g;
}

DirectedGraph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_probability);
  AdjacencyTable a(n, std::vector<std::uint8_t>(n, 0));
  for (auto& row : a)
    for (auto& cell : row) cell = coin(rng);
  return make_graph(std::move(a));
}

DirectedGraph graph_from_code(std::size_t n, std::uint64_t code) {
  AdjacencyTable a(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (code >> (i * n + j)) & 1u;
  return make_graph(std::move(a));
}

bool reach_oracle(const DirectedGraph& g) {
  std::vector<bool> seen(g.n, false);
  std::queue<std::size_t> todo;
  seen[0] = true;
  todo.push(0);
  while (!todo.empty()) {
    std::size_t u = todo.front();
    todo.pop();
    if (u == g.n - 1) return true;
    for (std::size_t v = 0; v < g.n; ++v) {
      if (g.adjacency[u][v] && !seen[v]) {
        seen[v] = true;
        todo.push(v);
      }
    }
  }
  return false;
}

namespace {

// Rule numbers follow the figure. Pointers: p1 counts followed edges on the
// unary prefix, p2 scans a row, p3 tracks the row of the current column,
// p4 tracks the column on the unary prefix.
constexpr const char* kHeader = R"(pointers: 4
states: Init out.edge? no.edge p3.next.node reading.sep.bit edge.found rewind.p2.p4 rewind.p2 exchange.p2.p3 get.p3.to.start
initial: ⋆,⋆,⋆,⋆;Init
)";

constexpr const char* kRules1to12 = R"(⋆ ⋆ ⋆ ⋆ Init -> +1 +2 +3 +4 Init                          # (1)
* 0 * * Init -> .1 +2 +3 .4 Init                           # (2)
* 1 * * Init -> .1 +2 .3 .4 out.edge?                      # (3)
* 0 * * out.edge? -> .1 +2 .3 +4 no.edge                   # (4)
* 0 * * no.edge -> .1 .2 +3 .4 p3.next.node                # (5)
* 1 * * no.edge -> accept                                  # (6)
* * * * p3.next.node -> .1 .2 +3 .4 reading.sep.bit        # (7)
* * 0 * reading.sep.bit -> .1 .2 +3 .4 p3.next.node        # (8)
* * 1 * reading.sep.bit -> .1 +2 .3 .4 out.edge?           # (9)
* 1 * * out.edge? -> .1 +2 .3 +4 no.edge                   # (10a)
* 1 * * out.edge? -> +1 .2 .3 +4 edge.found                # (10b)
* * * 1 edge.found -> reject                               # (11)
1 * * 0 edge.found -> accept                               # (12)
)";

constexpr const char* kRule13Printed = "* * * 0 edge.found -> .1 -2 .3 -4 rewind.p2.p4             # (13)\n";
constexpr const char* kRule13Repaired = "0 * * 0 edge.found -> .1 -2 .3 -4 rewind.p2.p4             # (13) repaired\n";

constexpr const char* kRule14 = "* * * 0/1 rewind.p2.p4 -> .1 -2 .3 -4 rewind.p2.p4         # (14)\n";
constexpr const char* kRule15Printed = "* * * ⋆ rewind.p2.p4 -> .1 -2 .3 .4 rewind.p2              # (15)\n";
constexpr const char* kRule15Repaired = "* * * ⋆ rewind.p2.p4 -> .1 -2 .3 +4 rewind.p2              # (15) repaired\n";

constexpr const char* kRules16to21 = R"(* 0/1 * * rewind.p2 -> .1 -2 .3 .4 rewind.p2               # (16)
* ⋆ * * rewind.p2 -> .1 +2 -3 .4 exchange.p2.p3            # (17)
* * 0/1 * exchange.p2.p3 -> .1 +2 -3 .4 exchange.p2.p3     # (18)
* * ⋆ * exchange.p2.p3 -> .1 .2 +3 .4 get.p3.to.start      # (19)
* * 0 * get.p3.to.start -> .1 .2 +3 .4 get.p3.to.start     # (20)
* * 1 * get.p3.to.start -> .1 +2 .3 .4 out.edge?           # (21)
)";

}  // namespace

std::string stconn_machine_text(StconnVariant variant) {
  std::string text = kHeader;
  std::string early = kRules1to12;
  if (variant == StconnVariant::Mutated) {
    auto at = early.find("* * * 1 edge.found -> reject");
    early.replace(at, std::string("* * * 1 edge.found -> reject").size(), "* * * 1 edge.found -> accept");
  }
  text += early;
  text += variant == StconnVariant::Printed ? kRule13Printed : kRule13Repaired;
  text += kRule14;
  text += variant == StconnVariant::Printed ? kRule15Printed : kRule15Repaired;
  text += kRules16to21;
  return text;
}

Machine stconn_machine(StconnVariant variant) {
  return parse_machine(stconn_machine_text(variant), "stconn");
}

RunResult decide_stconn(const DirectedGraph& g, StconnVariant variant) {
  static const Machine repaired = stconn_machine(StconnVariant::Repaired);
  static const Machine printed = stconn_machine(StconnVariant::Printed);
  static const Machine mutated = stconn_machine(StconnVariant::Mutated);
  const Machine& m = variant == StconnVariant::Repaired ? repaired : variant == StconnVariant::Printed ? printed : mutated;
  return run(m, *m.initial, encode_graph(g.adjacency));
}

}  // namespace goi
