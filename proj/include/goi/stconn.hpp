// The four-pointer machine for "no path from node 1 to node n", and a
// breadth-first oracle for the same question.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "goi/ndpm.hpp"
#include "goi/words.hpp"

namespace goi {

struct DirectedGraph {
  std::size_t n = 0;
  AdjacencyTable adjacency;
};

DirectedGraph make_graph(AdjacencyTable adjacency);
DirectedGraph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng);

// All 2^(n*n) adjacency tables on n nodes, enumerated by bit pattern.
DirectedGraph graph_from_code(std::size_t n, std::uint64_t code);

// True iff node n can be reached from node 1 (1-based).
bool reach_oracle(const DirectedGraph& g);

enum class StconnVariant {
  Repaired,  // the figure with the documented repairs
  Printed,   // only the unparseable instruction of rule 8 fixed
  Mutated,   // deliberately broken (rule 11 accepts instead of rejecting)
};

std::string stconn_machine_text(StconnVariant variant = StconnVariant::Repaired);
Machine stconn_machine(StconnVariant variant = StconnVariant::Repaired);

RunResult decide_stconn(const DirectedGraph& g, StconnVariant variant = StconnVariant::Repaired);

}  // namespace goi
