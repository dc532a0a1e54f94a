// The slice graph of a binary word and its 6x6 block matrix.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "goi/words.hpp"

namespace goi {

// 0o, 0i, 1o, 1i, S (= ⋆ output), E (= ⋆ input).
enum class Flavor : std::uint8_t { O0 = 0, I0 = 1, O1 = 2, I1 = 3, S = 4, E = 5 };

inline constexpr std::array<Flavor, 6> kAllFlavors = {Flavor::O0, Flavor::I0, Flavor::O1,
                                                      Flavor::I1, Flavor::S,  Flavor::E};

std::string to_string(Flavor f);
std::optional<Flavor> parse_flavor(std::string_view text);

inline bool is_output(Flavor f) { return f == Flavor::O0 || f == Flavor::O1 || f == Flavor::S; }
inline bool is_input(Flavor f) { return !is_output(f); }

// Flavor carried by a symbol on its output (resp. input) side.
Flavor out_flavor(Symbol s);
Flavor in_flavor(Symbol s);
Symbol symbol_of(Flavor f);

class EmptyWordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphNode {
  Flavor flavor;
  std::size_t slice;
  friend auto operator<=>(const GraphNode&, const GraphNode&) = default;
};

std::string to_string(const GraphNode& n);

using Edge = std::pair<GraphNode, GraphNode>;

// Edges are stored with first < second so that the set is canonical.
struct IntegerGraph {
  std::size_t k = 0;
  std::set<Edge> edges;
  std::map<GraphNode, GraphNode> partner;

  void add_edge(GraphNode a, GraphNode b);
  std::string to_dot() const;
};

// Slice s carries letter a_{k+1-s}; an output at slice s meets the input at
// slice s-1, the last letter's output meets (E,0), and (S,0) meets the first
// letter's input at slice k.
IntegerGraph build_graph(const BinaryWord& word);

std::optional<GraphNode> integer_action(const IntegerGraph& g, const GraphNode& node);

// Row-flavor order of the assembled matrix.
inline constexpr std::array<Flavor, 6> kLayoutOrder = {Flavor::I0, Flavor::O0, Flavor::I1,
                                                       Flavor::O1, Flavor::S,  Flavor::E};
std::size_t layout_index(Flavor f);

using SparseBlock = std::set<std::pair<std::size_t, std::size_t>>;

// The (row-flavor, column-flavor) sub-blocks of the symmetric adjacency matrix
// that carry the word: l_uv sits at (v i, u o), s_v at (v i, S), e_u at (E, u o).
// The remaining nonzero blocks are their transposes.
struct IntegerMatrix {
  BinaryWord word;
  std::size_t k = 0;
  SparseBlock l[2][2];
  SparseBlock s[2];
  SparseBlock e[2];

  std::size_t dim() const { return 6 * (k + 1); }
  SparseBlock assembled() const;
  std::vector<std::vector<std::uint8_t>> dense() const;
};

IntegerMatrix build_matrix(const BinaryWord& word);

bool check_representation(const IntegerMatrix& m);

bool is_symmetric(const SparseBlock& m);
bool is_matching(const SparseBlock& m);

}  // namespace goi
