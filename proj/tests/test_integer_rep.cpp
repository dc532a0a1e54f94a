#include <doctest.h>

#include "goi/integer_rep.hpp"

using namespace goi;

namespace {

// Letter i (0 = ⋆) lives on slice (k+1-i) mod (k+1); every element's output
// meets the next element's input, and the last letter's output meets ⋆'s input.
std::set<Edge> chain_oracle(const BinaryWord& w) {
  const std::size_t k = w.length(), n = k + 1;
  auto out_of = [&](std::size_t i) {
    Symbol s = w.at(i);
    return GraphNode{s == Symbol::Star ? Flavor::S : s == Symbol::Zero ? Flavor::O0 : Flavor::O1, (n - i) % n};
  };
  auto in_of = [&](std::size_t i) {
    Symbol s = w.at(i);
    return GraphNode{s == Symbol::Star ? Flavor::E : s == Symbol::Zero ? Flavor::I0 : Flavor::I1, (n - i) % n};
  };
  std::set<Edge> edges;
  for (std::size_t i = 0; i <= k; ++i) {
    GraphNode a = out_of(i), b = in_of((i + 1) % n);
    edges.insert(a < b ? Edge{a, b} : Edge{b, a});
  }
  return edges;
}

}  // namespace

TEST_CASE("graphs of the four drawn lists") {
  using F = Flavor;
  CHECK(build_graph(parse_word("")).edges == std::set<Edge>{{{F::S, 0}, {F::E, 0}}});

  auto g = build_graph(parse_word("11010"));
  CHECK(g.edges.size() == 6);
  for (auto [a, b] : std::vector<std::pair<GraphNode, GraphNode>>{{{F::O0, 1}, {F::E, 0}},
                                                                   {{F::I0, 1}, {F::O1, 2}},
                                                                   {{F::I1, 2}, {F::O0, 3}},
                                                                   {{F::O1, 4}, {F::I0, 3}},
                                                                   {{F::I1, 4}, {F::O1, 5}},
                                                                   {{F::I1, 5}, {F::S, 0}}}) {
    CHECK(g.partner.at(a) == b);
    CHECK(g.partner.at(b) == a);
  }
}

TEST_CASE("graph agrees with the chain oracle on every word up to length 8") {
  for (const auto& w : words_up_to(8)) {
    auto g = build_graph(w);
    CHECK(g.k == w.length());
    CHECK(g.edges == chain_oracle(w));
    CHECK(g.partner.size() == 2 * (w.length() + 1));
  }
}

TEST_CASE("the integer acts as an involution without fixed points") {
  for (const auto& w : words_up_to(5)) {
    auto g = build_graph(w);
    for (std::size_t s = 0; s <= w.length(); ++s) {
      for (Flavor f : kAllFlavors) {
        auto image = integer_action(g, {f, s});
        if (!image) continue;
        CHECK(*image != GraphNode{f, s});
        CHECK(is_output(image->flavor) != is_output(f));
        auto back = integer_action(g, *image);
        REQUIRE(back.has_value());
        CHECK(*back == GraphNode{f, s});
      }
    }
  }
}

TEST_CASE("matrix blocks satisfy the representation equations") {
  for (std::size_t k = 1; k <= 8; ++k) {
    for (const auto& w : words_of_length(k)) {
      IntegerMatrix m = build_matrix(w);
      CHECK(m.dim() == 6 * (k + 1));
      CHECK(check_representation(m));
      SparseBlock a = m.assembled();
      CHECK(a.size() == 2 * (k + 1));
      CHECK(is_symmetric(a));
      CHECK(is_matching(a));
    }
  }
}

TEST_CASE("a matrix does not represent any other word of the same length") {
  for (std::size_t k = 1; k <= 4; ++k) {
    auto ws = words_of_length(k);
    for (const auto& w : ws) {
      IntegerMatrix m = build_matrix(w);
      for (const auto& other : ws) {
        if (other == w) continue;
        IntegerMatrix forged = m;
        forged.word = other;
        CHECK_FALSE(check_representation(forged));
      }
    }
  }
}

TEST_CASE("tampering with one block breaks the equations") {
  IntegerMatrix m = build_matrix(parse_word("0110"));
  IntegerMatrix dropped = m;
  dropped.s[0].clear();
  CHECK_FALSE(check_representation(dropped));
  IntegerMatrix swapped = m;
  std::swap(swapped.l[1][1], swapped.l[0][1]);
  CHECK_FALSE(check_representation(swapped));
}

TEST_CASE("the empty word has a graph but no matrix") {
  CHECK_THROWS_AS(build_matrix(parse_word("")), EmptyWordError);
}

TEST_CASE("dense layout follows the row order 0i 0o 1i 1o S E") {
  IntegerMatrix m = build_matrix(parse_word("1"));
  auto d = m.dense();
  REQUIRE(d.size() == 12);
  // (S,0) meets (1i,1): rows S = 8..9, 1i = 4..5.
  CHECK(d[8][5] == 1);
  CHECK(d[5][8] == 1);
  // (1o,1) meets (E,0): rows 1o = 6..7, E = 10..11.
  CHECK(d[7][10] == 1);
  CHECK(d[10][7] == 1);
  std::size_t ones = 0;
  for (const auto& row : d)
    for (auto x : row) ones += x;
  CHECK(ones == 4);
}

TEST_CASE("symmetry and matching detect violations") {
  CHECK_FALSE(is_symmetric({{0, 1}}));
  CHECK(is_symmetric({{0, 1}, {1, 0}}));
  CHECK_FALSE(is_matching({{0, 1}, {0, 2}}));
  CHECK_FALSE(is_matching({{0, 1}, {2, 1}}));
}

TEST_CASE("flavor helpers") {
  CHECK(out_flavor(Symbol::One) == Flavor::O1);
  CHECK(in_flavor(Symbol::Star) == Flavor::E);
  CHECK(symbol_of(Flavor::I0) == Symbol::Zero);
  CHECK(symbol_of(Flavor::S) == Symbol::Star);
  for (Flavor f : kAllFlavors) CHECK(parse_flavor(to_string(f)) == f);
  CHECK(build_graph(parse_word("01")).to_dot().find("graph") != std::string::npos);
}
