#include <doctest.h>

#include <random>
#include <set>

#include "goi/words.hpp"

using namespace goi;

namespace {

// Straight from the layout ⋆ 0^n 1 a11 0 a12 0 ... a1n 1 ... an1 0 ... ann 1.
std::string layout_oracle(const AdjacencyTable& a) {
  std::string s(a.size(), '0');
  s += '1';
  for (const auto& row : a) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += '0';
      s += row[j] ? '1' : '0';
    }
    s += '1';
  }
  return s;
}

}  // namespace

TEST_CASE("the start marker sits at position 0 and the tape is circular") {
  BinaryWord w = parse_word("110");
  CHECK(w.length() == 3);
  CHECK(w.period() == 4);
  CHECK(w.at(0) == Symbol::Star);
  CHECK(w.at(1) == Symbol::One);
  CHECK(w.at(2) == Symbol::One);
  CHECK(w.at(3) == Symbol::Zero);
  CHECK(w.at(4) == Symbol::Star);
  CHECK(w.at(7) == Symbol::Zero);
  CHECK(symbol_at(w, 9) == Symbol::One);

  BinaryWord empty = parse_word("");
  for (std::size_t i = 0; i < 5; ++i) CHECK(empty.at(i) == Symbol::Star);
}

TEST_CASE("symbols outside {0,1} are rejected") {
  CHECK_THROWS_AS(parse_word("102"), AlphabetError);
  CHECK_THROWS_AS(parse_word("1 0"), AlphabetError);
  CHECK_THROWS_AS(BinaryWord({0, 2}), AlphabetError);
}

TEST_CASE("symbol parsing accepts the star spelled out") {
  CHECK(parse_symbol("⋆") == Symbol::Star);
  CHECK(parse_symbol("star") == Symbol::Star);
  CHECK(parse_symbol("1") == Symbol::One);
  CHECK_FALSE(parse_symbol("2").has_value());
  CHECK(to_string(Symbol::Star) == "⋆");
}

TEST_CASE("words of each length are enumerated once each") {
  for (std::size_t k = 0; k <= 8; ++k) {
    auto ws = words_of_length(k);
    CHECK(ws.size() == (std::size_t{1} << k));
    std::set<std::string> distinct;
    for (const auto& w : ws) {
      CHECK(w.length() == k);
      distinct.insert(w.str());
    }
    CHECK(distinct.size() == ws.size());
  }
  CHECK(words_up_to(3).size() == 15);
  std::size_t with_k_1_to_8 = 0;
  for (std::size_t k = 1; k <= 8; ++k) with_k_1_to_8 += words_of_length(k).size();
  CHECK(with_k_1_to_8 == 510);
}

TEST_CASE("graph encoding follows the separator layout") {
  AdjacencyTable path = {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(encode_graph(path).str() == "0001001001000011000001");
  CHECK(encode_graph({{1}}).str() == "0111");

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 6;
    AdjacencyTable a(n, std::vector<std::uint8_t>(n));
    for (auto& row : a)
      for (auto& x : row) x = rng() % 2;
    BinaryWord w = encode_graph(a);
    CHECK(w.str() == layout_oracle(a));
    CHECK(w.length() == 2 * n * n + n + 1);
    auto back = decode_graph(w);
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
}

TEST_CASE("decoding refuses words that are not graph encodings") {
  CHECK_FALSE(decode_graph(parse_word("")).has_value());
  CHECK_FALSE(decode_graph(parse_word("1")).has_value());
  CHECK_FALSE(decode_graph(parse_word("0110")).has_value());  // separator missing
  CHECK_FALSE(decode_graph(parse_word("01111")).has_value());  // wrong length
}

TEST_CASE("graph text") {
  AdjacencyTable a = parse_graph_text("2\n0 1\n0 0\n");
  CHECK(a == AdjacencyTable{{0, 1}, {0, 0}});
  CHECK_THROWS_AS(parse_graph_text("0\n"), EmptyGraphError);
  CHECK_THROWS_AS(encode_graph({}), EmptyGraphError);
  CHECK_THROWS(parse_graph_text("2\n0 1\n0\n"));
  CHECK_THROWS(parse_graph_text("2\n0 1\n0 2\n"));
  CHECK_THROWS(parse_graph_text("1\n0 extra\n"));
}
