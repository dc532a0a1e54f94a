// Binary words on a circular tape, and the adjacency-list encoding of
// directed graphs used as machine input.
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace goi {

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Star = 2 };

inline constexpr Symbol kAllSymbols[] = {Symbol::Zero, Symbol::One, Symbol::Star};

// "0", "1" or "⋆".
std::string to_string(Symbol s);

// Accepts '0', '1', "⋆" and the ASCII spelling "star".
std::optional<Symbol> parse_symbol(std::string_view token);

class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyGraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ⋆a_1...a_k. The start symbol is implicit at position 0 and positions are
// read modulo k+1.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  std::size_t length() const noexcept { return bits_.size(); }
  std::size_t period() const noexcept { return bits_.size() + 1; }

  Symbol at(std::size_t position) const noexcept;

  // Letter a_t for t in 1..k.
  std::uint8_t letter(std::size_t t) const { return bits_.at(t - 1); }

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  // Plain '0'/'1' serialization, ⋆ omitted.
  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

BinaryWord parse_word(std::string_view text);

inline Symbol symbol_at(const BinaryWord& word, std::size_t i) { return word.at(i); }

// Every word of length exactly k, in lexicographic order.
std::vector<BinaryWord> words_of_length(std::size_t k);

// Every word of length 0..max_k.
std::vector<BinaryWord> words_up_to(std::size_t max_k);

using AdjacencyTable = std::vector<std::vector<std::uint8_t>>;

// ⋆ 0^n 1 R_1 1 R_2 1 ... 1 R_n 1 with R_i = a_i1 0 a_i2 0 ... 0 a_in.
BinaryWord encode_graph(const AdjacencyTable& adjacency);

// Inverse of encode_graph; nullopt if the word is not a well-formed encoding.
std::optional<AdjacencyTable> decode_graph(const BinaryWord& word);

// First line n, then n rows of n space-separated 0/1 entries.
AdjacencyTable parse_graph_text(std::string_view text);
AdjacencyTable read_graph_file(const std::filesystem::path& path);

}  // namespace goi
