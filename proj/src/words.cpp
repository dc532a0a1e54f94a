#include "goi/words.hpp"

#include <fstream>
#include <sstream>

namespace goi {

std::string to_string(Symbol s) {
  switch (s) {
    case Symbol::Zero: return "0";
    case Symbol::One: return "1";
    case Symbol::Star: return "⋆";
  }
  return "?";
}

std::optional<Symbol> parse_symbol(std::string_view token) {
  if (token == "0") return Symbol::Zero;
  if (token == "1") return Symbol::One;
  if (token == "⋆" || token == "star") return Symbol::Star;
  return std::nullopt;
}

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw AlphabetError("binary word letters must be 0 or 1");
  }
}

Symbol BinaryWord::at(std::size_t position) const noexcept {
  std::size_t i = position % period();
  if (i == 0) return Symbol::Star;
  return bits_[i - 1] ? Symbol::One : Symbol::Zero;
}

std::string BinaryWord::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

BinaryWord parse_word(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') {
      throw AlphabetError("invalid character '" + std::string(1, c) + "' at offset " +
                          std::to_string(i) + " in word \"" + std::string(text) + "\"");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

std::vector<BinaryWord> words_of_length(std::size_t k) {
  std::vector<BinaryWord> out;
  const std::size_t count = std::size_t{1} << k;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<std::uint8_t> bits(k);
    for (std::size_t i = 0; i < k; ++i) bits[i] = (code >> (k - 1 - i)) & 1u;
    out.emplace_back(std::move(bits));
  }
  return out;
}

std::vector<BinaryWord> words_up_to(std::size_t max_k) {
  std::vector<BinaryWord> out;
  for (std::size_t k = 0; k <= max_k; ++k) {
    auto layer = words_of_length(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

BinaryWord encode_graph(const AdjacencyTable& adjacency) {
  const std::size_t n = adjacency.size();
  if (n == 0) throw EmptyGraphError("graph must have at least one node");
  std::vector<std::uint8_t> bits;
  bits.reserve(2 * n * n + n);
  bits.insert(bits.end(), n, 0);
  bits.push_back(1);
  for (const auto& row : adjacency) {
    if (row.size() != n) throw std::invalid_argument("adjacency table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) bits.push_back(0);
      bits.push_back(row[j] ? 1 : 0);
    }
    bits.push_back(1);
  }
  return BinaryWord(std::move(bits));
}

std::optional<AdjacencyTable> decode_graph(const BinaryWord& word) {
  const auto& bits = word.bits();
  std::size_t n = 0;
  while (n < bits.size() && bits[n] == 0) ++n;
  if (n == 0 || bits.size() != 2 * n * n + n + 1) return std::nullopt;
  AdjacencyTable table(n, std::vector<std::uint8_t>(n, 0));
  std::size_t at = n;
  if (bits[at++] != 1) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0 && bits[at++] != 0) return std::nullopt;
      table[i][j] = bits[at++];
    }
    if (bits[at++] != 1) return std::nullopt;
  }
  return table;
}

AdjacencyTable parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n < 0) throw std::invalid_argument("graph file: expected node count on first line");
  if (n == 0) throw EmptyGraphError("graph must have at least one node");
  AdjacencyTable table(static_cast<std::size_t>(n), std::vector<std::uint8_t>(static_cast<std::size_t>(n)));
  for (auto& row : table) {
    for (auto& cell : row) {
      int v = -1;
      if (!(in >> v) || (v != 0 && v != 1)) {
        throw std::invalid_argument("graph file: expected " + std::to_string(n * n) + " entries in {0,1}");
      }
      cell = static_cast<std::uint8_t>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("graph file: unexpected trailing token '" + extra + "'");
  return table;
}

AdjacencyTable read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph_text(ss.str());
}

}  // namespace goi
