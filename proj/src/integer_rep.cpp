#include "goi/integer_rep.hpp"

#include <sstream>

namespace goi {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::O0: return "0o";
    case Flavor::I0: return "0i";
    case Flavor::O1: return "1o";
    case Flavor::I1: return "1i";
    case Flavor::S: return "S";
    case Flavor::E: return "E";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view text) {
  for (Flavor f : kAllFlavors) {
    if (to_string(f) == text) return f;
  }
  if (text == "s") return Flavor::S;
  if (text == "e") return Flavor::E;
  return std::nullopt;
}

Flavor out_flavor(Symbol s) {
  switch (s) {
    case Symbol::Zero: return Flavor::O0;
    case Symbol::One: return Flavor::O1;
    case Symbol::Star: return Flavor::S;
  }
  return Flavor::S;
}

Flavor in_flavor(Symbol s) {
  switch (s) {
    case Symbol::Zero: return Flavor::I0;
    case Symbol::One: return Flavor::I1;
    case Symbol::Star: return Flavor::E;
  }
  return Flavor::E;
}

Symbol symbol_of(Flavor f) {
  switch (f) {
    case Flavor::O0:
    case Flavor::I0: return Symbol::Zero;
    case Flavor::O1:
    case Flavor::I1: return Symbol::One;
    default: return Symbol::Star;
  }
}

std::string to_string(const GraphNode& n) {
  return "(" + to_string(n.flavor) + "," + std::to_string(n.slice) + ")";
}

void IntegerGraph::add_edge(GraphNode a, GraphNode b) {
  if (partner.count(a) || partner.count(b) || a == b) {
    throw std::logic_error("edge " + to_string(a) + "-" + to_string(b) + " breaks the matching");
  }
  if (b < a) std::swap(a, b);
  edges.insert({a, b});
  partner[a] = b;
  partner[b] = a;
}

std::string IntegerGraph::to_dot() const {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& [a, b] : edges) {
    out << "  \"" << to_string(a) << "\" -- \"" << to_string(b) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

IntegerGraph build_graph(const BinaryWord& word) {
  IntegerGraph g;
  const std::size_t k = word.length();
  g.k = k;
  if (k == 0) {
    g.add_edge({Flavor::S, 0}, {Flavor::E, 0});
    return g;
  }
  auto letter_at_slice = [&](std::size_t s) { return word.at(k + 1 - s); };
  for (std::size_t s = 2; s <= k; ++s) {
    g.add_edge({out_flavor(letter_at_slice(s)), s}, {in_flavor(letter_at_slice(s - 1)), s - 1});
  }
  g.add_edge({out_flavor(letter_at_slice(1)), 1}, {Flavor::E, 0});
  g.add_edge({Flavor::S, 0}, {in_flavor(letter_at_slice(k)), k});
  return g;
}

std::optional<GraphNode> integer_action(const IntegerGraph& g, const GraphNode& node) {
  auto it = g.partner.find(node);
  if (it == g.partner.end()) return std::nullopt;
  return it->second;
}

std::size_t layout_index(Flavor f) {
  for (std::size_t i = 0; i < kLayoutOrder.size(); ++i) {
    if (kLayoutOrder[i] == f) return i;
  }
  return 0;
}

IntegerMatrix build_matrix(const BinaryWord& word) {
  if (word.length() == 0) throw EmptyWordError("the matrix representation needs a non-empty word");
  IntegerGraph g = build_graph(word);
  IntegerMatrix m;
  m.word = word;
  m.k = g.k;
  for (const auto& [a, b] : g.edges) {
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      // x is the row node, y the column node.
      const Flavor rf = x.flavor, cf = y.flavor;
      if ((rf == Flavor::I0 || rf == Flavor::I1) && (cf == Flavor::O0 || cf == Flavor::O1)) {
        int u = symbol_of(cf) == Symbol::One, v = symbol_of(rf) == Symbol::One;
        m.l[u][v].insert({x.slice, y.slice});
      } else if ((rf == Flavor::I0 || rf == Flavor::I1) && cf == Flavor::S) {
        m.s[symbol_of(rf) == Symbol::One].insert({x.slice, y.slice});
      } else if (rf == Flavor::E && (cf == Flavor::O0 || cf == Flavor::O1)) {
        m.e[symbol_of(cf) == Symbol::One].insert({x.slice, y.slice});
      }
    }
  }
  return m;
}

namespace {

SparseBlock transpose(const SparseBlock& b) {
  SparseBlock t;
  for (auto [r, c] : b) t.insert({c, r});
  return t;
}

void place(SparseBlock& out, const SparseBlock& b, Flavor row, Flavor col, std::size_t n) {
  const std::size_t r0 = layout_index(row) * n, c0 = layout_index(col) * n;
  for (auto [r, c] : b) out.insert({r0 + r, c0 + c});
}

using IntMatrix = std::map<std::pair<std::size_t, std::size_t>, long long>;

IntMatrix to_int(const SparseBlock& b) {
  IntMatrix m;
  for (auto rc : b) m[rc] += 1;
  return m;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = a;
  for (const auto& [rc, v] : b) out[rc] += v;
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::map<std::size_t, std::vector<std::pair<std::size_t, long long>>> rows_of_b;
  for (const auto& [rc, v] : b) rows_of_b[rc.first].push_back({rc.second, v});
  IntMatrix out;
  for (const auto& [rc, v] : a) {
    auto it = rows_of_b.find(rc.second);
    if (it == rows_of_b.end()) continue;
    for (auto [c, w] : it->second) out[{rc.first, c}] += v * w;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

SparseBlock IntegerMatrix::assembled() const {
  SparseBlock out;
  const std::size_t n = k + 1;
  const Flavor in[2] = {Flavor::I0, Flavor::I1};
  const Flavor ou[2] = {Flavor::O0, Flavor::O1};
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      place(out, l[u][v], in[v], ou[u], n);
      place(out, transpose(l[u][v]), ou[u], in[v], n);
    }
    place(out, s[u], in[u], Flavor::S, n);
    place(out, transpose(s[u]), Flavor::S, in[u], n);
    place(out, e[u], Flavor::E, ou[u], n);
    place(out, transpose(e[u]), ou[u], Flavor::E, n);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> IntegerMatrix::dense() const {
  std::vector<std::vector<std::uint8_t>> d(dim(), std::vector<std::uint8_t>(dim(), 0));
  for (auto [r, c] : assembled()) d[r][c] = 1;
  return d;
}

bool is_symmetric(const SparseBlock& m) {
  for (auto [r, c] : m) {
    if (!m.count({c, r})) return false;
  }
  return true;
}

bool is_matching(const SparseBlock& m) {
  std::set<std::size_t> rows, cols;
  for (auto [r, c] : m) {
    if (!rows.insert(r).second || !cols.insert(c).second) return false;
  }
  return true;
}

bool check_representation(const IntegerMatrix& m) {
  const std::size_t k = m.k, n = k + 1;
  if (k == 0) return false;
  const BinaryWord& w = m.word;
  if (w.length() != k) return false;

  // The equations number slices from the ⋆ side in the opposite direction
  // to the graph; compare after reflecting slice indices.
  auto mirror = [n](std::size_t i) { return (n - i) % n; };
  auto shifted_support = [&](const SparseBlock& b, const std::set<std::size_t>& index) {
    for (auto [r, c] : b) {
      if (r >= n || c >= n) return false;
      std::size_t mr = mirror(r), mc = mirror(c);
      if (!index.count(mc) || mr != (mc + 1) % n) return false;
    }
    return true;
  };

  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      std::set<std::size_t> idx;
      for (std::size_t t = 1; t < k; ++t) {
        if (w.letter(t) == u && w.letter(t + 1) == v) idx.insert(t);
      }
      if (!shifted_support(m.l[u][v], idx)) return false;
    }
    std::set<std::size_t> s_idx, e_idx;
    if (w.letter(1) == u) s_idx.insert(0);
    if (w.letter(k) == u) e_idx.insert(k);
    if (!shifted_support(m.s[u], s_idx) || !shifted_support(m.e[u], e_idx)) return false;
  }

  IntMatrix sum_l;
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) sum_l = add(sum_l, to_int(m.l[u][v]));
  IntMatrix prod = add(to_int(m.e[0]), to_int(m.e[1]));
  for (std::size_t i = 0; i + 1 < k; ++i) prod = multiply(prod, sum_l);
  prod = multiply(prod, add(to_int(m.s[0]), to_int(m.s[1])));
  IntMatrix pi0{{{0, 0}, 1}};
  return prod == pi0;
}

}  // namespace goi
