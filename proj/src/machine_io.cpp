#include "goi/machine_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace goi {

ParseError::ParseError(std::string file, std::size_t line, std::string token, const std::string& what)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + what + " (at '" + token + "')"),
      file_(std::move(file)),
      line_(line),
      token_(std::move(token)) {}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::vector<Symbol>> parse_read(std::string_view tok) {
  if (tok == "*") return kAny;
  if (tok == "0/1") return kBit;
  if (auto s = parse_symbol(tok)) return std::vector<Symbol>{*s};
  return std::nullopt;
}

}  // namespace

Machine parse_machine(std::string_view text, const std::string& source_name) {
  std::optional<int> pointers;
  Machine m;
  bool have_states = false;
  std::optional<std::pair<std::size_t, std::string>> pending_initial;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& tok, const std::string& what) -> ParseError {
    return ParseError(source_name, lineno, tok, what);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("pointers:")) {
      auto value = trim(line.substr(9));
      auto p = parse_int(value);
      if (!p || *p < 1) throw fail(std::string(value), "pointer count must be a positive integer");
      if (pointers) throw fail("pointers:", "pointer count declared twice");
      pointers = *p;
      m = Machine(*p);
      continue;
    }
    if (line.starts_with("states:")) {
      if (!pointers) throw fail("states:", "'pointers:' must come first");
      if (have_states) throw fail("states:", "states declared twice");
      for (const auto& name : split_ws(line.substr(7))) {
        if (m.find_state(name)) throw fail(name, "duplicate state");
        m.add_state(name);
      }
      if (m.state_count() == 0) throw fail("states:", "empty state list");
      have_states = true;
      continue;
    }
    if (line.starts_with("initial:")) {
      pending_initial = {lineno, std::string(trim(line.substr(8)))};
      continue;
    }

    if (!pointers || !have_states) {
      throw fail(std::string(line.substr(0, line.find(' '))), "transition before 'pointers:' and 'states:'");
    }
    const int p = *pointers;
    auto toks = split_ws(line);
    auto arrow = std::find(toks.begin(), toks.end(), "->");
    if (arrow == toks.end()) throw fail(toks.front(), "expected '->'");
    std::size_t lhs = static_cast<std::size_t>(arrow - toks.begin());
    if (lhs != static_cast<std::size_t>(p) + 1) {
      throw fail(toks[std::min(lhs, toks.size() - 1)], "premise needs " + std::to_string(p) + " reads and a state");
    }
    SymbolPattern reads;
    for (int i = 0; i < p; ++i) {
      auto r = parse_read(toks[i]);
      if (!r) throw fail(toks[i], "unknown symbol");
      reads.push_back(*r);
    }
    auto from = m.find_state(toks[p]);
    if (!from) throw fail(toks[p], "undeclared state");

    std::vector<std::string> rhs(arrow + 1, toks.end());
    if (rhs.size() == 1 && (rhs[0] == "accept" || rhs[0] == "reject")) {
      for (auto& t : expand_shorthands(reads, *from, rhs[0] == "accept" ? Outcome::Accept : Outcome::Reject)) m.add(std::move(t));
      continue;
    }
    if (rhs.size() != static_cast<std::size_t>(p) + 1) {
      throw fail(rhs.empty() ? "->" : rhs.back(), "conclusion needs " + std::to_string(p) + " instructions and a state, or accept/reject");
    }
    std::vector<Move> moves;
    for (int i = 0; i < p; ++i) {
      const std::string& tok = rhs[i];
      if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-' && tok[0] != '.')) throw fail(tok, "bad instruction");
      auto j = parse_int(std::string_view(tok).substr(1));
      if (!j || *j != i + 1) throw fail(tok, "instruction " + std::to_string(i + 1) + " must address pointer " + std::to_string(i + 1));
      moves.push_back(tok[0] == '+' ? Move::Forward : tok[0] == '-' ? Move::Backward : Move::Stay);
    }
    auto to = m.find_state(rhs[p]);
    if (!to) throw fail(rhs[p], "undeclared state");
    for (auto& t : expand_shorthands(reads, *from, Outcome::Step, moves, *to)) m.add(std::move(t));
  }

  if (!pointers) throw ParseError(source_name, lineno, "", "missing 'pointers:'");
  if (!have_states) throw ParseError(source_name, lineno, "", "missing 'states:'");
  if (pending_initial) {
    try {
      m.initial = parse_pseudo(m, pending_initial->second);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source_name, pending_initial->first, pending_initial->second, e.what());
    }
  }
  return m;
}

Machine read_machine_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_machine(ss.str(), path.string());
}

std::string to_string(Move mv, int pointer) {
  const char* prefix = mv == Move::Forward ? "+" : mv == Move::Backward ? "-" : ".";
  return prefix + std::to_string(pointer);
}

std::string describe(const Machine& m, const Transition& t) {
  std::string out;
  for (Symbol s : t.reads) out += to_string(s) + " ";
  out += m.state_name(t.from) + " -> ";
  switch (t.outcome) {
    case Outcome::Accept: return out + "accept";
    case Outcome::Reject: return out + "reject";
    case Outcome::Step: break;
  }
  for (std::size_t j = 0; j < t.moves.size(); ++j) out += to_string(t.moves[j], static_cast<int>(j) + 1) + " ";
  return out + m.state_name(t.to);
}

std::string machine_to_text(const Machine& m) {
  std::ostringstream out;
  out << "pointers: " << m.pointers() << "\nstates:";
  for (const auto& n : m.state_names()) out << ' ' << n;
  out << '\n';
  if (m.initial) {
    out << "initial: ";
    for (std::size_t i = 0; i < m.initial->slots.size(); ++i) out << (i ? "," : "") << to_string(m.initial->slots[i]);
    out << ';' << m.state_name(m.initial->state) << '\n';
  }
  for (const auto& t : m.transitions()) out << describe(m, t) << '\n';
  return out.str();
}

PseudoConfiguration parse_pseudo(const Machine& m, std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("pseudo-configuration needs 'symbols;state'");
  std::string_view syms = text.substr(0, semi);
  std::string state(trim(text.substr(semi + 1)));
  PseudoConfiguration c;
  std::size_t start = 0;
  while (start <= syms.size()) {
    auto comma = syms.find(',', start);
    auto tok = trim(syms.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (tok == "*" || tok == "0/1") throw std::invalid_argument("pseudo-configurations take concrete symbols, not '" + std::string(tok) + "'");
    auto s = parse_symbol(tok);
    if (!s) throw std::invalid_argument("unknown symbol '" + std::string(tok) + "'");
    c.slots.push_back(*s);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(c.slots.size()) != m.pointers()) {
    throw std::invalid_argument("expected " + std::to_string(m.pointers()) + " symbols, got " + std::to_string(c.slots.size()));
  }
  auto q = m.find_state(state);
  if (!q) throw std::invalid_argument("unknown state '" + state + "'");
  c.state = *q;
  return c;
}

}  // namespace goi
