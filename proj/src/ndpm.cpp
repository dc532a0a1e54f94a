#include "goi/ndpm.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace goi {

bool Transition::is_stay_only() const {
  return outcome == Outcome::Step && moving_count() == 0;
}

int Transition::moving_count() const {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](Move m) { return m != Move::Stay; }));
}

std::optional<StateId> Machine::find_state(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

StateId Machine::add_state(const std::string& name) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate state '" + name + "'");
  StateId id = static_cast<StateId>(names_.size());
  names_.push_back(name);
  by_name_[name] = id;
  return id;
}

StateId Machine::state(const std::string& name) {
  if (auto q = find_state(name)) return *q;
  return add_state(name);
}

PremiseKey Machine::premise_key(const std::vector<Symbol>& slots, StateId q) const {
  PremiseKey key = q;
  for (Symbol s : slots) key = key * 3 + static_cast<PremiseKey>(s);
  return key;
}

void Machine::add(Transition t) {
  if (static_cast<int>(t.reads.size()) != p_) throw std::invalid_argument("transition arity differs from pointer count");
  if (t.outcome == Outcome::Step && static_cast<int>(t.moves.size()) != p_) {
    throw std::invalid_argument("transition needs one instruction per pointer");
  }
  if (t.outcome != Outcome::Step) {
    t.moves.clear();
    t.to = 0;
  }
  if (t.from >= names_.size() || (t.outcome == Outcome::Step && t.to >= names_.size())) {
    throw std::invalid_argument("transition refers to an unknown state");
  }
  auto& bucket = index_[premise_key(t.reads, t.from)];
  for (std::size_t i : bucket) {
    if (transitions_[i] == t) return;
  }
  bucket.push_back(transitions_.size());
  transitions_.push_back(std::move(t));
}

const std::vector<std::size_t>& Machine::matching(const std::vector<Symbol>& slots, StateId q) const {
  static const std::vector<std::size_t> none;
  auto it = index_.find(premise_key(slots, q));
  return it == index_.end() ? none : it->second;
}

Transition step_rule(std::vector<Symbol> reads, StateId from, std::vector<Move> moves, StateId to) {
  return Transition{std::move(reads), from, Outcome::Step, std::move(moves), to};
}

Transition halt_rule(std::vector<Symbol> reads, StateId from, Outcome outcome) {
  return Transition{std::move(reads), from, outcome, {}, 0};
}

std::vector<std::vector<Symbol>> expand_pattern(const SymbolPattern& pattern) {
  std::vector<std::vector<Symbol>> out{{}};
  for (const auto& choices : pattern) {
    std::vector<std::vector<Symbol>> next;
    next.reserve(out.size() * choices.size());
    for (const auto& prefix : out) {
      for (Symbol s : choices) {
        next.push_back(prefix);
        next.back().push_back(s);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Transition> expand_shorthands(const SymbolPattern& reads, StateId from, Outcome outcome,
                                          const std::vector<Move>& moves, StateId to) {
  std::vector<Transition> out;
  for (auto& concrete : expand_pattern(reads)) {
    out.push_back(Transition{std::move(concrete), from, outcome,
                             outcome == Outcome::Step ? moves : std::vector<Move>{},
                             outcome == Outcome::Step ? to : 0});
  }
  return out;
}

std::vector<PseudoConfiguration> all_pseudo_configurations(const Machine& m) {
  std::vector<PseudoConfiguration> out;
  auto slot_sets = expand_pattern(SymbolPattern(m.pointers(), kAny));
  for (StateId q = 0; q < m.state_count(); ++q) {
    for (const auto& slots : slot_sets) out.push_back({slots, q});
  }
  return out;
}

StepResult step(const Machine& m, const BinaryWord& word, const Configuration& c) {
  StepResult r;
  const auto& hits = m.matching(c.slots, c.state);
  if (hits.empty()) {
    r.accept = true;
    return r;
  }
  const std::uint32_t period = static_cast<std::uint32_t>(word.period());
  for (std::size_t i : hits) {
    const Transition& t = m.transitions()[i];
    switch (t.outcome) {
      case Outcome::Accept: r.accept = true; break;
      case Outcome::Reject: r.reject = true; break;
      case Outcome::Step: {
        Configuration n = c;
        for (int j = 0; j < m.pointers(); ++j) {
          if (t.moves[j] == Move::Stay) continue;
          auto& pos = n.positions[j];
          pos = t.moves[j] == Move::Forward ? (pos + 1) % period : (pos + period - 1) % period;
          n.slots[j] = word.at(pos);
        }
        n.state = t.to;
        r.next.push_back(std::move(n));
        break;
      }
    }
  }
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Accept: return "ACCEPT";
    case Verdict::Reject: return "REJECT";
    case Verdict::Diverge: return "DIVERGE";
  }
  return "?";
}

Configuration start_configuration(const Machine& m, const PseudoConfiguration& c) {
  if (static_cast<int>(c.slots.size()) != m.pointers()) throw std::invalid_argument("pseudo-configuration arity differs from pointer count");
  if (c.state >= m.state_count()) throw std::invalid_argument("pseudo-configuration names an unknown state");
  return Configuration{std::vector<std::uint32_t>(m.pointers(), 0), c.slots, c.state};
}

namespace {

struct Key {
  std::uint64_t hi = 0, lo = 0;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ull ^ (k.hi + 0x632BE59BD9B4E019ull + (k.lo << 6) + (k.lo >> 2));
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Packs a configuration into 128 bits.
class Packer {
 public:
  Packer(const Machine& m, const BinaryWord& w) {
    pos_bits_ = std::bit_width(w.period());
    state_bits_ = std::max(1, static_cast<int>(std::bit_width(m.state_count())));
    int total = m.pointers() * (pos_bits_ + 2) + state_bits_;
    if (total > 128) throw std::length_error("configuration does not fit the 128-bit key");
  }

  Key pack(const Configuration& c) const {
    Key k;
    int used = 0;
    auto put = [&](std::uint64_t v, int bits) {
      for (int b = 0; b < bits; ++b, ++used) {
        if ((v >> b) & 1u) {
          if (used < 64) k.lo |= std::uint64_t{1} << used;
          else k.hi |= std::uint64_t{1} << (used - 64);
        }
      }
    };
    for (std::size_t j = 0; j < c.positions.size(); ++j) {
      put(c.positions[j], pos_bits_);
      put(static_cast<std::uint64_t>(c.slots[j]), 2);
    }
    put(c.state, state_bits_);
    return k;
  }

 private:
  int pos_bits_ = 1;
  int state_bits_ = 1;
};

enum Color : std::uint8_t { Gray = 1, Black = 2 };

struct Frame {
  std::vector<Configuration> succ;
  std::size_t next = 0;
  Key key;
};

// Depth-first exploration shared by run_from and halts_everywhere.
// Returns true if a reject was reached (and stop_on_reject was set).
struct Explorer {
  const Machine& m;
  const BinaryWord& word;
  Packer packer;
  std::unordered_map<Key, std::uint8_t, KeyHash> color;
  bool cycle = false;
  bool reject = false;
  RunStats stats;

  Explorer(const Machine& machine, const BinaryWord& w) : m(machine), word(w), packer(machine, w) {}

  void explore(const Configuration& root, bool stop_on_reject) {
    std::vector<Frame> stack;
    auto enter = [&](const Configuration& c, const Key& key) {
      color[key] = Gray;
      ++stats.configurations;
      StepResult r = step(m, word, c);
      if (r.accept || r.reject) ++stats.branches;
      if (r.reject) reject = true;
      stack.push_back(Frame{std::move(r.next), 0, key});
      stats.max_depth = std::max(stats.max_depth, stack.size());
    };
    Key rk = packer.pack(root);
    if (color.count(rk)) return;
    enter(root, rk);
    while (!stack.empty()) {
      if (reject && stop_on_reject) return;
      Frame& f = stack.back();
      if (f.next == f.succ.size()) {
        color[f.key] = Black;
        stack.pop_back();
        continue;
      }
      const Configuration& c = f.succ[f.next++];
      Key key = packer.pack(c);
      auto it = color.find(key);
      if (it == color.end()) {
        Configuration copy = c;
        enter(copy, key);
      } else if (it->second == Gray) {
        cycle = true;
      }
    }
  }
};

}  // namespace

RunResult run_from(const Machine& m, const Configuration& c, const BinaryWord& word) {
  for (auto pos : c.positions) {
    if (pos >= word.period()) throw std::invalid_argument("pointer position outside the tape");
  }
  Explorer ex(m, word);
  ex.explore(c, true);
  RunResult r;
  r.stats = ex.stats;
  r.verdict = ex.reject ? Verdict::Reject : ex.cycle ? Verdict::Diverge : Verdict::Accept;
  return r;
}

RunResult run(const Machine& m, const PseudoConfiguration& c, const BinaryWord& word) {
  return run_from(m, start_configuration(m, c), word);
}

bool halts_everywhere(const Machine& m, const BinaryWord& word) {
  Explorer ex(m, word);
  const int p = m.pointers();
  const std::uint32_t period = static_cast<std::uint32_t>(word.period());
  auto slot_sets = expand_pattern(SymbolPattern(p, kAny));
  std::vector<std::uint32_t> pos(p, 0);
  while (true) {
    for (StateId q = 0; q < m.state_count(); ++q) {
      for (const auto& slots : slot_sets) {
        ex.explore(Configuration{pos, slots, q}, false);
        if (ex.cycle) return false;
      }
    }
    int j = 0;
    while (j < p && ++pos[j] == period) pos[j++] = 0;
    if (j == p) break;
  }
  return true;
}

std::string describe(const Machine& m, const PseudoConfiguration& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.slots.size(); ++i) out << (i ? "," : "") << to_string(c.slots[i]);
  out << ";" << m.state_name(c.state);
  return out.str();
}

}  // namespace goi
