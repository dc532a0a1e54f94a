// Non-deterministic pointer machines: definition and universal execution.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "goi/words.hpp"

namespace goi {

enum class Move : std::uint8_t { Stay = 0, Forward = 1, Backward = 2 };

using StateId = std::uint32_t;

enum class Outcome : std::uint8_t { Step, Accept, Reject };

struct Transition {
  std::vector<Symbol> reads;
  StateId from = 0;
  Outcome outcome = Outcome::Accept;
  std::vector<Move> moves;  // one per pointer, only for Outcome::Step
  StateId to = 0;

  bool is_stay_only() const;
  int moving_count() const;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct PseudoConfiguration {
  std::vector<Symbol> slots;
  StateId state = 0;
  friend bool operator==(const PseudoConfiguration&, const PseudoConfiguration&) = default;
};

struct Configuration {
  std::vector<std::uint32_t> positions;
  std::vector<Symbol> slots;
  StateId state = 0;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// A premise is (slots, state) packed base 3 with the state on top.
using PremiseKey = std::uint64_t;

class Machine {
 public:
  Machine() = default;
  explicit Machine(int pointers) : p_(pointers) {}

  int pointers() const { return p_; }
  std::size_t state_count() const { return names_.size(); }
  const std::vector<std::string>& state_names() const { return names_; }
  const std::string& state_name(StateId q) const { return names_.at(q); }
  std::optional<StateId> find_state(const std::string& name) const;

  StateId add_state(const std::string& name);
  StateId state(const std::string& name);  // add if missing

  // Duplicates are dropped, so the relation really is a set.
  void add(Transition t);
  const std::vector<Transition>& transitions() const { return transitions_; }

  PremiseKey premise_key(const std::vector<Symbol>& slots, StateId q) const;
  const std::vector<std::size_t>& matching(const std::vector<Symbol>& slots, StateId q) const;

  std::optional<PseudoConfiguration> initial;

 private:
  int p_ = 1;
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> by_name_;
  std::vector<Transition> transitions_;
  std::unordered_map<PremiseKey, std::vector<std::size_t>> index_;
};

// Helpers for building transitions by hand.
Transition step_rule(std::vector<Symbol> reads, StateId from, std::vector<Move> moves, StateId to);
Transition halt_rule(std::vector<Symbol> reads, StateId from, Outcome outcome);

// A premise pattern: each position lists the symbols it matches.
using SymbolPattern = std::vector<std::vector<Symbol>>;
inline const std::vector<Symbol> kAny = {Symbol::Zero, Symbol::One, Symbol::Star};
inline const std::vector<Symbol> kBit = {Symbol::Zero, Symbol::One};

std::vector<std::vector<Symbol>> expand_pattern(const SymbolPattern& pattern);

// Cartesian expansion of a wildcard premise into concrete transitions.
std::vector<Transition> expand_shorthands(const SymbolPattern& reads, StateId from, Outcome outcome,
                                          const std::vector<Move>& moves = {}, StateId to = 0);

// Every concrete pseudo-configuration of the machine.
std::vector<PseudoConfiguration> all_pseudo_configurations(const Machine& m);

struct StepResult {
  std::vector<Configuration> next;
  bool accept = false;
  bool reject = false;
};

StepResult step(const Machine& m, const BinaryWord& word, const Configuration& c);

enum class Verdict : std::uint8_t { Accept, Reject, Diverge };
std::string to_string(Verdict v);

struct RunStats {
  std::size_t configurations = 0;
  std::size_t branches = 0;  // halting leaves reached
  std::size_t max_depth = 0;
};

struct RunResult {
  Verdict verdict = Verdict::Accept;
  RunStats stats;
};

Configuration start_configuration(const Machine& m, const PseudoConfiguration& c);

// Explores every configuration reachable from c. Any reachable reject wins;
// otherwise a reachable cycle means some branch never halts.
RunResult run_from(const Machine& m, const Configuration& c, const BinaryWord& word);
RunResult run(const Machine& m, const PseudoConfiguration& c, const BinaryWord& word);

// True iff no configuration at all (any positions, slots and state) lies on
// a cycle, i.e. the machine halts from everywhere on this word.
bool halts_everywhere(const Machine& m, const BinaryWord& word);

std::string describe(const Machine& m, const PseudoConfiguration& c);

}  // namespace goi
