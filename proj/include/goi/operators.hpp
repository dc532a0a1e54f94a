// Observations: matrices over flavors x machine-state basis with entries in
// the nonnegative group algebra of permutations of {0,...,p}; the encoding of
// a machine as such an observation; and basis-vector dynamics.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "goi/integer_rep.hpp"
#include "goi/ndpm.hpp"
#include "goi/permutation.hpp"

namespace goi {

class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using FlavorMatrix = std::array<std::array<std::uint8_t, 6>, 6>;

// All-ones rows at 0o, 1o, S (resp. 0i, 1i, E), zero rows elsewhere.
FlavorMatrix out_matrix();
FlavorMatrix in_matrix();

struct StateBasisElement {
  std::vector<Flavor> slots;
  std::uint32_t control = 0;
  friend auto operator<=>(const StateBasisElement&, const StateBasisElement&) = default;
};

// Control states Q ∪ B. Machine states keep their ids; then one move_t per
// moving transition t, then back_1..back_p and move-back_1..move-back_p.
class ControlSet {
 public:
  ControlSet() = default;
  explicit ControlSet(const Machine& m);
  explicit ControlSet(std::vector<std::string> names, int pointers);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t c) const { return names_.at(c); }
  const std::vector<std::string>& names() const { return names_; }
  std::uint32_t move_of(std::size_t transition) const;
  std::uint32_t back(int j) const { return back_base_ + static_cast<std::uint32_t>(j) - 1; }
  std::uint32_t move_back(int j) const { return back_base_ + static_cast<std::uint32_t>(pointers_ + j) - 1; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::size_t, std::uint32_t> move_of_;
  std::uint32_t back_base_ = 0;
  int pointers_ = 0;
};

// Flavor plus state basis element, packed as flavor + 6 * (slots base 6 + 6^p * control).
using NodeKey = std::uint64_t;

struct ObsNode {
  Flavor flavor;
  StateBasisElement state;
};

class Observation {
 public:
  Observation() = default;
  Observation(int pointers, ControlSet controls);

  int pointers() const { return p_; }
  const ControlSet& controls() const { return controls_; }
  std::size_t state_dimension() const;  // 6^p |Q ∪ B|

  NodeKey key(const ObsNode& n) const;
  ObsNode node(NodeKey k) const;

  // Starts a new named summand; later entries are attributed to it.
  void begin_summand(std::string label);
  void add(const ObsNode& source, const ObsNode& target, const Permutation& g, const Rational& coefficient = 1);

  struct Summand {
    std::string label;
    std::size_t entries = 0;
  };
  const std::vector<Summand>& summands() const { return summands_; }

  // (target, source) -> element.
  const std::map<std::pair<NodeKey, NodeKey>, GroupAlgebraElement>& entries() const { return entries_; }
  const std::vector<NodeKey>& targets_of(NodeKey source) const;

  bool in_p_plus() const;
  Observation scaled(const Rational& factor) const;

  std::string dump() const;

 private:
  int p_ = 1;
  ControlSet controls_;
  std::uint64_t slot_codes_ = 6;
  std::map<std::pair<NodeKey, NodeKey>, GroupAlgebraElement> entries_;
  std::unordered_map<NodeKey, std::vector<NodeKey>> by_source_;
  std::vector<Summand> summands_;
};

// Encodes one transition of a one-move, stay-free machine as summands of o.
// Accept outcomes contribute nothing; reject outcomes are handled by encode_machine.
std::size_t encode_transition(Observation& o, const Machine& m, std::size_t transition_index);

// →• plus the reject loop that rewinds every pointer and restarts in c.
Observation encode_machine(const Machine& m, const PseudoConfiguration& c);

struct BasisVector {
  Flavor pi = Flavor::S;
  std::vector<std::uint32_t> positions;  // slices a_0..a_p
  Permutation sigma;
  StateBasisElement state;
  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

std::string to_string(const BasisVector& v, const ControlSet& controls);

struct Weighted {
  Rational coefficient;
  BasisVector vector;
};

std::vector<Weighted> apply_group_element(const GroupAlgebraElement& g, const BasisVector& v);
std::vector<Weighted> apply_observation(const Observation& o, const BasisVector& v);

// The integer acts on the node (pi, a_{σ⁻¹(0)}).
std::optional<BasisVector> apply_integer(const IntegerGraph& g, const BasisVector& v);

// Tape position t sits on slice (-t) mod (k+1).
inline std::uint32_t slice_of_position(std::uint32_t t, std::size_t k) {
  return static_cast<std::uint32_t>((k + 1 - t % (k + 1)) % (k + 1));
}

}  // namespace goi
