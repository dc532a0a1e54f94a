#include "goi/operators.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace goi {

FlavorMatrix out_matrix() {
  FlavorMatrix m{};
  for (Flavor r : kAllFlavors) {
    if (!is_output(r)) continue;
    for (auto& cell : m[static_cast<int>(r)]) cell = 1;
  }
  return m;
}

FlavorMatrix in_matrix() {
  FlavorMatrix m{};
  for (Flavor r : kAllFlavors) {
    if (!is_input(r)) continue;
    for (auto& cell : m[static_cast<int>(r)]) cell = 1;
  }
  return m;
}

ControlSet::ControlSet(const Machine& m) : pointers_(m.pointers()) {
  names_ = m.state_names();
  const auto& ts = m.transitions();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].outcome != Outcome::Step) continue;
    move_of_[i] = static_cast<std::uint32_t>(names_.size());
    names_.push_back("move_t" + std::to_string(i));
  }
  back_base_ = static_cast<std::uint32_t>(names_.size());
  for (int j = 1; j <= pointers_; ++j) names_.push_back("back_" + std::to_string(j));
  for (int j = 1; j <= pointers_; ++j) names_.push_back("move-back_" + std::to_string(j));
}

ControlSet::ControlSet(std::vector<std::string> names, int pointers)
    : names_(std::move(names)), back_base_(static_cast<std::uint32_t>(names_.size())), pointers_(pointers) {}

std::uint32_t ControlSet::move_of(std::size_t transition) const {
  auto it = move_of_.find(transition);
  if (it == move_of_.end()) throw EncodingError("transition " + std::to_string(transition) + " has no move state");
  return it->second;
}

Observation::Observation(int pointers, ControlSet controls) : p_(pointers), controls_(std::move(controls)) {
  slot_codes_ = 1;
  for (int i = 0; i < p_; ++i) slot_codes_ *= 6;
}

std::size_t Observation::state_dimension() const {
  return static_cast<std::size_t>(slot_codes_) * controls_.size();
}

NodeKey Observation::key(const ObsNode& n) const {
  std::uint64_t code = 0;
  for (int i = p_ - 1; i >= 0; --i) code = code * 6 + static_cast<std::uint64_t>(n.state.slots[i]);
  return static_cast<std::uint64_t>(n.flavor) + 6 * (code + slot_codes_ * n.state.control);
}

ObsNode Observation::node(NodeKey k) const {
  ObsNode n;
  n.flavor = static_cast<Flavor>(k % 6);
  k /= 6;
  n.state.control = static_cast<std::uint32_t>(k / slot_codes_);
  std::uint64_t code = k % slot_codes_;
  n.state.slots.resize(p_);
  for (int i = 0; i < p_; ++i) {
    n.state.slots[i] = static_cast<Flavor>(code % 6);
    code /= 6;
  }
  return n;
}

void Observation::begin_summand(std::string label) {
  summands_.push_back(Summand{std::move(label), 0});
}

void Observation::add(const ObsNode& source, const ObsNode& target, const Permutation& g, const Rational& coefficient) {
  if (coefficient <= 0) throw std::invalid_argument("observation coefficients must be positive");
  if (g.size() != static_cast<std::size_t>(p_) + 1) throw std::invalid_argument("permutation must act on {0,...,p}");
  if (source.state.control >= controls_.size() || target.state.control >= controls_.size()) {
    throw std::invalid_argument("observation entry names an unknown control state");
  }
  NodeKey s = key(source), t = key(target);
  auto [it, fresh] = entries_.try_emplace({t, s});
  if (fresh) by_source_[s].push_back(t);
  it->second.add(g, coefficient);
  if (summands_.empty()) begin_summand("entries");
  ++summands_.back().entries;
}

const std::vector<NodeKey>& Observation::targets_of(NodeKey source) const {
  static const std::vector<NodeKey> none;
  auto it = by_source_.find(source);
  return it == by_source_.end() ? none : it->second;
}

bool Observation::in_p_plus() const {
  for (const auto& [k, e] : entries_) {
    if (!e.all_coefficients_one()) return false;
  }
  return true;
}

Observation Observation::scaled(const Rational& factor) const {
  Observation out(p_, controls_);
  for (const auto& [k, e] : entries_) {
    for (const auto& [g, a] : e.terms()) out.add(node(k.second), node(k.first), g, a * factor);
  }
  return out;
}

namespace {

std::string node_string(const ObsNode& n, const ControlSet& controls) {
  std::string out = "(" + to_string(n.flavor) + ", [";
  for (std::size_t i = 0; i < n.state.slots.size(); ++i) out += (i ? " " : "") + to_string(n.state.slots[i]);
  return out + "], " + controls.name(n.state.control) + ")";
}

const std::vector<Flavor> kOutputs = {Flavor::O0, Flavor::O1, Flavor::S};
const std::vector<Flavor> kInputs = {Flavor::I0, Flavor::I1, Flavor::E};
const std::vector<Flavor> kEvery(kAllFlavors.begin(), kAllFlavors.end());

std::vector<Flavor> flavors_of(Symbol s) { return {out_flavor(s), in_flavor(s)}; }

void for_each_slots(const std::vector<std::vector<Flavor>>& allowed, const std::function<void(const std::vector<Flavor>&)>& fn) {
  std::vector<Flavor> cur(allowed.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == allowed.size()) {
      fn(cur);
      return;
    }
    for (Flavor f : allowed[i]) {
      cur[i] = f;
      rec(i + 1);
    }
  };
  rec(0);
}

std::vector<std::vector<Flavor>> premise_slots(const std::vector<Symbol>& reads) {
  std::vector<std::vector<Flavor>> out;
  for (Symbol s : reads) out.push_back(flavors_of(s));
  return out;
}

}  // namespace

std::string Observation::dump() const {
  std::ostringstream out;
  for (const auto& [k, e] : entries_) {
    for (const auto& [g, a] : e.terms()) {
      out << node_string(node(k.second), controls_) << " -> " << node_string(node(k.first), controls_) << "  "
          << g.cycles() << "  " << to_string(a) << "\n";
    }
  }
  return out.str();
}

std::size_t encode_transition(Observation& o, const Machine& m, std::size_t transition_index) {
  const Transition& t = m.transitions().at(transition_index);
  if (t.outcome != Outcome::Step) return 0;
  const int p = m.pointers();
  if (t.moving_count() != 1) {
    throw EncodingError("transition " + std::to_string(transition_index) + " moves " + std::to_string(t.moving_count()) +
                        " pointers; the encoding needs exactly one");
  }
  int j = 0;
  while (t.moves[j] == Move::Stay) ++j;
  const bool forward = t.moves[j] == Move::Forward;
  const Permutation tau = Permutation::transposition(p + 1, 0, j + 1);
  const std::uint32_t move = o.controls().move_of(transition_index);

  // m: select pointer j, stash the active register in its slot, and emit a
  // token on the side facing the direction of travel.
  o.begin_summand("m_t" + std::to_string(transition_index));
  for_each_slots(premise_slots(t.reads), [&](const std::vector<Flavor>& slots) {
    for (Flavor f : kEvery) {
      StateBasisElement target{slots, move};
      target.slots[j] = f;
      for (Flavor g : forward ? kOutputs : kInputs) o.add({f, {slots, t.from}}, {g, target}, tau);
    }
  });

  // l_b: the token came back as the symbol b; record it and restore the register.
  for (Symbol b : kAllSymbols) {
    const Flavor h = forward ? in_flavor(b) : out_flavor(b);
    o.begin_summand("l_t" + std::to_string(transition_index) + "," + to_string(b));
    for_each_slots(std::vector<std::vector<Flavor>>(p, kEvery), [&](const std::vector<Flavor>& slots) {
      StateBasisElement target{slots, t.to};
      target.slots[j] = h;
      o.add({h, {slots, move}}, {slots[j], target}, tau);
    });
  }
  return 4;
}

Observation encode_machine(const Machine& m, const PseudoConfiguration& c) {
  const int p = m.pointers();
  if (static_cast<int>(c.slots.size()) != p || c.state >= m.state_count()) {
    throw EncodingError("pseudo-configuration does not fit the machine");
  }
  const auto& ts = m.transitions();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].is_stay_only()) throw EncodingError("transition " + std::to_string(i) + " moves no pointer; eliminate stays first");
  }
  Observation o(p, ControlSet(m));
  const ControlSet& cs = o.controls();
  const Permutation id = Permutation::identity(p + 1);
  const std::vector<std::vector<Flavor>> any_slots(p, kEvery);

  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].outcome == Outcome::Step) {
      encode_transition(o, m, i);
    } else if (ts[i].outcome == Outcome::Reject) {
      o.begin_summand("reject_t" + std::to_string(i));
      for_each_slots(premise_slots(ts[i].reads), [&](const std::vector<Flavor>& slots) {
        for (Flavor f : kEvery) o.add({f, {slots, ts[i].from}}, {f, {slots, cs.back(1)}}, id);
      });
    }
  }

  for (int j = 1; j <= p; ++j) {
    const Permutation tau = Permutation::transposition(p + 1, 0, j);
    const int s = j - 1;
    o.begin_summand("rm_" + std::to_string(j));
    for_each_slots(any_slots, [&](const std::vector<Flavor>& slots) {
      for (Flavor f : kEvery) {
        StateBasisElement target{slots, cs.move_back(j)};
        target.slots[s] = f;
        for (Flavor g : kInputs) o.add({f, {slots, cs.back(j)}}, {g, target}, tau);
      }
    });
    o.begin_summand("rr_" + std::to_string(j));
    for_each_slots(any_slots, [&](const std::vector<Flavor>& slots) {
      for (Flavor h : {Flavor::O0, Flavor::O1}) {
        StateBasisElement target{slots, cs.back(j)};
        target.slots[s] = h;
        o.add({h, {slots, cs.move_back(j)}}, {slots[s], target}, tau);
      }
    });
    o.begin_summand("rc_" + std::to_string(j));
    for_each_slots(any_slots, [&](const std::vector<Flavor>& slots) {
      StateBasisElement target{slots, j < p ? cs.back(j + 1) : c.state};
      target.slots[s] = out_flavor(c.slots[s]);
      o.add({Flavor::S, {slots, cs.move_back(j)}}, {slots[s], target}, tau);
    });
  }
  return o;
}

std::string to_string(const BasisVector& v, const ControlSet& controls) {
  std::ostringstream out;
  out << "(" << to_string(v.pi) << ";";
  for (auto a : v.positions) out << " " << a;
  out << "; " << v.sigma.cycles() << "; " << node_string({v.pi, v.state}, controls) << ")";
  return out.str();
}

namespace {

std::vector<Weighted> merge(std::map<BasisVector, Rational>& acc) {
  std::vector<Weighted> out;
  out.reserve(acc.size());
  for (auto& [v, a] : acc) out.push_back({a, v});
  return out;
}

}  // namespace

std::vector<Weighted> apply_group_element(const GroupAlgebraElement& g, const BasisVector& v) {
  std::map<BasisVector, Rational> acc;
  for (const auto& [nu, a] : g.terms()) {
    BasisVector w = v;
    w.sigma = nu.compose(v.sigma);
    acc[w] += a;
  }
  return merge(acc);
}

std::vector<Weighted> apply_observation(const Observation& o, const BasisVector& v) {
  std::map<BasisVector, Rational> acc;
  const NodeKey s = o.key({v.pi, v.state});
  for (NodeKey t : o.targets_of(s)) {
    const ObsNode target = o.node(t);
    for (const auto& [nu, a] : o.entries().at({t, s}).terms()) {
      BasisVector w = v;
      w.pi = target.flavor;
      w.state = target.state;
      w.sigma = nu.compose(v.sigma);
      acc[w] += a;
    }
  }
  return merge(acc);
}

std::optional<BasisVector> apply_integer(const IntegerGraph& g, const BasisVector& v) {
  const std::size_t j = v.sigma.inverse()(0);
  auto partner = integer_action(g, GraphNode{v.pi, v.positions.at(j)});
  if (!partner) return std::nullopt;
  BasisVector w = v;
  w.pi = partner->flavor;
  w.positions[j] = static_cast<std::uint32_t>(partner->slice);
  return w;
}

}  // namespace goi
