#include "goi/transforms.hpp"

#include <cmath>
#include <functional>

namespace goi {

PseudoConfiguration Transformed::map(const PseudoConfiguration& c) const {
  PseudoConfiguration out = c;
  out.slots.insert(out.slots.end(), extra_pointers, Symbol::Star);
  return out;
}

namespace {

Machine copy_states(const Machine& m, int pointers) {
  Machine out(pointers);
  for (const auto& name : m.state_names()) out.add_state(name);
  if (m.initial) {
    out.initial = m.initial;
    out.initial->slots.resize(pointers, Symbol::Star);
  }
  return out;
}

std::string fresh_name(const Machine& m, const std::string& base) {
  if (!m.find_state(base)) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + "'" + std::to_string(i);
    if (!m.find_state(candidate)) return candidate;
  }
}

std::vector<Move> single_move(int p, int j, Move mv) {
  std::vector<Move> moves(p, Move::Stay);
  moves[j] = mv;
  return moves;
}

}  // namespace

Transformed one_move_normalize(const Machine& m) {
  const int p = m.pointers();
  Transformed out{copy_states(m, p), 0};
  Machine& n = out.machine;
  const auto& ts = m.transitions();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Transition& t = ts[i];
    if (t.outcome != Outcome::Step || t.moving_count() <= 1) {
      n.add(t);
      continue;
    }
    std::vector<int> movers;
    for (int j = 0; j < p; ++j) {
      if (t.moves[j] != Move::Stay) movers.push_back(j);
    }
    StateId current = t.from;
    for (std::size_t link = 0; link < movers.size(); ++link) {
      const int j = movers[link];
      StateId target = link + 1 == movers.size()
                           ? t.to
                           : n.add_state(fresh_name(n, m.state_name(t.from) + "~t" + std::to_string(i) + "." + std::to_string(link + 1)));
      auto moves = single_move(p, j, t.moves[j]);
      if (link == 0) {
        n.add(step_rule(t.reads, current, moves, target));
      } else {
        for (auto& r : expand_shorthands(SymbolPattern(p, kAny), current, Outcome::Step, moves, target)) n.add(std::move(r));
      }
      current = target;
    }
  }
  return out;
}

Transformed eliminate_stays(const Machine& m) {
  const int p = m.pointers();
  Transformed out{copy_states(m, p), 0};
  Machine& n = out.machine;
  const auto& ts = m.transitions();
  std::optional<StateId> loop_entry;

  auto gadget = [&]() {
    if (!loop_entry) {
      StateId a = n.add_state(fresh_name(n, "loop.a"));
      StateId b = n.add_state(fresh_name(n, "loop.b"));
      for (auto& r : expand_shorthands(SymbolPattern(p, kAny), a, Outcome::Step, single_move(p, 0, Move::Forward), b)) n.add(std::move(r));
      for (auto& r : expand_shorthands(SymbolPattern(p, kAny), b, Outcome::Step, single_move(p, 0, Move::Backward), a)) n.add(std::move(r));
      loop_entry = b;
    }
    return *loop_entry;
  };

  for (const auto& pc : all_pseudo_configurations(m)) {
    const auto& hits = m.matching(pc.slots, pc.state);
    bool has_stay = false;
    for (std::size_t i : hits) has_stay |= ts[i].is_stay_only();
    if (!has_stay) {
      for (std::size_t i : hits) n.add(ts[i]);
      continue;
    }
    // Stay transitions keep the slots, so only the state changes.
    std::vector<std::uint8_t> color(m.state_count(), 0);
    std::vector<StateId> closure;
    bool cycle = false;
    std::function<void(StateId)> visit = [&](StateId q) {
      color[q] = 1;
      closure.push_back(q);
      for (std::size_t i : m.matching(pc.slots, q)) {
        if (!ts[i].is_stay_only()) continue;
        StateId r = ts[i].to;
        if (color[r] == 1) cycle = true;
        else if (color[r] == 0) visit(r);
      }
      color[q] = 2;
    };
    visit(pc.state);
    for (StateId q : closure) {
      const auto& qh = m.matching(pc.slots, q);
      if (qh.empty()) n.add(halt_rule(pc.slots, pc.state, Outcome::Accept));
      for (std::size_t i : qh) {
        if (ts[i].is_stay_only()) continue;
        Transition t = ts[i];
        t.from = pc.state;
        n.add(std::move(t));
      }
    }
    if (cycle) n.add(step_rule(pc.slots, pc.state, single_move(p, 0, Move::Forward), gadget()));
  }
  return out;
}

Transformed normalize_for_encoding(const Machine& m) {
  Transformed a = one_move_normalize(m);
  Transformed b = eliminate_stays(a.machine);
  b.extra_pointers = a.extra_pointers;
  return b;
}

ClockParameters clock_parameters(const Machine& m) {
  const int p = m.pointers();
  double configs = std::pow(3.0, p) * static_cast<double>(m.state_count());
  ClockParameters cp;
  cp.d = p + static_cast<int>(std::ceil(std::log2(configs) - 1e-12));
  cp.clocks = cp.d + 1;
  return cp;
}

Transformed make_acyclic(const Machine& m) {
  const int p = m.pointers();
  const ClockParameters cp = clock_parameters(m);
  const int clocks = cp.clocks;
  const int total = p + clocks;
  const StateId q_count = static_cast<StateId>(m.state_count());

  Transformed out{copy_states(m, total), clocks};
  Machine& n = out.machine;
  for (StateId q = 0; q < q_count; ++q) n.add_state(fresh_name(n, m.state_name(q) + "@run"));
  auto running = [&](StateId q) { return q_count + q; };

  const BinaryWord empty;
  const auto clock_values = expand_pattern(SymbolPattern(clocks, kAny));

  for (const auto& pc : all_pseudo_configurations(m)) {
    const auto& hits = m.matching(pc.slots, pc.state);
    if (hits.empty()) continue;
    std::vector<const Transition*> steps, halts;
    for (std::size_t i : hits) {
      const Transition& t = m.transitions()[i];
      (t.outcome == Outcome::Step ? steps : halts).push_back(&t);
    }
    std::optional<Verdict> on_empty;
    if (!steps.empty()) on_empty = run(m, pc, empty).verdict;

    for (const auto& cl : clock_values) {
      std::vector<Symbol> reads = pc.slots;
      reads.insert(reads.end(), cl.begin(), cl.end());
      int stars = 0, last_star = -1;
      for (int a = 0; a < clocks; ++a) {
        if (cl[a] == Symbol::Star) {
          ++stars;
          last_star = a;
        }
      }
      for (StateId from : {pc.state, running(pc.state)}) {
        const bool fresh = from == pc.state;
        for (const Transition* t : halts) n.add(halt_rule(reads, from, t->outcome));
        if (steps.empty()) continue;

        std::vector<int> ticks;  // clock indices that advance with this step
        if (stars == clocks) {
          if (!fresh) {
            if (*on_empty != Verdict::Accept) n.add(halt_rule(reads, from, Outcome::Reject));
            continue;
          }
          for (int a = 0; a < clocks; ++a) ticks.push_back(a);
        } else if (stars == 0) {
          ticks = {0};
        } else if (stars == 1 && last_star + 1 < clocks) {
          ticks = {last_star, last_star + 1};
        } else {
          n.add(halt_rule(reads, from, Outcome::Reject));
          continue;
        }
        for (const Transition* t : steps) {
          std::vector<Move> moves = t->moves;
          moves.resize(total, Move::Stay);
          for (int a : ticks) moves[p + a] = Move::Forward;
          n.add(step_rule(reads, from, std::move(moves), running(t->to)));
        }
      }
    }
  }
  return out;
}

StateId add_sensing_routine(Machine& m, int j1, int j2, int j3, StateId on_equal, StateId on_unequal,
                            const std::string& prefix) {
  const int p = m.pointers();
  if (j1 < 1 || j2 < 1 || j3 < 1 || j1 > p || j2 > p || j3 > p || j3 == j1 || j3 == j2 || j1 == j2) {
    throw std::invalid_argument("sensing routine needs three distinct pointers within range");
  }
  const int a = j1 - 1, b = j2 - 1, c = j3 - 1;
  StateId entry = m.add_state(fresh_name(m, prefix + ".entry"));
  StateId count = m.add_state(fresh_name(m, prefix + ".count"));
  StateId back_eq = m.add_state(fresh_name(m, prefix + ".restore.eq"));
  StateId back_ne = m.add_state(fresh_name(m, prefix + ".restore.ne"));

  std::vector<Move> out(p, Move::Stay), in(p, Move::Stay), hold(p, Move::Stay);
  out[a] = out[b] = Move::Backward;
  out[c] = Move::Forward;
  in[a] = in[b] = Move::Forward;
  in[c] = Move::Backward;

  auto pattern = [&](std::vector<Symbol> sa, std::vector<Symbol> sb, std::vector<Symbol> sc) {
    SymbolPattern pat(p, kAny);
    pat[a] = std::move(sa);
    pat[b] = std::move(sb);
    pat[c] = std::move(sc);
    return pat;
  };
  auto add_all = [&](const SymbolPattern& pat, StateId from, const std::vector<Move>& mv, StateId to) {
    for (auto& t : expand_shorthands(pat, from, Outcome::Step, mv, to)) m.add(std::move(t));
  };
  const std::vector<Symbol> star = {Symbol::Star};

  // Both already on ⋆, exactly one, or neither.
  add_all(pattern(star, star, kAny), entry, hold, on_equal);
  add_all(pattern(star, kBit, kAny), entry, hold, on_unequal);
  add_all(pattern(kBit, star, kAny), entry, hold, on_unequal);
  add_all(pattern(kBit, kBit, kAny), entry, out, count);

  add_all(pattern(star, star, kAny), count, in, back_eq);
  add_all(pattern(star, kBit, kAny), count, in, back_ne);
  add_all(pattern(kBit, star, kAny), count, in, back_ne);
  add_all(pattern(kBit, kBit, kAny), count, out, count);

  for (auto [state, target] : {std::pair{back_eq, on_equal}, std::pair{back_ne, on_unequal}}) {
    add_all(pattern(kAny, kAny, star), state, hold, target);
    add_all(pattern(kAny, kAny, kBit), state, in, state);
  }
  return entry;
}

}  // namespace goi
