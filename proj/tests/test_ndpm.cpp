#include <doctest.h>

#include "goi/machine_io.hpp"
#include "goi/ndpm.hpp"
#include "oracle_sim.hpp"

using namespace goi;

namespace {

const Symbol Z = Symbol::Zero, O = Symbol::One, S = Symbol::Star;

Machine one_state(int p) {
  Machine m(p);
  m.add_state("q0");
  m.initial = PseudoConfiguration{std::vector<Symbol>(p, S), 0};
  return m;
}

}  // namespace

TEST_CASE("shorthand expansion") {
  SUBCASE("(*, 0, q) lists (0,0,q), (1,0,q), (⋆,0,q)") {
    auto ts = expand_shorthands({kAny, {Z}}, 0, Outcome::Reject);
    REQUIRE(ts.size() == 3);
    std::set<std::vector<Symbol>> reads;
    for (const auto& t : ts) reads.insert(t.reads);
    CHECK(reads == std::set<std::vector<Symbol>>{{Z, Z}, {O, Z}, {S, Z}});
  }
  CHECK(expand_shorthands({kAny, kAny}, 0, Outcome::Accept).size() == 9);
  CHECK(expand_shorthands({kBit, {S}}, 0, Outcome::Accept).size() == 2);
  CHECK(expand_pattern({kAny, kBit, kAny}).size() == 18);
}

TEST_CASE("an empty relation accepts from anywhere") {
  Machine m = one_state(2);
  for (const auto& w : words_up_to(3)) {
    for (const auto& c : all_pseudo_configurations(m)) CHECK(run(m, c, w).verdict == Verdict::Accept);
  }
  Configuration cfg{{1, 0}, {O, S}, 0};
  StepResult r = step(m, parse_word("10"), cfg);
  CHECK(r.accept);
  CHECK_FALSE(r.reject);
  CHECK(r.next.empty());
}

TEST_CASE("a forward move reads the next cell") {
  Machine m(1);
  StateId q0 = m.add_state("q0"), q1 = m.add_state("q1");
  m.add(step_rule({S}, q0, {Move::Forward}, q1));
  StepResult r = step(m, parse_word("10"), Configuration{{0}, {S}, q0});
  REQUIRE(r.next.size() == 1);
  CHECK(r.next[0] == Configuration{{1}, {O}, q1});
  CHECK_FALSE(r.accept);

  // Backward from ⋆ wraps to the last letter.
  Machine b(1);
  b.add_state("q0");
  b.add(step_rule({S}, 0, {Move::Backward}, 0));
  r = step(b, parse_word("10"), Configuration{{0}, {S}, 0});
  REQUIRE(r.next.size() == 1);
  CHECK(r.next[0] == Configuration{{2}, {Z}, 0});
}

TEST_CASE("a stay keeps a stale slot") {
  Machine m(2);
  m.add_state("q0");
  m.add(step_rule({S, S}, 0, {Move::Stay, Move::Forward}, 0));
  // Pointer 1 sits on a 1 but its slot still says ⋆.
  StepResult r = step(m, parse_word("1"), Configuration{{1, 0}, {S, S}, 0});
  REQUIRE(r.next.size() == 1);
  CHECK(r.next[0].slots == std::vector<Symbol>{S, O});
  CHECK(r.next[0].positions == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("a stay self-loop diverges") {
  Machine m = one_state(3);
  m.add(step_rule({S, S, S}, 0, {Move::Stay, Move::Stay, Move::Stay}, 0));
  for (const auto& w : words_up_to(2)) CHECK(run(m, *m.initial, w).verdict == Verdict::Diverge);
}

TEST_CASE("reject dominates a looping branch") {
  Machine m = one_state(1);
  m.add(step_rule({S}, 0, {Move::Stay}, 0));
  m.add(halt_rule({S}, 0, Outcome::Reject));
  CHECK(run(m, *m.initial, parse_word("0")).verdict == Verdict::Reject);
}

TEST_CASE("a relation spawns every matching outcome") {
  Machine m = one_state(1);
  StateId bad = m.add_state("bad");
  m.add(halt_rule({S}, 0, Outcome::Accept));
  m.add(step_rule({S}, 0, {Move::Forward}, bad));
  m.add(halt_rule({O}, bad, Outcome::Reject));
  CHECK(run(m, *m.initial, parse_word("0")).verdict == Verdict::Accept);
  RunResult r = run(m, *m.initial, parse_word("1"));
  CHECK(r.verdict == Verdict::Reject);
  StepResult s = step(m, parse_word("1"), start_configuration(m, *m.initial));
  CHECK(s.accept);
  CHECK(s.next.size() == 1);
}

TEST_CASE("duplicate transitions are stored once") {
  Machine m = one_state(1);
  m.add(halt_rule({S}, 0, Outcome::Reject));
  m.add(halt_rule({S}, 0, Outcome::Reject));
  CHECK(m.transitions().size() == 1);
  CHECK(m.matching({S}, 0).size() == 1);
  CHECK(m.matching({O}, 0).empty());
  CHECK_THROWS(m.add(halt_rule({S, S}, 0, Outcome::Reject)));
  CHECK_THROWS(m.add(step_rule({S}, 0, {Move::Forward}, 7)));
}

TEST_CASE("pseudo-configurations") {
  Machine m(2);
  m.add_state("a");
  m.add_state("b");
  auto cs = all_pseudo_configurations(m);
  CHECK(cs.size() == 18);
  CHECK(describe(m, PseudoConfiguration{{S, O}, 1}) == "⋆,1;b");
}

TEST_CASE("run agrees with the reference simulator on random machines") {
  std::mt19937_64 rng(42);
  int by_verdict[3] = {0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    int p = 1 + static_cast<int>(rng() % 2);
    int q = 1 + static_cast<int>(rng() % 3);
    Machine m = oracle::random_machine(rng, p, q, 2 + static_cast<int>(rng() % 10));
    for (const auto& c : all_pseudo_configurations(m)) {
      for (const auto& w : words_up_to(3)) {
        Verdict want = oracle::simulate(m, c, w);
        RunResult got = run(m, c, w);
        CHECK(got.verdict == want);
        ++by_verdict[static_cast<int>(want)];
      }
    }
  }
  // The sample covers every verdict.
  CHECK(by_verdict[0] > 0);
  CHECK(by_verdict[1] > 0);
  CHECK(by_verdict[2] > 0);
}

TEST_CASE("adding an accepting transition never turns ACCEPT into REJECT") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Machine m = oracle::random_machine(rng, 1, 2, 4);
    Machine more = m;
    std::vector<Symbol> reads{kAllSymbols[rng() % 3]};
    more.add(halt_rule(reads, static_cast<StateId>(rng() % 2), Outcome::Accept));
    for (const auto& w : words_up_to(3)) {
      if (run(m, *m.initial, w).verdict == Verdict::Accept) CHECK(run(more, *m.initial, w).verdict != Verdict::Reject);
    }
  }
}

TEST_CASE("halts_everywhere sees loops that the start configuration cannot reach") {
  Machine m = one_state(1);
  m.add(halt_rule({S}, 0, Outcome::Accept));
  m.add(step_rule({O}, 0, {Move::Forward}, 0));
  m.add(step_rule({Z}, 0, {Move::Backward}, 0));
  BinaryWord w = parse_word("10");
  CHECK(run(m, *m.initial, w).verdict == Verdict::Accept);
  CHECK_FALSE(halts_everywhere(m, w));  // reading 1 then 0 bounces forever
  CHECK(halts_everywhere(m, parse_word("11")));
}

TEST_CASE("run statistics") {
  Machine m = one_state(1);
  StateId q1 = m.add_state("q1");
  m.add(step_rule({S}, 0, {Move::Forward}, q1));
  m.add(step_rule({O}, q1, {Move::Forward}, q1));
  RunResult r = run(m, *m.initial, parse_word("111"));
  CHECK(r.verdict == Verdict::Accept);
  CHECK(r.stats.configurations == 5);
  CHECK(r.stats.branches == 1);
  CHECK(r.stats.max_depth == 5);
}
