#include <doctest.h>

#include <cmath>

#include "goi/catalog.hpp"
#include "goi/machine_io.hpp"
#include "goi/transforms.hpp"
#include "oracle_sim.hpp"

using namespace goi;

namespace {

const Symbol S = Symbol::Star;

int max_moving(const Machine& m) {
  int most = 0;
  for (const auto& t : m.transitions())
    if (t.outcome == Outcome::Step) most = std::max(most, t.moving_count());
  return most;
}

bool has_stay_only(const Machine& m) {
  for (const auto& t : m.transitions())
    if (t.outcome == Outcome::Step && t.is_stay_only()) return true;
  return false;
}

}  // namespace

TEST_CASE("a two-pointer move becomes a chain through one fresh state") {
  Machine m = parse_machine("pointers: 2\nstates: a b\n⋆ ⋆ a -> +1 -2 b\n");
  Transformed t = one_move_normalize(m);
  CHECK(t.machine.state_count() == 3);
  CHECK(t.machine.transitions().size() == 1 + 9);  // the first move, then any reads for the second
  CHECK(max_moving(t.machine) == 1);
  CHECK(t.machine.transitions()[0].moves == std::vector<Move>{Move::Forward, Move::Stay});
  for (const auto& c : all_pseudo_configurations(m))
    for (const auto& w : words_up_to(3)) CHECK(run(t.machine, t.map(c), w).verdict == run(m, c, w).verdict);
}

TEST_CASE("normalizing a one-move machine changes nothing") {
  for (const auto& e : acyclic_catalog()) {
    Machine m = load(e);
    Transformed t = one_move_normalize(m);
    CHECK(t.machine.transitions() == m.transitions());
    CHECK(t.machine.state_count() == m.state_count());
  }
}

TEST_CASE("normalizations preserve verdicts on random machines") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    int p = 1 + static_cast<int>(rng() % 2);
    Machine m = oracle::random_machine(rng, p, 1 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 8));
    Transformed one = one_move_normalize(m);
    Transformed free = eliminate_stays(m);
    Transformed both = normalize_for_encoding(m);
    CHECK(max_moving(one.machine) <= 1);
    CHECK_FALSE(has_stay_only(free.machine));
    CHECK(max_moving(both.machine) <= 1);
    CHECK_FALSE(has_stay_only(both.machine));
    for (const auto& c : all_pseudo_configurations(m)) {
      for (const auto& w : words_up_to(3)) {
        Verdict want = oracle::simulate(m, c, w);
        CHECK(run(one.machine, one.map(c), w).verdict == want);
        CHECK(run(free.machine, free.map(c), w).verdict == want);
        CHECK(run(both.machine, both.map(c), w).verdict == want);
      }
    }
  }
}

TEST_CASE("a stay cycle still diverges after eliminating stays") {
  Machine m = load(looping_catalog().front());
  Transformed t = eliminate_stays(m);
  CHECK_FALSE(has_stay_only(t.machine));
  for (const auto& w : words_up_to(2)) CHECK(run(t.machine, t.map(*m.initial), w).verdict == Verdict::Diverge);
}

TEST_CASE("clock size") {
  Machine m = parse_machine("pointers: 2\nstates: a b c\n");
  // 3^2 * 3 = 27, ceil(log2 27) = 5.
  CHECK(clock_parameters(m).d == 7);
  CHECK(clock_parameters(m).clocks == 8);
  Machine one = parse_machine("pointers: 1\nstates: a\n");
  CHECK(clock_parameters(one).d == 1 + 2);
  // (k+1)^p 3^p |Q| <= (k+1)^d whenever k >= 1.
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 5; ++q) {
      Machine x(p);
      for (int i = 0; i < q; ++i) x.add_state("s" + std::to_string(i));
      int d = clock_parameters(x).d;
      for (double k1 = 2; k1 <= 9; ++k1) CHECK(std::pow(k1, p) * std::pow(3, p) * q <= std::pow(k1, d));
    }
  }
}

TEST_CASE("the clock turns a self-loop into a rejection") {
  Machine m = load(looping_catalog().front());
  Transformed t = make_acyclic(m);
  CHECK(t.machine.pointers() == m.pointers() + clock_parameters(m).clocks);
  PseudoConfiguration ct = t.map(*m.initial);
  CHECK(ct.slots == std::vector<Symbol>(t.machine.pointers(), S));
  CHECK(ct.state == m.initial->state);
  for (const auto& w : words_up_to(3)) CHECK(run(t.machine, ct, w).verdict == Verdict::Reject);
}

TEST_CASE("the clock leaves a halting machine alone") {
  Machine m = load(acyclic_catalog().front());  // accepts everything
  Transformed t = make_acyclic(m);
  for (const auto& w : words_up_to(3)) CHECK(run(t.machine, t.map(*m.initial), w).verdict == Verdict::Accept);
}

TEST_CASE("the clocked machine halts from every pseudo-configuration") {
  Machine m = load(looping_catalog()[1]);  // one state, one pointer, runs forever
  Transformed t = make_acyclic(m);
  std::size_t runs = 0;
  for (const auto& c : all_pseudo_configurations(t.machine)) {
    for (const auto& w : words_up_to(3)) {
      CHECK(run(t.machine, c, w).verdict != Verdict::Diverge);
      ++runs;
    }
  }
  CHECK(runs == 486 * 15);
}

TEST_CASE("the clock preserves halting verdicts on random one-pointer machines") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Machine m = oracle::random_machine(rng, 1, 1 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 6));
    Transformed t = make_acyclic(m);
    for (const auto& c : all_pseudo_configurations(m)) {
      for (const auto& w : words_up_to(3)) {
        Verdict before = oracle::simulate(m, c, w);
        Verdict after = run(t.machine, t.map(c), w).verdict;
        CHECK(after == (before == Verdict::Diverge ? Verdict::Reject : before));
      }
    }
  }
}

TEST_CASE("sensing whether two pointers coincide") {
  Machine m(3);
  StateId eq = m.add_state("eq"), ne = m.add_state("ne");
  StateId entry = add_sensing_routine(m, 1, 2, 3, eq, ne);
  CHECK(m.state_name(entry) == "sense.entry");
  CHECK_THROWS(add_sensing_routine(m, 1, 1, 3, eq, ne));

  // Drive the deterministic routine until it hands over.
  auto sense = [&](const BinaryWord& w, std::uint32_t x, std::uint32_t y) {
    Configuration c{{x, y, 0}, {w.at(x), w.at(y), S}, entry};
    for (int guard = 0; guard < 100; ++guard) {
      if (c.state == eq || c.state == ne) return c;
      StepResult r = step(m, w, c);
      REQUIRE(r.next.size() == 1);
      c = r.next[0];
    }
    FAIL("routine did not return");
    return c;
  };

  BinaryWord w = parse_word("101");
  Configuration out = sense(w, 2, 2);
  CHECK(out.state == eq);
  CHECK(out.positions == std::vector<std::uint32_t>{2, 2, 0});
  out = sense(w, 1, 2);
  CHECK(out.state == ne);
  CHECK(out.positions == std::vector<std::uint32_t>{1, 2, 0});
  out = sense(w, 0, 0);
  CHECK(out.state == eq);

  for (const auto& word : words_up_to(4)) {
    const auto n = static_cast<std::uint32_t>(word.length() + 1);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        Configuration r = sense(word, x, y);
        CHECK(r.state == (x == y ? eq : ne));
        CHECK(r.positions == std::vector<std::uint32_t>{x, y, 0});
        CHECK(r.slots == std::vector<Symbol>{word.at(x), word.at(y), S});
      }
    }
  }
}
