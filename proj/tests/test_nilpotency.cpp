#include <doctest.h>

#include <cstdlib>

#include "goi/batteries.hpp"
#include "goi/catalog.hpp"
#include "goi/machine_io.hpp"
#include "goi/nilpotency.hpp"

using namespace goi;

namespace {

// Φ = 1 ⊗ id ⊗ (q → q): the naive reject that just waits.
Observation naive_reject() {
  Observation o(1, ControlSet({"q"}, 1));
  for (Flavor f : kAllFlavors)
    for (Flavor s : kAllFlavors) o.add({f, {{s}, 0}}, {f, {{s}, 0}}, Permutation::identity(2));
  return o;
}

Machine from_text(const std::string& body, int p = 1) {
  std::string head = "pointers: " + std::to_string(p) + "\nstates: q0 q1\ninitial: ";
  for (int i = 0; i < p; ++i) head += i ? ",⋆" : "⋆";
  return parse_machine(head + ";q0\n" + body);
}

}  // namespace

TEST_CASE("the zero observation is nilpotent of degree 1") {
  Observation zero(1, ControlSet({"q"}, 1));
  for (const auto& w : words_up_to(2)) {
    ProductDynamics dyn(zero, w);
    CHECK(dyn.dimension() == 6 * w.period() * w.period() * 2 * 6);
    NilpotencyResult r = is_nilpotent(dyn);
    CHECK(r.nilpotent);
    CHECK(r.degree == 1);
    CHECK(r.edges == 0);
    CHECK(r.basis_size == dyn.dimension());
    MatrixNilpotency mx = is_nilpotent_matrix(dyn);
    CHECK(mx.nilpotent);
    CHECK(mx.degree == 1);
    CHECK(mx.power_checked);
  }
}

TEST_CASE("the naive reject loops through the integer") {
  Observation o = naive_reject();
  for (const auto& w : words_up_to(2)) {
    ProductDynamics dyn(o, w);
    NilpotencyResult r = is_nilpotent(dyn);
    CHECK_FALSE(r.nilpotent);
    REQUIRE(r.cycle.size() >= 2);
    // Each vector of the witness steps to the next, and the last back to the first.
    for (std::size_t i = 0; i < r.cycle.size(); ++i) {
      const auto& next = r.cycle[(i + 1) % r.cycle.size()];
      bool found = false;
      for (const auto& s : step_product(dyn, r.cycle[i])) found = found || s.vector == next;
      CHECK(found);
    }
    CHECK_FALSE(is_nilpotent_matrix(dyn).nilpotent);
  }
}

TEST_CASE("successors of an unmatched vector are empty") {
  Observation o = naive_reject();
  ProductDynamics dyn(o, parse_word("0"));
  BasisVector v{Flavor::O1, {0, 0}, Permutation::identity(2), {{Flavor::S}, 0}};
  CHECK(step_product(dyn, v).empty());
  v.pi = Flavor::S;
  auto s = step_product(dyn, v);
  REQUIRE(s.size() == 1);
  CHECK(s[0].vector.pi == Flavor::I0);
  CHECK(s[0].coefficient > 0);
}

TEST_CASE("crossval on the small machines") {
  SUBCASE("empty relation") {
    Machine m = from_text("");
    for (const auto& w : words_up_to(3)) {
      CrossvalReport r = crossval(m, *m.initial, w, {true});
      CHECK(r.verdict == Verdict::Accept);
      CHECK(r.nilpotent);
      CHECK(r.consistent);
      CHECK(r.matrix_nilpotent == true);
    }
  }
  SUBCASE("always reject") {
    Machine m = from_text("* q0 -> reject\n* q1 -> reject\n");
    for (const auto& w : words_up_to(3)) {
      CrossvalReport r = crossval(m, *m.initial, w, {true});
      CHECK(r.verdict == Verdict::Reject);
      CHECK_FALSE(r.nilpotent);
      CHECK(r.consistent);
    }
  }
  SUBCASE("first bit is 1") {
    Machine m = from_text("⋆ q0 -> +1 q1\n0 q1 -> reject\n");
    CrossvalReport one = crossval(m, *m.initial, parse_word("1"));
    CHECK(one.verdict == Verdict::Accept);
    CHECK(one.nilpotent);
    CHECK(one.consistent);
    CHECK(one.degree <= one.dimension);
    CrossvalReport zero = crossval(m, *m.initial, parse_word("0"));
    CHECK(zero.verdict == Verdict::Reject);
    CHECK_FALSE(zero.nilpotent);
    CHECK(zero.consistent);
  }
}

TEST_CASE("crossval reports when a machine is not acyclic") {
  Machine m = load(looping_catalog()[1]);  // runs forever: the simulator says DIVERGE
  CrossvalReport r = crossval(m, *m.initial, parse_word("01"));
  CHECK(r.verdict == Verdict::Diverge);
  CHECK_FALSE(r.acyclic_everywhere);
  CHECK_FALSE(r.nilpotent);
  CHECK(r.consistent);  // diverging is not accepting, and the operator is not nilpotent
}

TEST_CASE("the two deciders agree on random observations") {
  std::size_t nilpotent = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Observation o = random_observation(seed);
    for (const auto& w : words_up_to(2)) {
      ProductDynamics dyn(o, w);
      NilpotencyResult a = is_nilpotent(dyn);
      MatrixNilpotency b = is_nilpotent_matrix(dyn);
      CHECK(a.nilpotent == b.nilpotent);
      if (a.nilpotent) {
        CHECK(a.degree == b.degree);
        CHECK(a.degree <= dyn.dimension());
        ++nilpotent;
      }
      ++total;
    }
  }
  CHECK(nilpotent > 0);
  CHECK(nilpotent < total);
}

TEST_CASE("positive scaling keeps the verdict and the degree") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    Observation o = random_observation(seed);
    Observation s = o.scaled(Rational(7, 3));
    for (const auto& w : words_up_to(1)) {
      ProductDynamics a(o, w), b(s, w);
      NilpotencyResult x = is_nilpotent(a), y = is_nilpotent(b);
      CHECK(x.nilpotent == y.nilpotent);
      CHECK(x.degree == y.degree);
    }
  }
}

TEST_CASE("repeated calls are deterministic") {
  Observation o = random_observation(5);
  ProductDynamics dyn(o, parse_word("10"));
  NilpotencyResult a = is_nilpotent(dyn), b = is_nilpotent(dyn);
  CHECK(a.nilpotent == b.nilpotent);
  CHECK(a.degree == b.degree);
  CHECK(a.cycle == b.cycle);
}

TEST_CASE("the capacity cap aborts oversize bases") {
  Observation o = naive_reject();
  ProductDynamics dyn(o, parse_word("0101"));
  CHECK_THROWS_AS(is_nilpotent(dyn, 1000), CapacityError);
  CHECK_THROWS_AS(is_nilpotent_matrix(dyn, 1000), CapacityError);

  setenv("GOI_NILPOTENCY_CAP", "1234", 1);
  CHECK(capacity_from_environment() == 1234);
  setenv("GOI_NILPOTENCY_CAP", "junk", 1);
  CHECK(capacity_from_environment() == kDefaultCapacity);
  unsetenv("GOI_NILPOTENCY_CAP");
  CHECK(capacity_from_environment() == kDefaultCapacity);
}
