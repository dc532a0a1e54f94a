#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "goi/permutation.hpp"

using namespace goi;

namespace {

std::vector<Permutation> all_of(std::size_t n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

GroupAlgebraElement random_element(std::mt19937_64& rng, std::size_t n) {
  auto perms = all_of(n);
  GroupAlgebraElement e;
  for (int i = 0; i < 3; ++i)
    e.add(perms[rng() % perms.size()], Rational(static_cast<long>(1 + rng() % 5), static_cast<long>(1 + rng() % 4)));
  return e;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  Permutation a = Permutation::transposition(3, 0, 1);
  Permutation b = Permutation::transposition(3, 1, 2);
  Permutation ab = a.compose(b);
  CHECK(ab(0) == 1);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 0);
  CHECK(ab.cycles() == "(0 1 2)");
  CHECK(Permutation::identity(4).cycles() == "()");
  CHECK(Permutation::transposition(4, 0, 3).cycles() == "(0 3)");
}

TEST_CASE("group laws on S_4") {
  auto perms = all_of(4);
  CHECK(perms.size() == factorial(4));
  const Permutation e = Permutation::identity(4);
  for (const auto& x : perms) {
    CHECK(x.compose(x.inverse()) == e);
    CHECK(x.inverse().compose(x) == e);
    CHECK(x.compose(e) == x);
    for (const auto& y : perms) {
      for (const auto& z : {perms[5], perms[17]}) CHECK(x.compose(y).compose(z) == x.compose(y.compose(z)));
    }
  }
}

TEST_CASE("ranks are lexicographic and invertible") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto perms = all_of(n);
    for (std::uint64_t r = 0; r < perms.size(); ++r) {
      CHECK(perms[r].rank() == r);
      CHECK(Permutation::unrank(n, r) == perms[r]);
    }
  }
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("group algebra arithmetic") {
  const Permutation id = Permutation::identity(2);
  const Permutation sw = Permutation::transposition(2, 0, 1);
  GroupAlgebraElement a = GroupAlgebraElement::unit(id, Rational(1, 2));
  a.add(sw, Rational(3));
  GroupAlgebraElement sq = a * a;
  // (1/2 + 3s)^2 = 1/4 + 9 + 3s = 37/4 + 3s
  CHECK(sq.terms().at(id) == Rational(37, 4));
  CHECK(sq.terms().at(sw) == Rational(3));
  CHECK_FALSE(a.all_coefficients_one());
  CHECK(GroupAlgebraElement::unit(sw).all_coefficients_one());
  CHECK(a.scaled(Rational(2)).terms().at(id) == Rational(1));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto x = random_element(rng, 3), y = random_element(rng, 3), z = random_element(rng, 3);
    CHECK((x * y) * z == x * (y * z));
    GroupAlgebraElement sum = y;
    sum += z;
    GroupAlgebraElement left = x * y;
    left += x * z;
    CHECK(x * sum == left);
  }
}

TEST_CASE("rationals print and parse") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("x"));
}
