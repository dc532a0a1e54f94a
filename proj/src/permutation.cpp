#include "goi/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace goi {

std::string to_string(const Rational& r) {
  return r.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
  boost::multiprecision::cpp_int num(text.substr(0, slash)), den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  auto v = identity(n).images_;
  std::swap(v.at(a), v.at(b));
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<std::uint8_t> v(size());
  for (std::size_t x = 0; x < size(); ++x) v[x] = images_[other.images_[x]];
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> v(size());
  for (std::size_t x = 0; x < size(); ++x) v[images_[x]] = static_cast<std::uint8_t>(x);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t Permutation::rank() const {
  const std::size_t n = size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += images_[j] < images_[i];
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

Permutation Permutation::unrank(std::size_t n, std::uint64_t rank) {
  std::vector<std::uint8_t> pool(n), out;
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t f = factorial(n - 1 - i);
    std::size_t at = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool.at(at));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return Permutation(std::move(out));
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> done(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      out += (first ? "" : " ") + std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupAlgebraElement GroupAlgebraElement::unit(const Permutation& g, Rational coefficient) {
  GroupAlgebraElement e;
  e.add(g, coefficient);
  return e;
}

void GroupAlgebraElement::add(const Permutation& g, const Rational& coefficient) {
  if (coefficient < 0) throw std::invalid_argument("group algebra coefficients must be nonnegative");
  if (coefficient == 0) return;
  terms_[g] += coefficient;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  for (const auto& [g, a] : other.terms_) add(g, a);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& other) const {
  GroupAlgebraElement out;
  for (const auto& [g, a] : terms_)
    for (const auto& [h, b] : other.terms_) out.add(g.compose(h), a * b);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& factor) const {
  GroupAlgebraElement out;
  for (const auto& [g, a] : terms_) out.add(g, a * factor);
  return out;
}

bool GroupAlgebraElement::all_coefficients_one() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second == 1; });
}

}  // namespace goi
