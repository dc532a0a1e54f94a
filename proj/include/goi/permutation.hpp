// Permutations of {0,...,n-1} and their nonnegative group algebra.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace goi {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t n);
  // Swaps a and b.
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_[x]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  // (*this ∘ other)(x) = (*this)(other(x)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Lexicographic rank in 0..n!-1 and back.
  std::uint64_t rank() const;
  static Permutation unrank(std::size_t n, std::uint64_t rank);

  // "()" for the identity, otherwise e.g. "(0 2)(1 3)".
  std::string cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

std::uint64_t factorial(std::size_t n);

// Finite sums Σ α_g λ(g) with α_g > 0.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  static GroupAlgebraElement unit(const Permutation& g, Rational coefficient = 1);

  void add(const Permutation& g, const Rational& coefficient);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement operator*(const GroupAlgebraElement& other) const;
  GroupAlgebraElement scaled(const Rational& factor) const;

  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool all_coefficients_one() const;

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::map<Permutation, Rational> terms_;
};

}  // namespace goi
