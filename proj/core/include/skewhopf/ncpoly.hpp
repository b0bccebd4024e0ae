#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "skewhopf/rational.hpp"
#include "skewhopf/word.hpp"

namespace skewhopf {

/// Element of the free algebra over the rationals: a finite map from words to
/// nonzero coefficients, kept in WordLess order.
class NCPoly {
 public:
  using TermMap = std::map<Word, Rational, WordLess>;

  NCPoly() = default;
  NCPoly(const Word& w, const Rational& c = 1);  // NOLINT(google-explicit-constructor)
  explicit NCPoly(const Letter& l) : NCPoly(Word(l)) {}

  static NCPoly one() { return NCPoly(Word{}); }
  static NCPoly constant(const Rational& c) { return NCPoly(Word{}, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Length of the longest support word; 0 for the zero polynomial.
  std::size_t degree() const;
  Rational coefficient(const Word& w) const;
  /// Largest support word in WordLess order. Requires !is_zero().
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  void add_term(const Word& w, const Rational& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  NCPoly operator-() const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  TermMap terms_;
};

/// Free-algebra product (concatenation, extended bilinearly). No rewriting.
NCPoly multiply(const NCPoly& p, const NCPoly& q);
inline NCPoly operator*(const NCPoly& p, const NCPoly& q) { return multiply(p, q); }

template <std::size_t N>
struct TensorKeyLess {
  bool operator()(const std::array<Word, N>& a, const std::array<Word, N>& b) const {
    WordLess less;
    for (std::size_t k = 0; k < N; ++k) {
      if (less(a[k], b[k])) return true;
      if (less(b[k], a[k])) return false;
    }
    return false;
  }
};

/// Rational linear combination of N-fold tensors of words.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Word, N>;
  using TermMap = std::map<Key, Rational, TensorKeyLess<N>>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  TermMap terms_;
};

using TensorPoly = Tensor<2>;
using Tensor3 = Tensor<3>;

}  // namespace skewhopf
