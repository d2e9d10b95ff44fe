#pragma once

#include <map>
#include <string>

#include "recring/types.hpp"

namespace recring {

// Integer/rational linear combination of words in non-commuting generator
// letters. The empty word denotes the identity transformation.
class NcPolynomial {
 public:
  NcPolynomial() = default;

  static NcPolynomial zero() { return NcPolynomial(); }
  static NcPolynomial constant(const Rat& c);
  static NcPolynomial word(const Word& w, const Rat& coeff = Rat(1));

  const std::map<Word, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the empty word.
  Rat constant_value() const;
  Rat coeff(const Word& w) const;

  NcPolynomial& operator+=(const NcPolynomial& other);
  NcPolynomial& operator-=(const NcPolynomial& other);
  NcPolynomial operator+(const NcPolynomial& other) const;
  NcPolynomial operator-(const NcPolynomial& other) const;
  NcPolynomial operator-() const;
  // Noncommutative product: words concatenate left to right.
  NcPolynomial operator*(const NcPolynomial& other) const;
  NcPolynomial scaled(const Rat& c) const;
  NcPolynomial pow(unsigned exponent) const;

  bool operator==(const NcPolynomial& other) const {
    return terms_ == other.terms_;
  }
  bool operator!=(const NcPolynomial& other) const { return !(*this == other); }
  bool operator<(const NcPolynomial& other) const {
    return terms_ < other.terms_;
  }

  // Canonical form, parseable by the workbench expression grammar,
  // e.g. "1 - 2*s*t + 1/3*t".
  std::string to_string() const;

 private:
  std::map<Word, Rat> terms_;

  void insert(const Word& w, const Rat& c);
};

}  // namespace recring
