#include "recring/nc_polynomial.hpp"

#include <sstream>

namespace recring {

NcPolynomial NcPolynomial::constant(const Rat& c) { return word("", c); }

NcPolynomial NcPolynomial::word(const Word& w, const Rat& coeff) {
  NcPolynomial p;
  p.insert(w, coeff);
  return p;
}

bool NcPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat NcPolynomial::constant_value() const { return coeff(""); }

Rat NcPolynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NcPolynomial::insert(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& other) {
  for (const auto& [w, c] : other.terms_) insert(w, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& other) {
  for (const auto& [w, c] : other.terms_) insert(w, -c);
  return *this;
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& other) const {
  NcPolynomial r = *this;
  r += other;
  return r;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& other) const {
  NcPolynomial r = *this;
  r -= other;
  return r;
}

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NcPolynomial NcPolynomial::operator*(const NcPolynomial& other) const {
  NcPolynomial r;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : other.terms_) r.insert(wa + wb, ca * cb);
  return r;
}

NcPolynomial NcPolynomial::scaled(const Rat& c) const {
  NcPolynomial r;
  if (c == 0) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
  return r;
}

NcPolynomial NcPolynomial::pow(unsigned exponent) const {
  NcPolynomial r = constant(1);
  for (unsigned i = 0; i < exponent; ++i) r = r * *this;
  return r;
}

std::string NcPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit = (a == 1);
    if (w.empty()) {
      out << a.get_str();
    } else {
      if (!unit) out << a.get_str() << "*";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << "*";
        out << w[i];
      }
    }
  }
  return out.str();
}

}  // namespace recring
