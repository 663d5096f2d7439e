#include "tempered/polynomial.hpp"

#include <algorithm>

namespace tempered {

IntPolynomial::IntPolynomial(long c) {
  if (c != 0) {
    coeffs_.emplace_back(c);
  }
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::variable() {
  return IntPolynomial(std::vector<BigInt>{BigInt(0), BigInt(1)});
}

BigInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
    coeffs_.pop_back();
  }
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) {
    c = -c;
  }
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) {
    coeffs_.resize(o.coeffs_.size());
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] += o.coeffs_[i];
  }
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  return *this += -o;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

GoldenNumber IntPolynomial::evaluate(const GoldenNumber& x) const {
  GoldenNumber acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + GoldenNumber(*it, BigInt(0));
  }
  return acc;
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) {
      continue;
    }
    BigInt mag = sgn(c) < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (sgn(c) < 0) {
        out += "-";
      }
    } else {
      out += sgn(c) < 0 ? "-" : "+";
    }
    if (k == 0 || mag != 1) {
      out += mag.get_str();
    }
    if (k >= 1) {
      out += "p";
    }
    if (k >= 2) {
      out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace tempered
