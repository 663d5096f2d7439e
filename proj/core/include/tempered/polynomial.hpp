#pragma once

#include "tempered/bigint.hpp"
#include "tempered/golden_number.hpp"

#include <string>
#include <vector>

namespace tempered {

// Univariate polynomial with arbitrary-precision integer coefficients in the
// variable p; coefficient i multiplies p^i. Used to carry the recursion of
// fractal molds symbolically in the cut proportion p.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial variable();

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t i) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  GoldenNumber evaluate(const GoldenNumber& x) const;

  // Human-readable form in descending powers, e.g. "p^3-2p+1".
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace tempered
