#pragma once

#include "tempered/bigint.hpp"
#include "tempered/exact_rational.hpp"

#include <compare>
#include <string>

namespace tempered {

// Exact element a + b*tau of Z[tau], where tau = (sqrt(5) - 1) / 2 is the
// fractional part of the golden ratio. tau^2 = 1 - tau is applied eagerly, so
// every value is stored in the basis {1, tau}.
class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  GoldenNumber(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenNumber tau() { return {BigInt(0), BigInt(1)}; }
  // phi = 1 + tau.
  static GoldenNumber phi() { return {BigInt(1), BigInt(1)}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  bool is_integer() const { return sgn(b_) == 0; }
  int sign() const;
  BigInt floor() const;
  BigInt ceil() const;
  GoldenNumber frac() const { return *this - GoldenNumber(BigInt(floor()), BigInt(0)); }

  // Multiplicative inverse exists only for units; division by tau is
  // multiplication by 1 + tau.
  GoldenNumber divided_by_tau() const;

  GoldenNumber operator-() const { return {BigInt(-a_), BigInt(-b_)}; }
  GoldenNumber& operator+=(const GoldenNumber& o);
  GoldenNumber& operator-=(const GoldenNumber& o);
  GoldenNumber& operator*=(const GoldenNumber& o);

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y);

  // Compares against a rational exactly.
  std::strong_ordering compare(const ExactRational& r) const;

  // "a+b*tau" style exact form.
  std::string str() const;

 private:
  BigInt a_;
  BigInt b_;
};

// Sign of u + v*sqrt(5) by integer squaring.
int sign_of_sqrt5_form(const BigInt& u, const BigInt& v);

// floor(b * sqrt(5)).
BigInt floor_sqrt5_multiple(const BigInt& b);

GoldenNumber golden_add(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y);
std::strong_ordering golden_compare(const GoldenNumber& x, const GoldenNumber& y);

GoldenNumber pow(const GoldenNumber& x, unsigned long e);

}  // namespace tempered
