#pragma once

#include "tempered/bigint.hpp"
#include "tempered/exact_rational.hpp"

#include <compare>
#include <string>

namespace tempered {

// Exact representation of the real number m * log2(n) for positive integers
// m, n. The value is carried as the integer power X = n^m, so that
// floor(m log2 n) = k  <=>  2^k <= X < 2^(k+1) is read off the bit length, and
// all comparisons reduce to big-integer comparisons. Sums of LogValues
// multiply their powers; such derived values keep (m, n) = (1, X).
class LogValue {
 public:
  LogValue() : LogValue(1, BigInt(1)) {}
  LogValue(unsigned long m, const BigInt& n);

  // log2(power); power must be positive.
  static LogValue of_power(const BigInt& power);

  unsigned long m() const { return m_; }
  const BigInt& n() const { return n_; }
  const BigInt& power() const { return power_; }

  BigInt floor() const { return BigInt(static_cast<unsigned long>(floor_)); }
  long floor_long() const { return floor_; }
  BigInt ceil() const { return is_integer() ? floor() : BigInt(floor() + 1); }
  bool is_integer() const { return is_power_of_two(power_); }

  // k * value, i.e. power^k.
  LogValue scaled(unsigned long k) const;
  // value + k for an integer k >= 0.
  LogValue plus_integer(unsigned long k) const;

  friend LogValue operator+(const LogValue& x, const LogValue& y) {
    return of_power(BigInt(x.power_ * y.power_));
  }

  friend bool operator==(const LogValue& x, const LogValue& y) { return x.power_ == y.power_; }
  friend std::strong_ordering operator<=>(const LogValue& x, const LogValue& y) {
    int c = cmp(x.power_, y.power_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Exact comparison with a rational r = p/q: log2 X vs p/q <=> X^q vs 2^p.
  std::strong_ordering compare(const ExactRational& r) const;

  // frac(x) vs frac(y): X1 * 2^k2 vs X2 * 2^k1.
  static std::strong_ordering compare_frac(const LogValue& x, const LogValue& y);
  // frac(x) vs a rational in [0, 1].
  std::strong_ordering compare_frac(const ExactRational& r) const;

  // "m*log2(n)" style exact form.
  std::string str() const;

 private:
  unsigned long m_;
  BigInt n_;
  BigInt power_;
  long floor_;
};

}  // namespace tempered
