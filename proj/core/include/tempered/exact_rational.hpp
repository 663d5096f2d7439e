#pragma once

#include "tempered/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace tempered {

// Exact rational number, always in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit ExactRational(const BigInt& n) : value_(n) {}
  ExactRational(const BigInt& num, const BigInt& den);
  explicit ExactRational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  // Accepts "7", "-3", "7/12", "0.13", "-1.25", "1e-6", "2.5e3".
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& get_mpq() const { return value_; }

  BigInt floor() const;
  BigInt ceil() const;
  ExactRational frac() const;
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }
  ExactRational& operator+=(const ExactRational& o);
  ExactRational& operator-=(const ExactRational& o);
  ExactRational& operator*=(const ExactRational& o);
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p/q" or "p" when integral.
  std::string str() const;

  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

ExactRational pow(const ExactRational& x, unsigned long e);

}  // namespace tempered
