#include "tempered/log_value.hpp"

#include "tempered/certified_approx.hpp"

#include <stdexcept>

namespace tempered {

namespace {

std::strong_ordering from_cmp(int c) {
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

LogValue::LogValue(unsigned long m, const BigInt& n) : m_(m), n_(n) {
  if (m == 0 || sgn(n) <= 0) {
    throw std::invalid_argument("LogValue requires m >= 1 and n >= 1");
  }
  power_ = tempered::pow(n, m);
  floor_ = static_cast<long>(bit_length(power_)) - 1;
}

LogValue LogValue::of_power(const BigInt& power) {
  return LogValue(1, power);
}

LogValue LogValue::scaled(unsigned long k) const {
  if (k == 0) {
    return LogValue(1, BigInt(1));
  }
  return LogValue(m_ * k, n_);
}

LogValue LogValue::plus_integer(unsigned long k) const {
  return of_power(BigInt(power_ * pow2(k)));
}

std::strong_ordering LogValue::compare(const ExactRational& r) const {
  // Floors differ: the order is already decided.
  BigInt rf = r.floor();
  BigInt own(floor_);
  if (own != rf) {
    return own < rf ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Same floor k >= 0, so p >= 0: compare X^q with 2^p.
  const BigInt& p = r.numerator();
  const BigInt& q = r.denominator();
  BigInt lhs = tempered::pow(power_, static_cast<unsigned long>(to_int64(q)));
  BigInt rhs = pow2(static_cast<unsigned long>(to_int64(p)));
  return from_cmp(cmp(lhs, rhs));
}

std::strong_ordering LogValue::compare_frac(const LogValue& x, const LogValue& y) {
  BigInt lhs = x.power_ << static_cast<mp_bitcnt_t>(y.floor_);
  BigInt rhs = y.power_ << static_cast<mp_bitcnt_t>(x.floor_);
  return from_cmp(cmp(lhs, rhs));
}

std::strong_ordering LogValue::compare_frac(const ExactRational& r) const {
  // frac = log2(X / 2^k); compare with p/q: X^q vs 2^(kq + p).
  const BigInt& p = r.numerator();
  const BigInt& q = r.denominator();
  if (sgn(p) < 0) {
    return std::strong_ordering::greater;
  }
  if (p >= q) {
    return std::strong_ordering::less;
  }
  if (sgn(p) == 0) {
    return is_integer() ? std::strong_ordering::equal : std::strong_ordering::greater;
  }
  // For 0 < p/q < 1 equality is impossible (X^q = 2^(kq+p) forces q | p), so
  // enclosures separate the two; they avoid raising X to a large power q.
  CertifiedApprox a = approximate(*this).shifted(-ExactRational(floor()));
  while (a.bits() <= 2048) {
    if (a.upper() < r) {
      return std::strong_ordering::less;
    }
    if (r < a.lower()) {
      return std::strong_ordering::greater;
    }
    a.refine();
  }
  unsigned long qq = static_cast<unsigned long>(to_int64(q));
  BigInt lhs = tempered::pow(power_, qq);
  BigInt rhs = pow2(static_cast<unsigned long>(floor_) * qq + static_cast<unsigned long>(to_int64(p)));
  return from_cmp(cmp(lhs, rhs));
}

std::string LogValue::str() const {
  if (power_ == 1) {
    return "0";
  }
  std::string body = "log2(" + n_.get_str() + ")";
  return m_ == 1 ? body : std::to_string(m_) + "*" + body;
}

}  // namespace tempered
