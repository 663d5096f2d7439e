#include "tempered/golden_number.hpp"

namespace tempered {

namespace {

std::strong_ordering from_sign(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

int sign_of_sqrt5_form(const BigInt& u, const BigInt& v) {
  int su = sgn(u);
  int sv = sgn(v);
  if (sv == 0) {
    return su;
  }
  if (su == 0) {
    return sv;
  }
  if (su == sv) {
    return su;
  }
  // Opposite signs: the term with the larger square wins. u^2 == 5 v^2 is
  // impossible for v != 0 because sqrt(5) is irrational.
  BigInt u2 = u * u;
  BigInt v2 = 5 * v * v;
  return u2 > v2 ? su : sv;
}

BigInt floor_sqrt5_multiple(const BigInt& b) {
  int s = sgn(b);
  if (s == 0) {
    return 0;
  }
  BigInt r = isqrt(BigInt(5 * b * b));
  // b*sqrt(5) is irrational, so for negative b the floor lies one below -r.
  return s > 0 ? r : BigInt(-r - 1);
}

int GoldenNumber::sign() const {
  // a + b*tau = ((2a - b) + b*sqrt(5)) / 2.
  return sign_of_sqrt5_form(BigInt(2 * a_ - b_), b_);
}

BigInt GoldenNumber::floor() const {
  if (sgn(b_) == 0) {
    return a_;
  }
  // b*tau = (b*sqrt(5) - b) / 2 and b*sqrt(5) is never an integer.
  return a_ + floor_div(BigInt(floor_sqrt5_multiple(b_) - b_), BigInt(2));
}

BigInt GoldenNumber::ceil() const {
  return is_integer() ? a_ : BigInt(floor() + 1);
}

GoldenNumber GoldenNumber::divided_by_tau() const {
  return *this * GoldenNumber::phi();
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
  // (a1 + b1 t)(a2 + b2 t) = a1 a2 + (a1 b2 + a2 b1) t + b1 b2 t^2, t^2 = 1 - t.
  BigInt bb = b_ * o.b_;
  BigInt na = a_ * o.a_ + bb;
  BigInt nb = a_ * o.b_ + b_ * o.a_ - bb;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y) {
  return from_sign((x - y).sign());
}

std::strong_ordering GoldenNumber::compare(const ExactRational& r) const {
  // q(a + b tau) vs p  <=>  sign of (qa - p) + qb tau.
  const BigInt& p = r.numerator();
  const BigInt& q = r.denominator();
  return from_sign(GoldenNumber(BigInt(q * a_ - p), BigInt(q * b_)).sign());
}

std::string GoldenNumber::str() const {
  if (sgn(b_) == 0) {
    return a_.get_str();
  }
  std::string bt;
  if (b_ == 1) {
    bt = "tau";
  } else if (b_ == -1) {
    bt = "-tau";
  } else {
    bt = b_.get_str() + "*tau";
  }
  if (sgn(a_) == 0) {
    return bt;
  }
  if (sgn(b_) > 0) {
    return a_.get_str() + "+" + bt;
  }
  return a_.get_str() + bt;
}

GoldenNumber golden_add(const GoldenNumber& x, const GoldenNumber& y) {
  return x + y;
}

GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y) {
  return x * y;
}

std::strong_ordering golden_compare(const GoldenNumber& x, const GoldenNumber& y) {
  return x <=> y;
}

GoldenNumber pow(const GoldenNumber& x, unsigned long e) {
  GoldenNumber result(1);
  GoldenNumber base = x;
  while (e > 0) {
    if ((e & 1U) != 0U) {
      result *= base;
    }
    base *= base;
    e >>= 1U;
  }
  return result;
}

}  // namespace tempered
