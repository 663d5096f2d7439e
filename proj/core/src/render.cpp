#include "tempered/render.hpp"

#include <stdexcept>

namespace tempered {

std::string format_scaled(const BigInt& scaled, unsigned places) {
  bool negative = sgn(scaled) < 0;
  BigInt mag = negative ? BigInt(-scaled) : scaled;
  std::string digits = mag.get_str();
  if (places > 0) {
    if (digits.size() <= places) {
      digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, 1, '.');
  }
  return negative ? "-" + digits : digits;
}

BigInt round_half_even_scaled(const ExactRational& x, unsigned places) {
  ExactRational scaled = x * ExactRational(tempered::pow(BigInt(10), places));
  BigInt fl = scaled.floor();
  ExactRational rem = scaled - ExactRational(fl);
  ExactRational half(BigInt(1), BigInt(2));
  if (rem > half || (rem == half && mpz_odd_p(fl.get_mpz_t()) != 0)) {
    return fl + 1;
  }
  return fl;
}

std::string render_fixed(const ExactRational& x, unsigned places) {
  return format_scaled(round_half_even_scaled(x, places), places);
}

std::string render_enclosed(CertifiedApprox a, unsigned places) {
  if (a.is_point()) {
    return render_fixed(a.lower(), places);
  }
  const ExactRational scale(tempered::pow(BigInt(10), places));
  const ExactRational half(BigInt(1), BigInt(2));
  while (true) {
    BigInt lo = (a.lower() * scale + half).floor();
    BigInt hi = (a.upper() * scale + half).floor();
    if (lo == hi) {
      return format_scaled(lo, places);
    }
    a.refine();
  }
}

std::string render_natural(const ExactRational& x, unsigned places) {
  if (x.is_integer()) {
    return x.numerator().get_str();
  }
  for (unsigned p = 1; p <= places; ++p) {
    ExactRational scaled = x * ExactRational(tempered::pow(BigInt(10), p));
    if (scaled.is_integer()) {
      return format_scaled(scaled.numerator(), p);
    }
  }
  return render_fixed(x, places);
}

ExactRational shortest_decimal_between(const ExactRational& lo, const ExactRational& hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("empty interval");
  }
  for (unsigned p = 0;; ++p) {
    BigInt scale = tempered::pow(BigInt(10), p);
    // Smallest multiple of 10^-p strictly above lo.
    BigInt n = (lo * ExactRational(scale)).floor() + 1;
    ExactRational candidate(n, scale);
    if (candidate < hi) {
      return candidate;
    }
  }
}

}  // namespace tempered
