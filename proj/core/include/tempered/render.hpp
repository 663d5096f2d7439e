#pragma once

#include "tempered/bigint.hpp"
#include "tempered/exact_rational.hpp"
#include "tempered/exact_value.hpp"

#include <string>

namespace tempered {

// Formats round(N / 10^places) given the already-rounded integer N.
std::string format_scaled(const BigInt& scaled, unsigned places);

// Round-half-even to `places` decimals of an exact rational.
BigInt round_half_even_scaled(const ExactRational& x, unsigned places);

std::string render_fixed(const ExactRational& x, unsigned places);

// Nearest rounding of an irrational value given by its enclosure: there are
// no ties, so the enclosure is refined until both ends round alike.
std::string render_enclosed(CertifiedApprox a, unsigned places);

template <ExactValue T>
std::string render_fixed(const T& x, unsigned places) {
  if (is_integer(x)) {
    return render_fixed(ExactRational(floor_of(x)), places);
  }
  return render_enclosed(approximate(x), places);
}

// Integers bare; rationals whose decimal expansion terminates within
// `places` digits in shortest form; everything else fixed to `places`.
std::string render_natural(const ExactRational& x, unsigned places);

template <ExactValue T>
std::string render_natural(const T& x, unsigned places) {
  if (is_integer(x)) {
    return floor_of(x).get_str();
  }
  return render_fixed(x, places);
}

// Shortest decimal strictly inside the open interval (lo, hi), lo < hi.
ExactRational shortest_decimal_between(const ExactRational& lo, const ExactRational& hi);

}  // namespace tempered
