#pragma once

#include "tempered/certified_approx.hpp"
#include "tempered/exact_rational.hpp"
#include "tempered/golden_number.hpp"
#include "tempered/log_value.hpp"

#include <compare>
#include <concepts>
#include <stdexcept>
#include <string>

namespace tempered {

// Uniform free-function interface over the three exact families.

inline BigInt floor_of(const ExactRational& x) { return x.floor(); }
inline BigInt floor_of(const GoldenNumber& x) { return x.floor(); }
inline BigInt floor_of(const LogValue& x) { return x.floor(); }

inline BigInt ceil_of(const ExactRational& x) { return x.ceil(); }
inline BigInt ceil_of(const GoldenNumber& x) { return x.ceil(); }
inline BigInt ceil_of(const LogValue& x) { return x.ceil(); }

inline bool is_integer(const ExactRational& x) { return x.is_integer(); }
inline bool is_integer(const GoldenNumber& x) { return x.is_integer(); }
inline bool is_integer(const LogValue& x) { return x.is_integer(); }

// m * x.
inline ExactRational scale(const ExactRational& x, unsigned long m) {
  return x * ExactRational(static_cast<long>(m));
}
inline GoldenNumber scale(const GoldenNumber& x, unsigned long m) {
  return x * GoldenNumber(static_cast<long>(m));
}
inline LogValue scale(const LogValue& x, unsigned long m) { return x.scaled(m); }

// frac(x) vs frac(y), exact within one family.
inline std::strong_ordering compare_frac(const ExactRational& x, const ExactRational& y) {
  return x.frac() <=> y.frac();
}
inline std::strong_ordering compare_frac(const GoldenNumber& x, const GoldenNumber& y) {
  return x.frac() <=> y.frac();
}
inline std::strong_ordering compare_frac(const LogValue& x, const LogValue& y) {
  return LogValue::compare_frac(x, y);
}

// frac(x) vs a rational, exact.
inline std::strong_ordering compare_frac_to(const ExactRational& x, const ExactRational& r) {
  return x.frac() <=> r;
}
inline std::strong_ordering compare_frac_to(const GoldenNumber& x, const ExactRational& r) {
  return x.frac().compare(r);
}
inline std::strong_ordering compare_frac_to(const LogValue& x, const ExactRational& r) {
  return x.compare_frac(r);
}

// Enclosure of frac(x).
template <class T>
CertifiedApprox approximate_frac(const T& x) {
  return approximate(x).shifted(-ExactRational(floor_of(x)));
}

// The integer k in family T (k >= 0 for LogValue).
template <class T>
T from_integer(long k);
template <>
inline ExactRational from_integer<ExactRational>(long k) { return ExactRational(k); }
template <>
inline GoldenNumber from_integer<GoldenNumber>(long k) { return GoldenNumber(k); }
template <>
inline LogValue from_integer<LogValue>(long k) {
  if (k < 0) {
    throw std::domain_error("logarithmic values are non-negative");
  }
  return LogValue::of_power(pow2(static_cast<unsigned long>(k)));
}

inline std::string exact_form(const ExactRational& x) { return x.str(); }
inline std::string exact_form(const GoldenNumber& x) { return x.str(); }
inline std::string exact_form(const LogValue& x) { return x.str(); }

template <class T>
concept ExactValue = requires(const T& x, const ExactRational& r, unsigned long m) {
  { floor_of(x) } -> std::same_as<BigInt>;
  { ceil_of(x) } -> std::same_as<BigInt>;
  { is_integer(x) } -> std::same_as<bool>;
  { scale(x, m) } -> std::same_as<T>;
  { compare_frac(x, x) } -> std::same_as<std::strong_ordering>;
  { compare_frac_to(x, r) } -> std::same_as<std::strong_ordering>;
  { approximate(x) } -> std::same_as<CertifiedApprox>;
  { exact_form(x) } -> std::same_as<std::string>;
  { x <=> x } -> std::convertible_to<std::strong_ordering>;
};

// hi - lo < eps, decided exactly (rationals, golden numbers) or by certified
// enclosures (logarithms, where equality with a rational eps < 1 cannot occur
// for distinct values).
template <ExactValue T>
bool spacing_below(const T& lo, const T& hi, const ExactRational& eps) {
  if constexpr (requires { hi - lo; }) {
    return certified_order(hi - lo, eps) < 0;
  } else {
    CertifiedApprox a = approximate(hi);
    CertifiedApprox b = approximate(lo).shifted(eps);
    if (a.is_point() && b.is_point()) {
      return a.lower() < b.lower();
    }
    while (true) {
      if (a.upper() < b.lower()) {
        return true;
      }
      if (a.lower() > b.upper()) {
        return false;
      }
      a.refine();
      b.refine();
    }
  }
}

inline void require_alpha_in_unit_interval(const ExactRational& alpha) {
  if (alpha.sign() < 0 || alpha > ExactRational(1)) {
    throw std::invalid_argument("alpha must lie in [0, 1], got " + alpha.str());
  }
}

// Parameterized rounding: floor(r) if frac(r) < alpha, otherwise ceil(r).
// alpha = 1 floors, alpha = 0 takes the ceiling, alpha = 1/2 rounds half up.
template <ExactValue T>
BigInt floor_alpha(const T& r, const ExactRational& alpha) {
  require_alpha_in_unit_interval(alpha);
  if (is_integer(r)) {
    return floor_of(r);
  }
  return compare_frac_to(r, alpha) < 0 ? floor_of(r) : ceil_of(r);
}

}  // namespace tempered
