#pragma once

#include "tempered/exact_rational.hpp"
#include "tempered/golden_number.hpp"
#include "tempered/log_value.hpp"

#include <functional>
#include <string>
#include <utility>

namespace tempered {

// Rational enclosure [lower, upper] of a real number, refinable on demand.
// The enclosing procedure returns an interval of width at most 2^-bits.
class CertifiedApprox {
 public:
  using Enclose = std::function<std::pair<ExactRational, ExactRational>(unsigned bits)>;

  explicit CertifiedApprox(Enclose enclose, unsigned initial_bits = 16);
  static CertifiedApprox exact(const ExactRational& value);

  const ExactRational& lower() const { return lower_; }
  const ExactRational& upper() const { return upper_; }
  ExactRational width() const { return upper_ - lower_; }
  unsigned bits() const { return bits_; }
  bool is_point() const { return lower_ == upper_; }

  // Strictly shrinks the enclosure (at least halves its width) unless it is
  // already a point.
  void refine();
  // Refines until width < w.
  void refine_below(const ExactRational& w);

  // Enclosure of value + offset.
  CertifiedApprox shifted(const ExactRational& offset) const;

 private:
  Enclose enclose_;
  unsigned bits_;
  ExactRational lower_;
  ExactRational upper_;
};

CertifiedApprox approximate(const ExactRational& x);
CertifiedApprox approximate(const GoldenNumber& x);
CertifiedApprox approximate(const LogValue& x);

// One-shot enclosures of width <= 2^-bits.
std::pair<ExactRational, ExactRational> enclose(const GoldenNumber& x, unsigned bits);
std::pair<ExactRational, ExactRational> enclose(const LogValue& x, unsigned bits);

enum class ProvenOrder { less, equal, greater, inconclusive };

std::string to_string(ProvenOrder o);

// Compares two enclosable values. Equality is only ever reported when both are
// exact integers (or exact rationals); otherwise enclosures are refined until
// they separate or both are narrower than `gap`.
ProvenOrder compare_enclosures(CertifiedApprox x, bool x_exact, CertifiedApprox y, bool y_exact,
                               const ExactRational& gap);

template <class X, class Y>
ProvenOrder cross_compare_values(const X& x, const Y& y, const ExactRational& gap) {
  return compare_enclosures(approximate(x), x.is_integer(), approximate(y), y.is_integer(), gap);
}

// Golden number vs logarithmic value.
ProvenOrder cross_compare(const GoldenNumber& x, const LogValue& y, const ExactRational& gap);

// Orders two values known to be distinct unless both are exact (no gap
// cutoff). Terminates whenever x != y as real numbers.
template <class X, class Y>
std::strong_ordering certified_order(const X& x, const Y& y) {
  CertifiedApprox ax = approximate(x);
  CertifiedApprox ay = approximate(y);
  if (ax.is_point() && ay.is_point()) {
    return ax.lower() <=> ay.lower();
  }
  while (true) {
    if (ax.upper() < ay.lower()) {
      return std::strong_ordering::less;
    }
    if (ax.lower() > ay.upper()) {
      return std::strong_ordering::greater;
    }
    ax.refine();
    ay.refine();
  }
}

}  // namespace tempered
