#pragma once

#include "tempered/mold.hpp"
#include "tempered/render.hpp"
#include "tempered/semigroups.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tempered {

// Proof data that the discretization of the infinite tail is all integers.
struct TruncationCertificate {
  // m (mu_{i+1} - mu_i) < 1 for every i >= spacing_start.
  std::size_t spacing_start = 0;
  // Last index whose rounded value is computed explicitly. At least
  // spacing_start, and far enough that m (mu_{i+2} - mu_i) < 1 for some
  // i + 2 <= prefix_end, which forces a collapse inside the prefix.
  std::size_t prefix_end = 0;
  // Every integer >= conductor lies in every discretization: ceil(m mu_N).
  Element conductor = 0;
  std::string spacing_witness;
};

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <ExactValue T>
TruncationCertificate truncation_certificate(const Mold<T>& mold, unsigned long m) {
  if (m == 0) {
    throw std::invalid_argument("multiplicity must be positive");
  }
  auto n = mold.spacing_start(m);
  if (!n) {
    throw TruncationError("mold " + mold.id() + " has no certifiable spacing bound");
  }
  TruncationCertificate cert;
  cert.spacing_start = std::max<std::size_t>(*n, 1);
  const T scaled_n = scale(mold.element(cert.spacing_start), m);
  cert.conductor = to_int64(ceil_of(scaled_n));
  if (mold.kind() == MoldKind::metric) {
    cert.spacing_witness = "(n+2)^" + std::to_string(m) + " < 2(n+1)^" + std::to_string(m) +
                           " from n = " + std::to_string(cert.spacing_start);
  } else {
    cert.spacing_witness = std::to_string(m) +
                           " * (max spacing in each period from index " +
                           std::to_string(cert.spacing_start) + ") < 1";
  }
  const ExactRational one(1);
  std::size_t i = 0;
  while (!spacing_below(scale(mold.element(i), m), scale(mold.element(i + 2), m), one)) {
    ++i;
  }
  cert.prefix_end = std::max(cert.spacing_start, i + 2);
  return cert;
}

// Fractional-part breakpoint: frac(value), carried by one representative
// scaled element m mu_index (the smallest index of its merge class).
template <ExactValue T>
struct FracPoint {
  T value;
  std::size_t index = 0;
};

template <ExactValue T>
std::string render_frac(const FracPoint<T>& b, unsigned places) {
  return render_enclosed(approximate_frac(b.value), places);
}

struct DiscretizedSemigroup {
  std::string mold_id;
  unsigned long m = 0;
  std::string alpha;  // description of the rounding parameter or interval
  NumericalSemigroup set;
  // round(m mu_i) for i = 0..prefix_end.
  std::vector<Element> rounded;
  TruncationCertificate certificate;
};

namespace detail {

inline NumericalSemigroup assemble_set(const std::vector<Element>& rounded,
                                       const TruncationCertificate& cert) {
  for (std::size_t i = cert.spacing_start; i + 1 < rounded.size(); ++i) {
    if (rounded[i + 1] - rounded[i] > 1) {
      throw std::logic_error("truncation certificate violated at index " + std::to_string(i));
    }
  }
  return NumericalSemigroup(rounded, rounded[cert.spacing_start]);
}

}  // namespace detail

// Discretization at an explicit rational alpha in [0, 1].
template <ExactValue T>
DiscretizedSemigroup discretize(const Mold<T>& mold, unsigned long m, const ExactRational& alpha) {
  require_alpha_in_unit_interval(alpha);
  DiscretizedSemigroup d;
  d.mold_id = mold.id();
  d.m = m;
  d.alpha = render_natural(alpha, 6);
  d.certificate = truncation_certificate(mold, m);
  d.rounded.reserve(d.certificate.prefix_end + 1);
  for (std::size_t i = 0; i <= d.certificate.prefix_end; ++i) {
    d.rounded.push_back(to_int64(floor_alpha(scale(mold.element(i), m), alpha)));
  }
  d.set = detail::assemble_set(d.rounded, d.certificate);
  return d;
}

// Rounding parameter range on which a discretization is constant: either the
// single point {0} (pure ceiling) or (lower, upper] with lower/upper
// fractional parts of scaled elements (nullopt meaning 0, resp. 1).
template <ExactValue T>
struct AlphaInterval {
  std::string mold_id;
  unsigned long m = 0;
  std::size_t position = 0;  // index within its sweep
  bool ceiling_point = false;
  std::optional<FracPoint<T>> lower;
  std::optional<FracPoint<T>> upper;
  ExactRational representative;  // exact rational alpha inside the interval
  DiscretizedSemigroup discretization;
  CollapseRecord collapse;

  const NumericalSemigroup& set() const { return discretization.set; }

  // Decimal description such as "(0.5836, 0.8328]" or "[0, 0]".
  std::string str(unsigned places = 4) const {
    if (ceiling_point) {
      return "[0, 0]";
    }
    std::string lo = lower ? render_frac(*lower, places) : std::string("0");
    std::string hi = upper ? render_frac(*upper, places) : std::string("1");
    return "(" + lo + ", " + hi + "]";
  }

  // Exact description, e.g. "(frac(12*log2(5)), 1]".
  std::string exact_str() const {
    if (ceiling_point) {
      return "[0, 0]";
    }
    std::string lo = lower ? "frac(" + exact_form(lower->value) + ")" : std::string("0");
    std::string hi = upper ? "frac(" + exact_form(upper->value) + ")" : std::string("1");
    return "(" + lo + ", " + hi + "]";
  }

  bool contains(const ExactRational& alpha) const {
    if (ceiling_point) {
      return alpha.sign() == 0;
    }
    bool above = lower ? compare_frac_to(lower->value, alpha) < 0 : alpha.sign() > 0;
    bool below = upper ? compare_frac_to(upper->value, alpha) >= 0 : !(ExactRational(1) < alpha);
    return above && below;
  }
};

template <ExactValue T>
struct AlphaSweep {
  std::string mold_id;
  unsigned long m = 0;
  TruncationCertificate certificate;
  std::vector<T> scaled;                 // m mu_i for i <= prefix_end
  std::vector<FracPoint<T>> breakpoints;  // strictly increasing, distinct, in (0, 1)
  std::vector<AlphaInterval<T>> intervals;
};

namespace detail {

// A rational strictly between frac(lo) and frac(hi) (nullopt = 0 / 1).
template <ExactValue T>
ExactRational rational_between(const std::optional<FracPoint<T>>& lo,
                               const std::optional<FracPoint<T>>& hi) {
  CertifiedApprox a = lo ? approximate_frac(lo->value) : CertifiedApprox::exact(ExactRational(0));
  CertifiedApprox b = hi ? approximate_frac(hi->value) : CertifiedApprox::exact(ExactRational(1));
  while (!(a.upper() < b.lower())) {
    a.refine();
    b.refine();
  }
  return shortest_decimal_between(a.upper(), b.lower());
}

}  // namespace detail

template <ExactValue T>
AlphaSweep<T> alpha_sweep(const Mold<T>& mold, unsigned long m) {
  AlphaSweep<T> sweep;
  sweep.mold_id = mold.id();
  sweep.m = m;
  sweep.certificate = truncation_certificate(mold, m);
  const std::size_t H = sweep.certificate.prefix_end;
  sweep.scaled.reserve(H + 1);
  for (std::size_t i = 0; i <= H; ++i) {
    sweep.scaled.push_back(scale(mold.element(i), m));
  }
  // Sort non-integral scaled values by fractional part, merging exact ties.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i <= H; ++i) {
    if (!is_integer(sweep.scaled[i])) {
      order.push_back(i);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return compare_frac(sweep.scaled[x], sweep.scaled[y]) < 0;
  });
  std::vector<std::size_t> rank(H + 1, 0);  // 0 for integers
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (sweep.breakpoints.empty() ||
        compare_frac(sweep.breakpoints.back().value, sweep.scaled[i]) != 0) {
      sweep.breakpoints.push_back(FracPoint<T>{sweep.scaled[i], i});
    } else if (i < sweep.breakpoints.back().index) {
      sweep.breakpoints.back().index = i;
    }
    rank[i] = sweep.breakpoints.size();
  }
  std::vector<BigInt> floors(H + 1);
  for (std::size_t i = 0; i <= H; ++i) {
    floors[i] = floor_of(sweep.scaled[i]);
  }
  const std::size_t K = sweep.breakpoints.size();
  // Interval 0 is the ceiling point; interval j+1 is (b_j, b_{j+1}], whose
  // rounding floors exactly the elements with rank <= j.
  for (std::size_t pos = 0; pos <= K + 1; ++pos) {
    AlphaInterval<T> iv;
    iv.mold_id = mold.id();
    iv.m = m;
    iv.position = pos;
    iv.ceiling_point = pos == 0;
    const std::size_t j = pos == 0 ? 0 : pos - 1;
    if (pos > 0) {
      if (j > 0) {
        iv.lower = sweep.breakpoints[j - 1];
      }
      if (j < K) {
        iv.upper = sweep.breakpoints[j];
      }
      iv.representative = detail::rational_between(iv.lower, iv.upper);
    } else {
      iv.representative = ExactRational(0);
    }
    DiscretizedSemigroup& d = iv.discretization;
    d.mold_id = mold.id();
    d.m = m;
    d.certificate = sweep.certificate;
    d.rounded.reserve(H + 1);
    for (std::size_t i = 0; i <= H; ++i) {
      bool integral = rank[i] == 0;
      bool down = integral || (pos > 0 && rank[i] <= j);
      BigInt v = down ? floors[i] : BigInt(floors[i] + 1);
      d.rounded.push_back(to_int64(v));
    }
    d.set = detail::assemble_set(d.rounded, d.certificate);
    d.alpha = iv.str();
    auto c = collapse_of_rounded(d.rounded);
    if (!c) {
      throw std::logic_error("no collapse inside the certified prefix");
    }
    iv.collapse = *c;
    sweep.intervals.push_back(std::move(iv));
  }
  return sweep;
}

// Position of the interval containing alpha.
template <ExactValue T>
std::size_t locate(const AlphaSweep<T>& sweep, const ExactRational& alpha) {
  require_alpha_in_unit_interval(alpha);
  if (alpha.sign() == 0) {
    return 0;
  }
  // First breakpoint b with alpha <= b.
  auto it = std::partition_point(
      sweep.breakpoints.begin(), sweep.breakpoints.end(),
      [&](const FracPoint<T>& b) { return compare_frac_to(b.value, alpha) < 0; });
  return 1 + static_cast<std::size_t>(it - sweep.breakpoints.begin());
}

template <ExactValue T>
CollapseRecord collapse(const AlphaInterval<T>& interval) {
  return interval.collapse;
}

template <ExactValue T>
EvenFilterVerdict even_filterable_semigroup(const AlphaInterval<T>& interval) {
  return even_filterable_semigroup(interval.set(), interval.collapse.kappa);
}

inline SemigroupVerdict verify_semigroup(const DiscretizedSemigroup& candidate) {
  return verify_semigroup(candidate.set);
}

}  // namespace tempered
