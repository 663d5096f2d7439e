#pragma once

#include "tempered/exact_value.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tempered {

// f_0(0) = 0; f_l(n) = p f_{l-1}(n) if n < 2^(l-1), else p + q f_{l-1}(n - 2^(l-1)),
// with q = 1 - p. R is any commutative ring constructible from integers
// (GoldenNumber, ExactRational, IntPolynomial, ...).
template <class R>
R f_ell(unsigned ell, std::uint64_t n, const R& p) {
  if (ell >= 64 || n >= (std::uint64_t{1} << ell)) {
    throw std::out_of_range("f_ell: index " + std::to_string(n) + " out of range for level " +
                            std::to_string(ell));
  }
  const R q = R(1) - p;
  // Unroll the recursion from the innermost level: the lowest bit of n is
  // the last branch taken.
  R x = R(0);
  for (unsigned j = 0; j < ell; ++j) {
    if (((n >> j) & 1U) != 0U) {
      x = p + q * x;
    } else {
      x = p * x;
    }
  }
  return x;
}

// First period {1 = 1 + t_0 < 1 + t_1 < ... < 1 + t_{l-1}} of a fractal mold.
template <ExactValue T>
struct PeriodSpec {
  std::vector<T> cuts;

  std::size_t granularity() const { return cuts.size(); }

  void validate() const {
    if (cuts.empty() || !(cuts.front() == from_integer<T>(1))) {
      throw std::invalid_argument("period must start exactly at 1");
    }
    const T two = from_integer<T>(2);
    for (std::size_t s = 0; s < cuts.size(); ++s) {
      if (!(cuts[s] < two)) {
        throw std::invalid_argument("period cuts must lie in [1, 2)");
      }
      if (s > 0 && !(cuts[s - 1] < cuts[s])) {
        throw std::invalid_argument("period cuts must be strictly increasing");
      }
    }
  }

  // Offsets t_s = cut_s - 1 in [0, 1).
  std::vector<T> offsets() const {
    std::vector<T> out;
    out.reserve(cuts.size());
    for (const T& c : cuts) {
      out.push_back(c - from_integer<T>(1));
    }
    return out;
  }

  // Largest proportion t_{s+1} - t_s, with t_l = 1.
  T max_proportion() const {
    std::vector<T> t = offsets();
    t.push_back(from_integer<T>(1));
    T best = t[1] - t[0];
    for (std::size_t s = 1; s + 1 < t.size(); ++s) {
      T d = t[s + 1] - t[s];
      if (best < d) {
        best = d;
      }
    }
    return best;
  }
};

// Given the offsets of period i (sorted, in [0, 1)) and the first-period
// offsets, returns the offsets of period i+1: each subinterval
// [t_r, t_{r+1}] of period i (t_{l_i} = 1) is cut in the same proportions as
// the first period.
template <ExactValue T>
std::vector<T> subdivide_offsets(const std::vector<T>& current, const std::vector<T>& first) {
  std::vector<T> next;
  next.reserve(current.size() * first.size());
  const T one = from_integer<T>(1);
  for (std::size_t r = 0; r < current.size(); ++r) {
    const T& lo = current[r];
    const T hi = r + 1 < current.size() ? current[r + 1] : one;
    const T width = hi - lo;
    for (const T& s : first) {
      next.push_back(lo + s * width);
    }
  }
  return next;
}

// Index of the first element of period ell in a fractal mold of
// granularity l: 1 + l + ... + l^(ell-1).
std::size_t fractal_period_start(std::size_t granularity, std::size_t ell);

}  // namespace tempered
