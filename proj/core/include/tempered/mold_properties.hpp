#pragma once

#include "tempered/mold.hpp"
#include "tempered/render.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace tempered {

enum class MoldProperty { mold_axioms, metric, fractal, even_filterable, closure };
enum class Verdict { holds_on_prefix, fails };

std::string to_string(MoldProperty p);
std::string to_string(Verdict v);

struct Witness {
  std::vector<std::size_t> indices;
  std::vector<std::string> values;  // exact forms of the values involved
  std::string detail;
};

struct PropertyReport {
  MoldProperty property = MoldProperty::mold_axioms;
  Verdict verdict = Verdict::holds_on_prefix;
  std::optional<Witness> witness;
  std::size_t prefix_bound = 0;

  bool holds() const { return verdict == Verdict::holds_on_prefix; }
};

namespace detail {

inline PropertyReport holds(MoldProperty p, std::size_t bound) {
  return PropertyReport{p, Verdict::holds_on_prefix, std::nullopt, bound};
}

inline PropertyReport fails(MoldProperty p, std::size_t bound, Witness w) {
  return PropertyReport{p, Verdict::fails, std::move(w), bound};
}

}  // namespace detail

// mu_0 = 0, mu_1 = 1, strictly increasing on [0, bound], and the largest
// spacing among the last half of the prefix is below epsilon.
template <ExactValue T>
PropertyReport check_mold_axioms(const Mold<T>& mold, std::size_t bound,
                                 const ExactRational& epsilon = ExactRational(BigInt(1), BigInt(10))) {
  const auto xs = mold.prefix(bound + 1);
  if (!(xs[0] == from_integer<T>(0))) {
    return detail::fails(MoldProperty::mold_axioms, bound,
                         Witness{{0}, {exact_form(xs[0])}, "mu_0 is not 0"});
  }
  if (bound >= 1 && !(xs[1] == from_integer<T>(1))) {
    return detail::fails(MoldProperty::mold_axioms, bound,
                         Witness{{1}, {exact_form(xs[1])}, "mu_1 is not 1 (not normalized)"});
  }
  for (std::size_t i = 1; i <= bound; ++i) {
    if (!(xs[i - 1] < xs[i])) {
      return detail::fails(MoldProperty::mold_axioms, bound,
                           Witness{{i - 1, i},
                                   {exact_form(xs[i - 1]), exact_form(xs[i])},
                                   "sequence is not strictly increasing"});
    }
  }
  for (std::size_t i = std::max<std::size_t>(1, bound / 2); i <= bound; ++i) {
    if (!spacing_below(xs[i - 1], xs[i], epsilon)) {
      return detail::fails(MoldProperty::mold_axioms, bound,
                           Witness{{i - 1, i},
                                   {exact_form(xs[i - 1]), exact_form(xs[i])},
                                   "spacing not below " + epsilon.str() + " at the end of the prefix"});
    }
  }
  return detail::holds(MoldProperty::mold_axioms, bound);
}

// mu_{ab-1} == mu_{a-1} + mu_{b-1} for all 2 <= a <= b with ab - 1 <= bound.
template <ExactValue T>
PropertyReport check_metric(const Mold<T>& mold, std::size_t bound) {
  const auto xs = mold.prefix(bound + 1);
  for (std::size_t a = 2; a * a - 1 <= bound; ++a) {
    for (std::size_t b = a; a * b - 1 <= bound; ++b) {
      T sum = xs[a - 1] + xs[b - 1];
      if (!(xs[a * b - 1] == sum)) {
        return detail::fails(
            MoldProperty::metric, bound,
            Witness{{a, b, a * b - 1},
                    {exact_form(xs[a - 1]), exact_form(xs[b - 1]), exact_form(xs[a * b - 1])},
                    "mu_" + std::to_string(a * b - 1) + " != mu_" + std::to_string(a - 1) +
                        " + mu_" + std::to_string(b - 1)});
      }
    }
  }
  return detail::holds(MoldProperty::metric, bound);
}

// For all i <= j < count, mu_i + mu_j is an element of the mold (membership
// decided exactly by the mold's index function).
template <ExactValue T>
PropertyReport check_closure(const Mold<T>& mold, std::size_t count) {
  const auto xs = mold.prefix(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      T sum = xs[i] + xs[j];
      if (!mold.index_of(sum)) {
        return detail::fails(MoldProperty::closure, count,
                             Witness{{i, j},
                                     {exact_form(xs[i]), exact_form(xs[j]), exact_form(sum)},
                                     "sum " + exact_form(sum) + " is not an element"});
      }
    }
  }
  return detail::holds(MoldProperty::closure, count);
}

// For all even i <= j <= bound, mu_i + mu_j = mu_k with k even. Reports the
// lexicographically smallest violating pair.
template <ExactValue T>
PropertyReport check_even_filterable_mold(const Mold<T>& mold, std::size_t bound) {
  const auto xs = mold.prefix(bound + 1);
  for (std::size_t i = 0; i <= bound; i += 2) {
    for (std::size_t j = i; j <= bound; j += 2) {
      T sum = xs[i] + xs[j];
      auto k = mold.index_of(sum);
      if (!k) {
        return detail::fails(MoldProperty::even_filterable, bound,
                             Witness{{i, j},
                                     {exact_form(xs[i]), exact_form(xs[j]), exact_form(sum)},
                                     "sum is not an element"});
      }
      if (*k % 2 != 0) {
        return detail::fails(
            MoldProperty::even_filterable, bound,
            Witness{{i, j, *k},
                    {exact_form(xs[i]), exact_form(xs[j]), exact_form(sum)},
                    "mu_" + std::to_string(i) + " + mu_" + std::to_string(j) + " = mu_" +
                        std::to_string(*k) + " has odd index"});
      }
    }
  }
  return detail::holds(MoldProperty::even_filterable, bound);
}

// Closure of a finite strictly increasing list: every pairwise sum not
// exceeding the last element must be in the list.
template <ExactValue T>
PropertyReport check_closure_in_range(const std::vector<T>& xs) {
  const std::size_t n = xs.size();
  if (n == 0) {
    return detail::holds(MoldProperty::closure, 0);
  }
  const T& top = xs.back();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      T sum = xs[i] + xs[j];
      if (top < sum) {
        break;
      }
      if (!std::binary_search(xs.begin(), xs.end(), sum)) {
        return detail::fails(MoldProperty::closure, n - 1,
                             Witness{{i, j},
                                     {exact_form(xs[i]), exact_form(xs[j]), exact_form(sum)},
                                     "sum " + exact_form(sum) + " is not in the generated prefix"});
      }
    }
  }
  return detail::holds(MoldProperty::closure, n - 1);
}

}  // namespace tempered
