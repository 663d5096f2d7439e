#pragma once

#include "tempered/fractal.hpp"
#include "tempered/mold.hpp"
#include "tempered/mold_properties.hpp"

#include <cstdint>
#include <vector>

namespace tempered {

// lambda_i = log2(i + 1).
LogValue metric_element(std::size_t i);
// phi_i = l + f_l(i + 1 - 2^l), l = floor(log2(i + 1)), p = tau.
GoldenNumber golden_fractal_element(std::size_t i);
// Element i of the perfect fractal mold of granularity l: period k is
// {k + j / l^k : 0 <= j < l^k}.
ExactRational perfect_fractal_element(std::size_t l, std::size_t i);
// Element i of the quarters mold Q: period k >= 1 is {k + j / 2^(k+1)}.
ExactRational quarters_element(std::size_t i);

// Index of a golden value in F by inverting the f_l recursion exactly.
std::optional<std::size_t> golden_fractal_index(const GoldenNumber& v);

Mold<LogValue> metric_mold();
Mold<GoldenNumber> golden_fractal_mold();
Mold<ExactRational> perfect_fractal_mold(std::size_t l);
Mold<ExactRational> quarters_mold();
Mold<ExactRational> decimal_mold();

// Mold generated period by period from its first period.
template <ExactValue T>
Mold<T> fractal_mold_from_period(const PeriodSpec<T>& spec, std::string id = "fractal");

// Generates at least `count` elements of the fractal mold with the given
// first period and checks closure under addition among all pairs whose sum
// lies inside the generated range.
template <ExactValue T>
struct GeneratedMold {
  std::vector<T> elements;
  std::size_t periods = 0;
  PropertyReport closure;
};

template <ExactValue T>
GeneratedMold<T> generic_fractal_mold(const PeriodSpec<T>& spec, std::size_t count);

// Parses a comma-separated period such as "1,1.5,1.75" or "1,19/12" into a
// rational period. Golden periods are requested with the literal "1,phi".
PeriodSpec<ExactRational> parse_rational_period(const std::string& text);
bool is_golden_period_literal(const std::string& text);

extern template Mold<ExactRational> fractal_mold_from_period(const PeriodSpec<ExactRational>&,
                                                             std::string);
extern template Mold<GoldenNumber> fractal_mold_from_period(const PeriodSpec<GoldenNumber>&,
                                                            std::string);
extern template GeneratedMold<ExactRational> generic_fractal_mold(
    const PeriodSpec<ExactRational>&, std::size_t);
extern template GeneratedMold<GoldenNumber> generic_fractal_mold(const PeriodSpec<GoldenNumber>&,
                                                                 std::size_t);

}  // namespace tempered
