#include "doctest.h"

#include "tempered/discretize.hpp"
#include "tempered/mold_builders.hpp"

#include <random>

using namespace tempered;

namespace {

template <ExactValue T>
void check_sweep_invariants(const Mold<T>& mold, unsigned long m, std::mt19937_64& rng) {
  const auto sweep = alpha_sweep(mold, m);
  INFO(mold.id() << " m=" << m);
  const auto& cert = sweep.certificate;
  REQUIRE(cert.prefix_end >= cert.spacing_start);
  CHECK(sweep.intervals.size() == sweep.breakpoints.size() + 2);
  CHECK(sweep.intervals.size() <= cert.prefix_end + 2);
  for (std::size_t k = 1; k < sweep.breakpoints.size(); ++k) {
    REQUIRE(compare_frac(sweep.breakpoints[k - 1].value, sweep.breakpoints[k].value) < 0);
  }
  for (const auto& iv : sweep.intervals) {
    REQUIRE(iv.contains(iv.representative));
    REQUIRE(locate(sweep, iv.representative) == iv.position);
    REQUIRE(discretize(mold, m, iv.representative).set == iv.set());
    CHECK(iv.set().multiplicity() == static_cast<Element>(m));
  }
  // Random exact alphas land in an interval whose set they reproduce.
  std::uniform_int_distribution<long> num(0, 100000);
  for (int k = 0; k < 40; ++k) {
    const ExactRational alpha(BigInt(num(rng)), BigInt(100000));
    const auto& iv = sweep.intervals[locate(sweep, alpha)];
    REQUIRE(iv.contains(alpha));
    REQUIRE(discretize(mold, m, alpha).set == iv.set());
  }
}

}  // namespace

TEST_CASE("truncation certificates") {
  const auto L = metric_mold();
  const auto c = truncation_certificate(L, 12);
  CHECK(c.spacing_start == 16);
  CHECK(c.prefix_end >= 16);
  CHECK(c.conductor == 50);  // ceil(12 log2 17)
  const auto F = golden_fractal_mold();
  CHECK(truncation_certificate(F, 12).spacing_start == 63);
  CHECK_THROWS_AS(truncation_certificate(F, 0), std::invalid_argument);
}

TEST_CASE("discretization at a fixed alpha") {
  const auto F = golden_fractal_mold();
  const auto d = discretize(F, 12, ExactRational(1));
  CHECK(d.set == NumericalSemigroup::from_listing({0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43, 45}));
  CHECK(verify_semigroup(d).is_semigroup);
  const auto c = collapse_of_rounded(d.rounded);
  REQUIRE(c.has_value());
  CHECK(c->kappa == 55);
  CHECK(c->witness_index == 22);

  const auto L = metric_mold();
  const auto one = discretize(L, 1, ExactRational(1));
  CHECK(one.set == NumericalSemigroup());
  CHECK(collapse_of_rounded(one.rounded)->kappa == 1);
  CHECK_THROWS_AS(discretize(L, 12, ExactRational(2)), std::invalid_argument);
}

TEST_CASE("flooring 12L misses 47 while the 0.40 interval has every integer from 45") {
  const auto L = metric_mold();
  const auto floor12 = discretize(L, 12, ExactRational(1));
  CHECK(!floor12.set.contains(47));
  const auto sweep = alpha_sweep(L, 12);
  const auto& iv = sweep.intervals[locate(sweep, ExactRational::parse("0.40"))];
  CHECK(iv.set().conductor() == 45);
}

TEST_CASE("sweep intervals are constant and exhaustive") {
  std::mt19937_64 rng(99);
  const auto L = metric_mold();
  const auto F = golden_fractal_mold();
  for (unsigned long m : {1ul, 2ul, 5ul, 9ul, 11ul, 12ul, 13ul, 18ul, 34ul}) {
    check_sweep_invariants(L, m, rng);
    check_sweep_invariants(F, m, rng);
  }
  check_sweep_invariants(quarters_mold(), 19, rng);
}

TEST_CASE("sweep examples at particular multiplicities") {
  const auto L = metric_mold();
  const auto F = golden_fractal_mold();

  // 11 lambda_2 = 17.4346 gives 17 above its fractional part and 18 below.
  const auto s11 = alpha_sweep(L, 11);
  CHECK(s11.intervals[locate(s11, ExactRational::parse("0.5"))].discretization.rounded[2] == 17);
  CHECK(s11.intervals[locate(s11, ExactRational::parse("0.43"))].discretization.rounded[2] == 18);
  CHECK(s11.intervals[locate(s11, ExactRational(0))].discretization.rounded[2] == 18);

  // 28 = round(12 phi_4) exactly when alpha > frac(12 phi_4) = 0.58359...
  const auto s12 = alpha_sweep(F, 12);
  const GoldenNumber f4 = scale(F.element(4), 12);
  for (const auto& iv : s12.intervals) {
    const bool above = !iv.ceiling_point && iv.lower && compare_frac(iv.lower->value, f4) >= 0;
    CHECK(iv.set().contains(28) == above);
  }
  CHECK(s12.intervals[locate(s12, ExactRational::parse("0.5835"))].set().contains(28) == false);
  CHECK(s12.intervals[locate(s12, ExactRational::parse("0.5836"))].set().contains(28));

  // Collapse of 18L below 0.0587.
  const auto s18 = alpha_sweep(L, 18);
  CHECK(s18.intervals[locate(s18, ExactRational::parse("0.05"))].collapse.kappa == 90);
  CHECK(s18.intervals[locate(s18, ExactRational::parse("0.0587"))].collapse.kappa == 90);

  // Exact ties among fractional parts are merged into one breakpoint.
  const auto s13 = alpha_sweep(F, 13);
  std::size_t non_integral = 0;
  for (const auto& v : s13.scaled) {
    non_integral += !is_integer(v);
  }
  CHECK(s13.breakpoints.size() < non_integral);
}

TEST_CASE("collapse is stable under prefix extension") {
  const auto F = golden_fractal_mold();
  const auto L = metric_mold();
  for (unsigned long m : {3ul, 12ul, 18ul}) {
    for (const char* a : {"0", "0.3", "0.77", "1"}) {
      const ExactRational alpha = ExactRational::parse(a);
      const auto d = discretize(F, m, alpha);
      std::vector<Element> longer;
      for (std::size_t i = 0; i <= 2 * d.certificate.prefix_end; ++i) {
        longer.push_back(to_int64(floor_alpha(scale(F.element(i), m), alpha)));
      }
      CHECK(collapse_of_rounded(longer)->kappa == collapse_of_rounded(d.rounded)->kappa);
      const auto e = discretize(L, m, alpha);
      std::vector<Element> longer_L;
      for (std::size_t i = 0; i <= 2 * e.certificate.prefix_end; ++i) {
        longer_L.push_back(to_int64(floor_alpha(scale(L.element(i), m), alpha)));
      }
      CHECK(collapse_of_rounded(longer_L)->kappa == collapse_of_rounded(e.rounded)->kappa);
    }
  }
}

TEST_CASE("interval descriptions") {
  const auto F = golden_fractal_mold();
  const auto s = alpha_sweep(F, 12);
  CHECK(s.intervals.front().str() == "[0, 0]");
  CHECK(s.intervals.back().str() == "(0.9180, 1]");
  CHECK(s.intervals.back().exact_str() == "(frac(96-60*tau), 1]");
  CHECK(s.intervals[1].representative == ExactRational::parse("0.001"));
}
