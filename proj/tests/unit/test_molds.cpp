#include "doctest.h"

#include "tempered/fractal.hpp"
#include "tempered/mold_builders.hpp"
#include "tempered/mold_properties.hpp"
#include "tempered/period_scan.hpp"
#include "tempered/polynomial.hpp"
#include "tempered/render.hpp"

#include <string>
#include <vector>

using namespace tempered;

namespace {

template <class T>
std::vector<std::string> rendered(const Mold<T>& mold, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& x : mold.prefix(n)) {
    out.push_back(render_natural(x, 4));
  }
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == ' ') {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the metric mold is log2(i+1)") {
  const auto L = metric_mold();
  CHECK(L.id() == "L");
  CHECK(L.element(4) == LogValue(1, BigInt(5)));
  CHECK(rendered(L, 5) == split("0 1 1.5850 2 2.3219"));
  CHECK(L.index_of(LogValue(1, BigInt(1024))) == 1023);
  CHECK(L.spacing_start(12) == 16);
  CHECK(L.spacing_start(1) == 1);
}

TEST_CASE("the golden fractal mold") {
  const auto F = golden_fractal_mold();
  CHECK(rendered(F, 12) ==
        split("0 1 1.6180 2 2.3820 2.6180 2.8541 3 3.2361 3.3820 3.5279 3.6180"));
  CHECK(F.element(2) == GoldenNumber::phi());
  CHECK(F.element(4) == GoldenNumber(BigInt(3), BigInt(-1)));  // 2 + tau^2
  for (std::size_t i = 0; i < 600; ++i) {
    REQUIRE(golden_fractal_index(F.element(i)) == i);
  }
  CHECK(!golden_fractal_index(GoldenNumber(BigInt(0), BigInt(2))).has_value());
  CHECK(F.spacing_start(12) == 63);
  CHECK(F.spacing_start(34) == 255);
}

TEST_CASE("f_ell recursion over several rings") {
  const GoldenNumber t = GoldenNumber::tau();
  CHECK(f_ell(0, 0, t) == GoldenNumber(0));
  CHECK(f_ell(1, 1, t) == t);
  CHECK(f_ell(2, 1, t) == t * t);
  CHECK(f_ell(2, 3, t) == t + (GoldenNumber(1) - t) * t);
  const ExactRational half(BigInt(1), BigInt(2));
  for (std::uint64_t n = 0; n < 8; ++n) {
    CHECK(f_ell(3, n, half) == ExactRational(BigInt(static_cast<long>(n)), BigInt(8)));
  }
  CHECK_THROWS_AS(f_ell(2, 4, t), std::out_of_range);
  const IntPolynomial p = IntPolynomial::variable();
  CHECK(f_ell(2, 3, p) == p + (IntPolynomial(1) - p) * p);
}

TEST_CASE("perfect fractal molds and the example molds") {
  CHECK(rendered(perfect_fractal_mold(4), 6) == split("0 1 1.25 1.5 1.75 2"));
  CHECK(perfect_fractal_mold(4).element(6) == ExactRational::parse("2.0625"));
  CHECK(rendered(quarters_mold(), 8) == split("0 1 1.25 1.5 1.75 2 2.125 2.25"));
  CHECK(rendered(decimal_mold(), 4) == split("0 1 1.1 1.2"));
  CHECK(perfect_fractal_mold(2).element(3) == ExactRational::parse("2"));
}

TEST_CASE("generic fractal molds from a first period") {
  const auto g = generic_fractal_mold(parse_rational_period("1,1.5,1.75"), 40);
  REQUIRE(g.elements.size() >= 40);
  std::vector<std::string> head;
  for (std::size_t i = 0; i < 8; ++i) {
    head.push_back(render_natural(g.elements[i], 4));
  }
  CHECK(head == split("0 1 1.5 1.75 2 2.25 2.375 2.5"));
  CHECK(g.closure.holds());

  const auto bad = generic_fractal_mold(parse_rational_period("1,19/12"), 40);
  CHECK(!bad.closure.holds());
  REQUIRE(bad.closure.witness.has_value());
  CHECK(bad.closure.witness->indices == std::vector<std::size_t>{2, 2});
  CHECK(bad.closure.witness->values.back() == "19/6");

  const auto golden =
      generic_fractal_mold(PeriodSpec<GoldenNumber>{{GoldenNumber(1), GoldenNumber::phi()}}, 200);
  CHECK(golden.closure.holds());
  const auto F = golden_fractal_mold();
  for (std::size_t i = 0; i < 200; ++i) {
    REQUIRE(golden.elements[i] == F.element(i));
  }
  CHECK_THROWS(parse_rational_period("1.5,1.75"));
  CHECK_THROWS(parse_rational_period("1,1.75,1.5"));
  CHECK(is_golden_period_literal("1,phi"));
  CHECK(is_golden_period_literal("golden"));
}

TEST_CASE("mold properties") {
  const auto L = metric_mold();
  const auto F = golden_fractal_mold();
  CHECK(check_mold_axioms(L, 200).holds());
  CHECK(check_mold_axioms(F, 200).holds());
  CHECK(check_metric(L, 2000).holds());

  const auto metric_F = check_metric(F, 200);
  CHECK(!metric_F.holds());
  REQUIRE(metric_F.witness.has_value());
  CHECK(metric_F.witness->indices == std::vector<std::size_t>{3, 5, 14});
  CHECK(metric_F.witness->detail == "mu_14 != mu_2 + mu_4");

  const auto even_F = check_even_filterable_mold(F, 200);
  CHECK(!even_F.holds());
  REQUIRE(even_F.witness.has_value());
  CHECK(even_F.witness->indices == std::vector<std::size_t>{2, 4, 15});

  CHECK(check_even_filterable_mold(L, 200).holds());
  CHECK(check_closure(F, 300).holds());
}

TEST_CASE("period certificate singles out tau") {
  const auto checks = golden_period_certificate();
  REQUIRE(!checks.empty());
  for (const auto& c : checks) {
    INFO(c.claim);
    CHECK(c.holds);
  }
  // tau itself is exactly closed; 0.3 is visibly not.
  CHECK(scan_period_point(ExactRational::parse("0.3"), 64).survives == false);
  CHECK_THROWS_AS(period_uniqueness_scan(ExactRational(0), 64), std::invalid_argument);
}
