#include "doctest.h"

#include "tempered/mold_builders.hpp"
#include "tempered/theorems.hpp"

#include <algorithm>

using namespace tempered;

namespace {

bool has_semigroup(const SearchResult& r, const NumericalSemigroup& s) {
  return std::find(r.semigroups.begin(), r.semigroups.end(), s) != r.semigroups.end();
}

}  // namespace

TEST_CASE("simultaneous search at multiplicity 12 finds only H") {
  const auto r = simultaneous_search(12);
  REQUIRE(r.semigroups.size() == 1);
  CHECK(r.semigroups.front() == harmonic_semigroup());
  for (const auto& x : r.matches) {
    CHECK(x.interval_L.set() == x.semigroup);
    CHECK(x.interval_F.set() == x.semigroup);
    CHECK(x.even_F.kappa == 55);
    CHECK(x.even_filterable());
  }
}

TEST_CASE("infeasible and feasible small multiplicities") {
  CHECK(simultaneous_search(11).matches.empty());
  CHECK(simultaneous_search(14).matches.empty());
  CHECK(simultaneous_search(1).semigroups == std::vector<NumericalSemigroup>{NumericalSemigroup()});
  CHECK_THROWS_AS(simultaneous_search(0), std::invalid_argument);
}

TEST_CASE("each listed semigroup is reproduced at its listed rounding parameters") {
  const auto L = metric_mold();
  const auto F = golden_fractal_mold();
  for (const auto& entry : listed_semigroups()) {
    INFO("m = " << entry.m);
    const auto r = simultaneous_search(entry.m);
    CHECK(has_semigroup(r, entry.semigroup));
    CHECK(discretize(L, entry.m, ExactRational::parse(entry.alpha_L)).set == entry.semigroup);
    CHECK(discretize(F, entry.m, ExactRational::parse(entry.alpha_F)).set == entry.semigroup);
  }
  const auto r13 = simultaneous_search(13);
  CHECK(r13.semigroups.size() == 2);
  CHECK(has_semigroup(r13, second_semigroup_13()));
}

TEST_CASE("even filterability exclusions") {
  // m = 9: 30 = s_2 + s_2 sits at the odd index 9, below the collapse.
  for (const auto& x : simultaneous_search(9).matches) {
    CHECK(!x.even_filterable());
    const auto& w = x.even_L.even_filterable ? x.even_F.witness : x.even_L.witness;
    REQUIRE(w.has_value());
    CHECK(w->sum == 30);
    CHECK(w->k == 9);
  }
  // m = 13: s_2 + s_4 = 21 + 31 = 52 = s_15 in both semigroups.
  for (const auto& x : simultaneous_search(13).matches) {
    CHECK(!x.even_filterable());
    const auto& w = x.even_L.even_filterable ? x.even_F.witness : x.even_L.witness;
    REQUIRE(w.has_value());
    CHECK(w->i == 2);
    CHECK(w->j == 4);
    CHECK(w->sum == 52);
    CHECK(w->k == 15);
  }
  // m = 18: s_2 + s_8 = 29 + 58 = 87 = s_27.
  const auto r18 = simultaneous_search(18);
  REQUIRE(!r18.matches.empty());
  for (const auto& x : r18.matches) {
    const auto& w = x.even_L.even_filterable ? x.even_F.witness : x.even_L.witness;
    REQUIRE(w.has_value());
    CHECK(w->i == 2);
    CHECK(w->j == 8);
    CHECK(w->sum == 87);
    CHECK(w->k == 27);
  }
}

TEST_CASE("censuses") {
  const auto c20 = multiplicity_census(20, 1);
  std::set<unsigned long> expected20;
  for (auto m : expected_multiplicities()) {
    if (m <= 20) {
      expected20.insert(m);
    }
  }
  CHECK(c20.feasible == expected20);
  CHECK(multiplicity_census(1).feasible == std::set<unsigned long>{1});
  const auto c20_parallel = multiplicity_census(20, 4);
  CHECK(c20_parallel.feasible == c20.feasible);
  CHECK(c20_parallel.even_filterable == c20.even_filterable);
  for (std::size_t k = 0; k < c20.entries.size(); ++k) {
    CHECK(c20.entries[k].matches == c20_parallel.entries[k].matches);
  }
  CHECK(even_filterable_census(20) == std::set<unsigned long>{1, 2, 3, 4, 5, 6, 7, 8, 10, 12});
}

TEST_CASE("tail certificates") {
  for (unsigned long m = 35; m <= 200; ++m) {
    REQUIRE(tail_certificate(m).infeasible);
  }
  const auto big = tail_certificate(1000);
  CHECK(big.infeasible);
  CHECK(big.fourth_order == ProvenOrder::greater);
  CHECK(tail_certificate(35).third_elements_equal);
}

TEST_CASE("uniqueness trace for H") {
  const auto u = h_uniqueness();
  CHECK(u.holds());
  CHECK(u.semigroup == harmonic_semigroup());
  CHECK(u.kappa_F == 55);
  REQUIRE(u.trace.size() == 4);
  CHECK(u.trace[0].bound == "alpha_L <= 0.8631, alpha_F > 0.5836");
  CHECK(u.trace[1].bound == "s_2 = 19");
  CHECK(u.trace[2].bound == "alpha_F > 0.8328");
  for (const auto& s : u.trace) {
    INFO(s.id);
    CHECK(s.holds);
  }
}
