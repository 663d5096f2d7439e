#include "doctest.h"

#include "tempered/semigroups.hpp"

#include <bitset>
#include <random>

using namespace tempered;

namespace {

// Brute-force closure: every sum of two members up to 2C is a member.
bool bitset_closed(const NumericalSemigroup& s) {
  constexpr std::size_t limit = 512;
  const auto c = static_cast<std::size_t>(s.conductor());
  std::bitset<limit> in;
  for (std::size_t x = 0; x < limit; ++x) {
    in[x] = s.contains(static_cast<Element>(x));
  }
  if (!in[0]) {
    return false;
  }
  for (std::size_t a = 0; a <= 2 * c; ++a) {
    for (std::size_t b = a; a + b <= 2 * c; ++b) {
      if (in[a] && in[b] && !in[a + b]) {
        return false;
      }
    }
  }
  return true;
}

NumericalSemigroup random_candidate(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dc(1, 200);
  const int c = dc(rng);
  // Mix of sparse sets (rarely closed) and sets built from generators
  // (always closed) so both verdicts are exercised.
  std::vector<Element> xs{0};
  if (rng() % 2 == 0) {
    std::bernoulli_distribution keep(0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
    for (int x = 1; x < c; ++x) {
      if (keep(rng)) {
        xs.push_back(x);
      }
    }
  } else {
    std::uniform_int_distribution<int> dg(2, 40);
    std::vector<bool> in(static_cast<std::size_t>(c), false);
    in[0] = true;
    const int g1 = dg(rng);
    const int g2 = dg(rng);
    for (int x = 1; x < c; ++x) {
      in[x] = (x >= g1 && in[x - g1]) || (x >= g2 && in[x - g2]);
      if (in[x]) {
        xs.push_back(x);
      }
    }
  }
  return NumericalSemigroup(xs, c);
}

}  // namespace

TEST_CASE("construction normalizes the conductor") {
  const NumericalSemigroup s({0, 4, 5, 8, 9, 10, 12, 13}, 14);
  CHECK(s.conductor() == 12);
  CHECK(s.small_elements() == std::vector<Element>{0, 4, 5, 8, 9, 10});
  CHECK(s == NumericalSemigroup::from_listing({0, 4, 5, 8, 9, 10, 12}));
  CHECK(s.str() == "{0, 4, 5, 8, 9, 10} ∪ [12, ∞)");
  CHECK(s.element(6) == 12);
  CHECK(s.element(9) == 15);
  CHECK(s.index_of(13) == 7);
  CHECK(!s.index_of(11).has_value());
  CHECK(NumericalSemigroup().str() == "[0, ∞)");
}

TEST_CASE("gaps, genus and multiplicity") {
  const NumericalSemigroup s({0, 4, 5, 8, 9, 10}, 12);
  const auto g = genus_multiplicity(s);
  CHECK(g.gaps == std::vector<Element>{1, 2, 3, 6, 7, 11});
  CHECK(g.genus == 6);
  CHECK(g.multiplicity == 4);
  const auto n0 = genus_multiplicity(NumericalSemigroup());
  CHECK(n0.genus == 0);
  CHECK(n0.multiplicity == 1);
}

TEST_CASE("verification reports the smallest violating pair") {
  const NumericalSemigroup bad({0, 5, 7, 10}, 13);  // 5 + 7 = 12 missing
  const auto v = verify_semigroup(bad);
  CHECK(!v.is_semigroup);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == SumWitness{5, 7});
  CHECK(!verify_semigroup(NumericalSemigroup({1, 2}, 3)).is_semigroup);
  CHECK(verify_semigroup(NumericalSemigroup({0, 3, 5, 6}, 8)).is_semigroup);
  const auto all = closure_violations(NumericalSemigroup({0, 4, 6, 7}, 9));
  CHECK(all == std::vector<SumWitness>{{4, 4}});
}

TEST_CASE("verification agrees with a bitset oracle on random sets") {
  std::mt19937_64 rng(1000);
  int closed = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto s = random_candidate(rng);
    const bool expected = bitset_closed(s);
    INFO(s.str());
    REQUIRE(verify_semigroup(s).is_semigroup == expected);
    REQUIRE(closure_violations(s).empty() == expected);
    closed += expected;
    if (expected) {
      const auto g = genus_multiplicity(s);
      CHECK(g.genus + s.small_elements().size() == static_cast<std::size_t>(s.conductor()));
    }
  }
  CHECK(closed > 100);
  CHECK(closed < 900);
}

TEST_CASE("collapse of a rounded sequence") {
  const auto c = collapse_of_rounded({0, 1, 2, 2, 3});
  REQUIRE(c.has_value());
  CHECK(c->kappa == 2);
  CHECK(c->witness_index == 2);
  CHECK(!collapse_of_rounded({0, 1, 2}).has_value());
}

TEST_CASE("even filterability in semigroup indices") {
  const auto H = NumericalSemigroup::from_listing({0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43, 45});
  const auto v = even_filterable_semigroup(H, 55);
  CHECK(v.even_filterable);
  REQUIRE(v.nontrivial.size() == 3);
  CHECK(v.nontrivial[0].k == 8);
  CHECK(v.nontrivial[1].k == 14);
  CHECK(v.nontrivial[2].k == 20);
  // Lowering kappa only removes constraints; a large kappa exposes an odd index.
  CHECK(even_filterable_semigroup(H, 30).even_filterable);
  const auto strict = even_filterable_semigroup(H, 1000);
  CHECK(!strict.even_filterable);
  REQUIRE(strict.witness.has_value());
  CHECK(strict.witness->k % 2 == 1);
}
