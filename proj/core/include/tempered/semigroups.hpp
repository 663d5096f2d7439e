#pragma once

#include "tempered/numerical_semigroup.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tempered {

using Element = NumericalSemigroup::Element;

struct SumWitness {
  Element a = 0;
  Element b = 0;
  Element sum() const { return a + b; }
  friend bool operator==(const SumWitness&, const SumWitness&) = default;
};

struct SemigroupVerdict {
  bool is_semigroup = false;
  // Lexicographically smallest (a, b), a <= b, with a + b missing.
  std::optional<SumWitness> witness;
  std::string reason;
};

// Closure check of a candidate set. Only pairs of elements below the
// conductor can fail, since every sum involving an element >= C is >= C.
SemigroupVerdict verify_semigroup(const NumericalSemigroup& candidate);

// Every violating pair (a, b), a <= b, in lexicographic order.
std::vector<SumWitness> closure_violations(const NumericalSemigroup& candidate);

struct GenusMultiplicity {
  std::vector<Element> gaps;
  std::size_t genus = 0;
  Element multiplicity = 1;
};

GenusMultiplicity genus_multiplicity(const NumericalSemigroup& s);

struct CollapseRecord {
  Element kappa = 0;
  // Mold index i with round(m mu_i) == round(m mu_{i+1}) == kappa.
  std::size_t witness_index = 0;
};

// First repeated value of a non-decreasing rounded sequence.
std::optional<CollapseRecord> collapse_of_rounded(const std::vector<Element>& rounded);

struct EvenSum {
  std::size_t i = 0;  // s_i + s_j = s_k
  std::size_t j = 0;
  std::size_t k = 0;
  Element sum = 0;
};

struct EvenFilterVerdict {
  bool even_filterable = false;
  std::optional<EvenSum> witness;      // first pair landing on an odd index (or outside S)
  std::vector<EvenSum> nontrivial;     // pairs with i, j >= 1 and sum < kappa
  Element kappa = 0;
};

// For all pairs s_{2i} <= s_{2j} with sum < kappa, the sum must be s_k with
// k even; sums >= kappa pass unconditionally.
EvenFilterVerdict even_filterable_semigroup(const NumericalSemigroup& s, Element kappa);

}  // namespace tempered
