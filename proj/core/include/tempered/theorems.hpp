#pragma once

#include "tempered/certified_approx.hpp"
#include "tempered/discretize.hpp"
#include "tempered/golden_number.hpp"
#include "tempered/log_value.hpp"
#include "tempered/semigroups.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tempered {

// A set that is at once a discretization of mL and of mF and a numerical
// semigroup, with the rounding intervals producing it.
struct SimultaneousMatch {
  unsigned long m = 0;
  AlphaInterval<LogValue> interval_L;
  AlphaInterval<GoldenNumber> interval_F;
  NumericalSemigroup semigroup;
  EvenFilterVerdict even_L;  // w.r.t. the collapse of (L, m, interval_L)
  EvenFilterVerdict even_F;  // w.r.t. the collapse of (F, m, interval_F)

  bool even_filterable() const { return even_L.even_filterable && even_F.even_filterable; }
};

struct SearchResult {
  unsigned long m = 0;
  std::size_t intervals_L = 0;
  std::size_t intervals_F = 0;
  // Ordered by (interval_L position, interval_F position).
  std::vector<SimultaneousMatch> matches;
  // Distinct semigroups among the matches, in increasing order.
  std::vector<NumericalSemigroup> semigroups;
};

// Exhaustive over all pairs of alpha-intervals of L and F at multiplicity m.
SearchResult simultaneous_search(unsigned long m);

struct TailCertificate {
  unsigned long m = 0;
  bool third_elements_equal = false;  // m phi_3 == m lambda_3 == 2m
  bool fourth_above_next = false;      // m lambda_4 > 2m + 1
  ProvenOrder fourth_order = ProvenOrder::inconclusive;  // m phi_4 vs m lambda_4 + 2
  bool infeasible = false;
  std::string detail;
};

// Proves that no discretization of mL equals one of mF: both contain 2m as
// their third element, the next element of mL is at most ceil(m lambda_4)
// and that of mF at least floor(m phi_4), and those differ once
// m phi_4 > m lambda_4 + 2.
TailCertificate tail_certificate(unsigned long m);

struct CensusEntry {
  unsigned long m = 0;
  std::size_t matches = 0;
  std::size_t semigroups = 0;
  bool even_filterable = false;
};

struct CensusResult {
  unsigned long searched_up_to = 0;
  unsigned long tail_up_to = 0;  // 0 when no tail certificates were requested
  std::vector<CensusEntry> entries;  // one per m <= searched_up_to
  std::vector<TailCertificate> tail;
  std::set<unsigned long> feasible;
  std::set<unsigned long> even_filterable;
  bool tail_certified() const;
};

// Searches every m <= m_max (in parallel over m) and certifies
// m_max < m <= tail_up_to through the tail argument.
CensusResult multiplicity_census(unsigned long m_max, unsigned threads = 1,
                                 unsigned long tail_up_to = 0);

std::set<unsigned long> even_filterable_census(unsigned long m_max, unsigned threads = 1);

struct DerivationStep {
  std::string id;
  std::string constraint;
  std::string bound;
  bool holds = false;
};

struct UniquenessResult {
  NumericalSemigroup semigroup;
  Element kappa_F = 0;  // collapse w.r.t. (F, 12) on every matching interval
  std::size_t matches = 0;
  std::string alpha_L;  // union of matching L-intervals
  std::string alpha_F;
  std::vector<DerivationStep> trace;
  bool holds() const;
};

// Multiplicity 12: the search leaves a single semigroup; the trace replays
// the constraint chain that forces it and checks it against every match.
UniquenessResult h_uniqueness();

// Reference data.
NumericalSemigroup harmonic_semigroup();
std::set<unsigned long> expected_multiplicities();
std::set<unsigned long> expected_even_filterable_multiplicities();

struct ListedSemigroup {
  unsigned long m = 0;
  std::string alpha_L;  // a rounding parameter for L producing the set
  std::string alpha_F;  // and one for F
  NumericalSemigroup semigroup;
};

// One simultaneous discretization for each feasible multiplicity.
const std::vector<ListedSemigroup>& listed_semigroups();
// The second semigroup at multiplicity 13.
NumericalSemigroup second_semigroup_13();

}  // namespace tempered
