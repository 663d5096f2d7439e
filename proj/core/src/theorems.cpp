#include "tempered/theorems.hpp"

#include "tempered/mold_builders.hpp"
#include "tempered/render.hpp"
#include "tempered/thread_pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempered {

namespace {

const Mold<LogValue>& shared_metric_mold() {
  static const Mold<LogValue> mold = metric_mold();
  return mold;
}

const Mold<GoldenNumber>& shared_golden_mold() {
  static const Mold<GoldenNumber> mold = golden_fractal_mold();
  return mold;
}

// Every interval's set must be reproduced by discretizing at its
// representative, an exact rational inside the interval.
template <ExactValue T>
void recheck(const Mold<T>& mold, const AlphaInterval<T>& iv) {
  if (!iv.contains(iv.representative) ||
      discretize(mold, iv.m, iv.representative).set != iv.set()) {
    throw std::logic_error("interval " + iv.str() + " of " + mold.id() + " at m = " +
                           std::to_string(iv.m) + " is not constant");
  }
}

// Union of intervals given in increasing position order; adjacent ones merge.
template <ExactValue T>
std::string describe_union(std::vector<const AlphaInterval<T>*> ivs) {
  std::sort(ivs.begin(), ivs.end(),
            [](const auto* a, const auto* b) { return a->position < b->position; });
  ivs.erase(std::unique(ivs.begin(), ivs.end(),
                        [](const auto* a, const auto* b) { return a->position == b->position; }),
            ivs.end());
  std::string out;
  std::size_t k = 0;
  while (k < ivs.size()) {
    std::size_t e = k;
    while (e + 1 < ivs.size() && ivs[e + 1]->position == ivs[e]->position + 1) {
      ++e;
    }
    AlphaInterval<T> merged = *ivs[k];
    if (ivs[k]->ceiling_point && e > k) {
      merged.ceiling_point = false;
      merged.lower.reset();
      merged.upper = ivs[e]->upper;
      std::string s = merged.str();
      s[0] = '[';
      out += (out.empty() ? "" : " ∪ ") + s;
    } else {
      merged.upper = ivs[e]->upper;
      out += (out.empty() ? "" : " ∪ ") + merged.str();
    }
    k = e + 1;
  }
  return out;
}

}  // namespace

SearchResult simultaneous_search(unsigned long m) {
  if (m == 0) {
    throw std::invalid_argument("multiplicity must be positive");
  }
  const auto& L = shared_metric_mold();
  const auto& F = shared_golden_mold();
  const AlphaSweep<LogValue> sweep_L = alpha_sweep(L, m);
  const AlphaSweep<GoldenNumber> sweep_F = alpha_sweep(F, m);

  SearchResult result;
  result.m = m;
  result.intervals_L = sweep_L.intervals.size();
  result.intervals_F = sweep_F.intervals.size();

  std::map<NumericalSemigroup, std::vector<std::size_t>> by_set_F;
  for (const auto& iv : sweep_F.intervals) {
    by_set_F[iv.set()].push_back(iv.position);
  }
  std::map<NumericalSemigroup, bool> closed;
  std::set<NumericalSemigroup> distinct;
  for (const auto& iv_L : sweep_L.intervals) {
    auto it = by_set_F.find(iv_L.set());
    if (it == by_set_F.end()) {
      continue;
    }
    auto [c, inserted] = closed.try_emplace(iv_L.set(), false);
    if (inserted) {
      c->second = verify_semigroup(iv_L.set()).is_semigroup;
    }
    if (!c->second) {
      continue;
    }
    recheck(L, iv_L);
    for (std::size_t pos_F : it->second) {
      const auto& iv_F = sweep_F.intervals[pos_F];
      recheck(F, iv_F);
      SimultaneousMatch match;
      match.m = m;
      match.interval_L = iv_L;
      match.interval_F = iv_F;
      match.semigroup = iv_L.set();
      match.even_L = even_filterable_semigroup(iv_L);
      match.even_F = even_filterable_semigroup(iv_F);
      result.matches.push_back(std::move(match));
      distinct.insert(iv_L.set());
    }
  }
  result.semigroups.assign(distinct.begin(), distinct.end());
  return result;
}

TailCertificate tail_certificate(unsigned long m) {
  if (m == 0) {
    throw std::invalid_argument("multiplicity must be positive");
  }
  const auto& L = shared_metric_mold();
  const auto& F = shared_golden_mold();
  TailCertificate cert;
  cert.m = m;
  const long two_m = static_cast<long>(2 * m);
  const GoldenNumber phi3 = scale(F.element(3), m);
  const LogValue lambda3 = scale(L.element(3), m);
  cert.third_elements_equal = phi3 == GoldenNumber(two_m) && lambda3.is_integer() &&
                              lambda3.floor() == BigInt(two_m);
  const GoldenNumber phi4 = scale(F.element(4), m);
  const LogValue lambda4 = scale(L.element(4), m);
  cert.fourth_above_next = lambda4.compare(ExactRational(two_m + 1)) > 0;
  cert.fourth_order = cross_compare(phi4, lambda4.plus_integer(2), ExactRational::parse("1e-6"));
  cert.infeasible = cert.third_elements_equal && cert.fourth_above_next &&
                    cert.fourth_order == ProvenOrder::greater;
  cert.detail = exact_form(phi3) + " = " + exact_form(lambda3) + " = " + std::to_string(two_m) +
                "; " + exact_form(lambda4) + " > " + std::to_string(two_m + 1) + "; " +
                exact_form(phi4) + " " + to_string(cert.fourth_order) + " " +
                exact_form(lambda4) + " + 2";
  return cert;
}

bool CensusResult::tail_certified() const {
  return std::all_of(tail.begin(), tail.end(), [](const TailCertificate& t) { return t.infeasible; });
}

CensusResult multiplicity_census(unsigned long m_max, unsigned threads, unsigned long tail_up_to) {
  if (m_max == 0) {
    throw std::invalid_argument("m_max must be positive");
  }
  CensusResult census;
  census.searched_up_to = m_max;
  census.entries.resize(m_max);
  parallel_for(m_max, threads, [&](std::size_t k) {
    const unsigned long m = k + 1;
    SearchResult r = simultaneous_search(m);
    CensusEntry& e = census.entries[k];
    e.m = m;
    e.matches = r.matches.size();
    e.semigroups = r.semigroups.size();
    e.even_filterable = std::any_of(r.matches.begin(), r.matches.end(),
                                    [](const SimultaneousMatch& x) { return x.even_filterable(); });
  });
  for (const auto& e : census.entries) {
    if (e.matches > 0) {
      census.feasible.insert(e.m);
    }
    if (e.even_filterable) {
      census.even_filterable.insert(e.m);
    }
  }
  if (tail_up_to > m_max) {
    census.tail_up_to = tail_up_to;
    census.tail.resize(tail_up_to - m_max);
    parallel_for(census.tail.size(), threads,
                 [&](std::size_t k) { census.tail[k] = tail_certificate(m_max + 1 + k); });
  }
  return census;
}

std::set<unsigned long> even_filterable_census(unsigned long m_max, unsigned threads) {
  return multiplicity_census(m_max, threads).even_filterable;
}

bool UniquenessResult::holds() const {
  return !trace.empty() &&
         std::all_of(trace.begin(), trace.end(), [](const DerivationStep& s) { return s.holds; });
}

UniquenessResult h_uniqueness() {
  constexpr unsigned long m = 12;
  const auto& L = shared_metric_mold();
  const auto& F = shared_golden_mold();
  const NumericalSemigroup H = harmonic_semigroup();
  const SearchResult search = simultaneous_search(m);

  UniquenessResult result;
  result.matches = search.matches.size();
  if (!search.semigroups.empty()) {
    result.semigroup = search.semigroups.front();
  }
  std::vector<const AlphaInterval<LogValue>*> ivs_L;
  std::vector<const AlphaInterval<GoldenNumber>*> ivs_F;
  for (const auto& x : search.matches) {
    ivs_L.push_back(&x.interval_L);
    ivs_F.push_back(&x.interval_F);
  }
  result.alpha_L = describe_union(ivs_L);
  result.alpha_F = describe_union(ivs_F);

  auto frac4 = [](const auto& v) { return render_enclosed(approximate_frac(v), 4); };
  auto all_matches = [&](auto&& pred) {
    return !search.matches.empty() && std::all_of(search.matches.begin(), search.matches.end(), pred);
  };
  // alpha_F > frac(v) on interval iv.
  auto F_above = [](const AlphaInterval<GoldenNumber>& iv, const GoldenNumber& v) {
    return !iv.ceiling_point && iv.lower && compare_frac(iv.lower->value, v) >= 0;
  };

  // The fourth element: 12 lambda_4 only reaches it by rounding up, 12 phi_4
  // only by rounding down.
  const LogValue l4 = scale(L.element(4), m);
  const GoldenNumber f4 = scale(F.element(4), m);
  const Element s4 = H.element(4);
  {
    DerivationStep step;
    step.id = "fourth-element";
    step.constraint = "s_4 = " + std::to_string(s4) + " = ceil(" + exact_form(l4) +
                      ") = floor(" + exact_form(f4) + ")";
    step.bound = "alpha_L <= " + frac4(l4) + ", alpha_F > " + frac4(f4);
    const bool derived = !is_integer(l4) && !is_integer(f4) && ceil_of(l4) == BigInt(s4) &&
                         floor_of(f4) == BigInt(s4);
    step.holds = derived && all_matches([&](const SimultaneousMatch& x) {
      const auto& iv = x.interval_L;
      const bool L_ok =
          iv.ceiling_point || (iv.upper && compare_frac(iv.upper->value, l4) <= 0);
      return x.semigroup.element(4) == s4 && L_ok && F_above(x.interval_F, f4);
    });
    result.trace.push_back(step);
  }
  // Then 12 phi_2 rounds down as well.
  const GoldenNumber f2 = scale(F.element(2), m);
  const Element s2 = to_int64(floor_of(f2));
  {
    DerivationStep step;
    step.id = "second-element";
    step.constraint = "frac(" + exact_form(f2) + ") = " + frac4(f2) + " < alpha_F";
    step.bound = "s_2 = " + std::to_string(s2);
    step.holds = s2 == 19 && compare_frac(f2, f4) < 0 &&
                 all_matches([&](const SimultaneousMatch& x) { return x.semigroup.element(2) == s2; });
    result.trace.push_back(step);
  }
  // s_2 + s_2 must be an element; a single scaled element of F can round to it.
  {
    const Element target = 2 * s2;
    const auto& cert = search.matches.empty() ? TruncationCertificate{}
                                              : search.matches.front().interval_F.discretization.certificate;
    std::vector<std::size_t> sources;
    for (std::size_t i = 0; i <= cert.prefix_end; ++i) {
      const GoldenNumber v = scale(F.element(i), m);
      if (floor_of(v) == BigInt(target) || ceil_of(v) == BigInt(target)) {
        sources.push_back(i);
      }
    }
    DerivationStep step;
    step.id = "doubled-second-element";
    if (sources.size() == 1) {
      const GoldenNumber v = scale(F.element(sources[0]), m);
      step.constraint = std::to_string(s2) + " + " + std::to_string(s2) + " = " +
                        std::to_string(target) + " = floor(" + exact_form(v) + "), index " +
                        std::to_string(sources[0]);
      step.bound = "alpha_F > " + frac4(v);
      step.holds = !is_integer(v) && floor_of(v) == BigInt(target) &&
                   all_matches([&](const SimultaneousMatch& x) {
                     return x.semigroup.contains(target) && F_above(x.interval_F, v);
                   });
    } else {
      step.constraint = std::to_string(target) + " has " + std::to_string(sources.size()) +
                        " possible sources";
      step.bound = "none";
    }
    result.trace.push_back(step);
  }
  {
    DerivationStep step;
    step.id = "unique-semigroup";
    step.constraint = std::to_string(search.semigroups.size()) + " semigroup(s) from " +
                      std::to_string(search.matches.size()) + " interval pair(s)";
    step.bound = "S = " + result.semigroup.str();
    if (!search.matches.empty()) {
      result.kappa_F = search.matches.front().even_F.kappa;
    }
    step.holds = search.semigroups.size() == 1 && result.semigroup == H &&
                 all_matches([&](const SimultaneousMatch& x) {
                   return x.even_F.kappa == result.kappa_F;
                 }) &&
                 result.kappa_F == 55;
    result.trace.push_back(step);
  }
  return result;
}

NumericalSemigroup harmonic_semigroup() {
  return NumericalSemigroup::from_listing({0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43, 45});
}

std::set<unsigned long> expected_multiplicities() {
  return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 18};
}

std::set<unsigned long> expected_even_filterable_multiplicities() {
  return {1, 2, 3, 4, 5, 6, 7, 8, 10, 12};
}

const std::vector<ListedSemigroup>& listed_semigroups() {
  static const std::vector<ListedSemigroup> listed = [] {
    auto entry = [](unsigned long m, const char* a_L, const char* a_F,
                    std::vector<Element> listing) {
      return ListedSemigroup{m, a_L, a_F, NumericalSemigroup::from_listing(listing)};
    };
    return std::vector<ListedSemigroup>{
        entry(1, "0.50", "1.00", {0, 1}),
        entry(2, "0.50", "1.00", {0, 2, 3}),
        entry(3, "0.50", "0.85", {0, 3, 5, 6, 7, 8}),
        entry(4, "0.28", "0.47", {0, 4, 7, 8, 10, 11, 12, 13, 14}),
        entry(5, "0.50", "0.90", {0, 5, 8, 10, 12, 13, 14, 15, 16, 17}),
        entry(6, "0.01", "0.41", {0, 6, 10, 12, 14, 16, 17, 18, 20, 21, 22, 23, 24, 25, 26}),
        entry(7, "0.50", "0.97", {0, 7, 11, 14, 16, 18, 20, 21, 22, 23, 24, 25, 26, 27}),
        entry(8, "0.35", "0.83",
              {0, 8, 13, 16, 19, 21, 23, 24, 26, 27, 28, 29, 30, 31, 32, 33, 34}),
        entry(9, "0.13", "0.56",
              {0, 9, 15, 18, 21, 24, 26, 27, 29, 30, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41}),
        entry(10, "0.50", "1.00",
              {0, 10, 16, 20, 23, 26, 28, 30, 32, 33, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45}),
        entry(12, "0.40", "1.00",
              {0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43, 45, 46, 47, 48, 49, 50, 51, 52, 53,
               54, 55, 56, 57}),
        entry(13, "0.18", "0.94",
              {0, 13, 21, 26, 31, 34, 37, 39, 42, 44, 45, 47, 48, 50, 51, 52, 53, 55, 56, 57, 58,
               59, 60, 61, 62, 63, 64, 65, 66, 67, 68}),
        entry(18, "0.05", "0.88",
              {0,  18, 29, 36, 42, 47, 51, 54, 58, 60, 63, 65, 67, 69, 71, 72, 74, 76, 77, 78,
               80, 81, 82, 83, 84, 85, 86, 87, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98}),
    };
  }();
  return listed;
}

NumericalSemigroup second_semigroup_13() {
  return NumericalSemigroup::from_listing(
      {0, 13, 21, 26, 31, 34, 37, 39, 42, 44, 45, 47, 49, 50, 51, 52, 54, 55, 56, 57, 58, 59, 60});
}

}  // namespace tempered
