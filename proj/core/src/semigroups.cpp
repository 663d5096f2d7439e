#include "tempered/semigroups.hpp"

namespace tempered {

namespace {

template <class OnViolation>
void scan_pairs(const NumericalSemigroup& s, OnViolation&& on_violation) {
  const auto& xs = s.small_elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) {
      Element sum = xs[i] + xs[j];
      if (sum >= s.conductor()) {
        break;
      }
      if (!s.contains(sum) && !on_violation(SumWitness{xs[i], xs[j]})) {
        return;
      }
    }
  }
}

}  // namespace

SemigroupVerdict verify_semigroup(const NumericalSemigroup& candidate) {
  SemigroupVerdict v;
  if (!candidate.contains(0)) {
    v.reason = "0 is not an element";
    return v;
  }
  scan_pairs(candidate, [&](const SumWitness& w) {
    v.witness = w;
    return false;
  });
  if (v.witness) {
    v.reason = std::to_string(v.witness->a) + " + " + std::to_string(v.witness->b) + " = " +
               std::to_string(v.witness->sum()) + " is not an element";
    return v;
  }
  v.is_semigroup = true;
  v.reason = "closed under addition";
  return v;
}

std::vector<SumWitness> closure_violations(const NumericalSemigroup& candidate) {
  std::vector<SumWitness> out;
  scan_pairs(candidate, [&](const SumWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

GenusMultiplicity genus_multiplicity(const NumericalSemigroup& s) {
  GenusMultiplicity g;
  g.gaps = s.gaps();
  g.genus = g.gaps.size();
  g.multiplicity = s.multiplicity();
  return g;
}

std::optional<CollapseRecord> collapse_of_rounded(const std::vector<Element>& rounded) {
  for (std::size_t i = 0; i + 1 < rounded.size(); ++i) {
    if (rounded[i] == rounded[i + 1]) {
      return CollapseRecord{rounded[i], i};
    }
  }
  return std::nullopt;
}

EvenFilterVerdict even_filterable_semigroup(const NumericalSemigroup& s, Element kappa) {
  EvenFilterVerdict v;
  v.kappa = kappa;
  for (std::size_t i = 0;; i += 2) {
    const Element a = s.element(i);
    if (a + a >= kappa) {
      break;
    }
    for (std::size_t j = i;; j += 2) {
      const Element b = s.element(j);
      const Element sum = a + b;
      if (sum >= kappa) {
        break;
      }
      auto k = s.index_of(sum);
      EvenSum rec{i, j, k ? *k : 0, sum};
      if (!k || *k % 2 != 0) {
        v.witness = rec;
        v.even_filterable = false;
        return v;
      }
      if (i > 0) {
        v.nontrivial.push_back(rec);
      }
    }
  }
  v.even_filterable = true;
  return v;
}

}  // namespace tempered
