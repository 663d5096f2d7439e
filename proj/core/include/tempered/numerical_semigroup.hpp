#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tempered {

// Finite-complement subset of N_0 given by its elements below the conductor
// C and the promise that every integer >= C belongs to it. The conductor is
// normalized to be minimal, so equality is structural.
class NumericalSemigroup {
 public:
  using Element = std::int64_t;

  // N_0.
  NumericalSemigroup() = default;
  // `elements` may be unsorted and contain duplicates or values >= tail_start;
  // every integer >= tail_start is added.
  NumericalSemigroup(std::vector<Element> elements, Element tail_start);

  static NumericalSemigroup from_listing(const std::vector<Element>& prefix_then_all);

  const std::vector<Element>& small_elements() const { return small_; }
  Element conductor() const { return conductor_; }

  bool contains(Element x) const;
  // s_i, the i-th element in increasing order.
  Element element(std::size_t i) const;
  // i with s_i == x, if x is an element.
  std::optional<std::size_t> index_of(Element x) const;

  std::vector<Element> gaps() const;
  std::size_t genus() const;
  // Smallest nonzero element.
  Element multiplicity() const;

  // e.g. "{0, 4, 5, 8, 9, 10} ∪ [12, ∞)".
  std::string str() const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                          const NumericalSemigroup& b) {
    if (auto c = a.conductor_ <=> b.conductor_; c != 0) {
      return c;
    }
    return a.small_ <=> b.small_;
  }

 private:
  std::vector<Element> small_;  // sorted elements < conductor_
  Element conductor_ = 0;
};

}  // namespace tempered
