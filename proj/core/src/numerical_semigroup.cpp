#include "tempered/numerical_semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempered {

NumericalSemigroup::NumericalSemigroup(std::vector<Element> elements, Element tail_start) {
  if (tail_start < 0) {
    throw std::invalid_argument("tail start must be non-negative");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Element e : elements) {
    if (e < 0) {
      throw std::invalid_argument("numerical semigroup elements must be non-negative");
    }
  }
  Element c = tail_start;
  // Lower the conductor while the element just below it is present.
  auto below = std::lower_bound(elements.begin(), elements.end(), c);
  while (c > 0 && below != elements.begin() && *(below - 1) == c - 1) {
    --c;
    --below;
  }
  conductor_ = c;
  small_.assign(elements.begin(), below);
}

NumericalSemigroup NumericalSemigroup::from_listing(const std::vector<Element>& prefix_then_all) {
  if (prefix_then_all.empty()) {
    return NumericalSemigroup();
  }
  return NumericalSemigroup(prefix_then_all, prefix_then_all.back());
}

bool NumericalSemigroup::contains(Element x) const {
  if (x < 0) {
    return false;
  }
  if (x >= conductor_) {
    return true;
  }
  return std::binary_search(small_.begin(), small_.end(), x);
}

NumericalSemigroup::Element NumericalSemigroup::element(std::size_t i) const {
  if (i < small_.size()) {
    return small_[i];
  }
  return conductor_ + static_cast<Element>(i - small_.size());
}

std::optional<std::size_t> NumericalSemigroup::index_of(Element x) const {
  if (x < 0) {
    return std::nullopt;
  }
  if (x >= conductor_) {
    return small_.size() + static_cast<std::size_t>(x - conductor_);
  }
  auto it = std::lower_bound(small_.begin(), small_.end(), x);
  if (it != small_.end() && *it == x) {
    return static_cast<std::size_t>(it - small_.begin());
  }
  return std::nullopt;
}

std::vector<NumericalSemigroup::Element> NumericalSemigroup::gaps() const {
  std::vector<Element> out;
  std::size_t k = 0;
  for (Element x = 0; x < conductor_; ++x) {
    if (k < small_.size() && small_[k] == x) {
      ++k;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

std::size_t NumericalSemigroup::genus() const {
  return static_cast<std::size_t>(conductor_) - small_.size();
}

NumericalSemigroup::Element NumericalSemigroup::multiplicity() const {
  for (Element e : small_) {
    if (e > 0) {
      return e;
    }
  }
  return std::max<Element>(conductor_, 1);
}

std::string NumericalSemigroup::str() const {
  if (small_.empty()) {
    return "[" + std::to_string(conductor_) + ", ∞)";
  }
  std::string out = "{";
  for (std::size_t i = 0; i < small_.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(small_[i]);
  }
  out += "} ∪ [" + std::to_string(conductor_) + ", ∞)";
  return out;
}

}  // namespace tempered
