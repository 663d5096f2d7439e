#pragma once

#include "tempered/exact_value.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tempered {

enum class MoldKind { metric, golden_fractal, perfect_fractal, generic_fractal, explicit_rule };

std::string to_string(MoldKind kind);

// Period data of a mold whose elements in [l, l+1) are known in closed form:
// the index of the first element of period l, and an upper bound on every
// consecutive spacing from that period on.
template <class T>
struct PeriodStructure {
  std::function<std::size_t(std::size_t ell)> start_index;
  std::function<T(std::size_t ell)> max_gap;
};

// Lazily enumerable strictly increasing sequence mu_0 = 0 < mu_1 < ... of
// exact values. Copies share state; all accessors are thread-safe.
template <ExactValue T>
class Mold {
 public:
  using Value = T;
  using ElementFn = std::function<T(std::size_t)>;
  // Appends at least one element to the cache (e.g. one whole period).
  using ExtendFn = std::function<void(std::vector<T>&)>;
  using IndexFn = std::function<std::optional<std::size_t>(const T&)>;
  // Smallest N with m (mu_{i+1} - mu_i) < 1 for every i >= N, if certifiable.
  using SpacingFn = std::function<std::optional<std::size_t>(unsigned long m)>;

  struct Info {
    std::string id;
    MoldKind kind = MoldKind::explicit_rule;
    std::size_t granularity = 0;
    std::string description;
  };

  static Mold closed_form(Info info, ElementFn element, IndexFn index = {}, SpacingFn spacing = {},
                          std::optional<PeriodStructure<T>> periods = std::nullopt) {
    auto impl = std::make_shared<Impl>();
    impl->info = std::move(info);
    impl->element = std::move(element);
    impl->index = std::move(index);
    impl->spacing = std::move(spacing);
    impl->periods = std::move(periods);
    return Mold(std::move(impl));
  }

  static Mold sequential(Info info, ExtendFn extend, IndexFn index = {}, SpacingFn spacing = {},
                         std::optional<PeriodStructure<T>> periods = std::nullopt) {
    auto impl = std::make_shared<Impl>();
    impl->info = std::move(info);
    impl->extend = std::move(extend);
    impl->index = std::move(index);
    impl->spacing = std::move(spacing);
    impl->periods = std::move(periods);
    return Mold(std::move(impl));
  }

  const std::string& id() const { return impl_->info.id; }
  MoldKind kind() const { return impl_->info.kind; }
  std::size_t granularity() const { return impl_->info.granularity; }
  const std::string& description() const { return impl_->info.description; }
  const std::optional<PeriodStructure<T>>& periods() const { return impl_->periods; }

  T element(std::size_t i) const {
    if (impl_->element) {
      return impl_->element(i);
    }
    std::lock_guard<std::mutex> lock(impl_->mutex);
    ensure_locked(i + 1);
    return impl_->cache[i];
  }

  std::vector<T> prefix(std::size_t n) const {
    std::vector<T> out;
    out.reserve(n);
    if (impl_->element) {
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(impl_->element(i));
      }
      return out;
    }
    std::lock_guard<std::mutex> lock(impl_->mutex);
    ensure_locked(n);
    out.assign(impl_->cache.begin(), impl_->cache.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
  }

  // Index k with mu_k == v, or nullopt when v is not an element.
  std::optional<std::size_t> index_of(const T& v) const {
    if (impl_->index) {
      return impl_->index(v);
    }
    return search_index(v);
  }

  std::optional<std::size_t> spacing_start(unsigned long m) const {
    if (impl_->spacing) {
      return impl_->spacing(m);
    }
    if (impl_->periods) {
      const auto& ps = *impl_->periods;
      const T one = from_integer<T>(1);
      // max_gap decreases geometrically; bound the search generously.
      for (std::size_t ell = 0; ell < 4096; ++ell) {
        if (scale(ps.max_gap(ell), m) < one) {
          return ps.start_index(ell);
        }
      }
    }
    return std::nullopt;
  }

 private:
  struct Impl {
    Info info;
    ElementFn element;
    ExtendFn extend;
    IndexFn index;
    SpacingFn spacing;
    std::optional<PeriodStructure<T>> periods;
    mutable std::mutex mutex;
    std::vector<T> cache;
  };

  explicit Mold(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  void ensure_locked(std::size_t n) const {
    while (impl_->cache.size() < n) {
      std::size_t before = impl_->cache.size();
      impl_->extend(impl_->cache);
      if (impl_->cache.size() == before) {
        throw std::logic_error("mold generator made no progress");
      }
    }
  }

  // Galloping search for the first index whose element is >= v.
  std::optional<std::size_t> search_index(const T& v) const {
    if (v < element(0)) {
      return std::nullopt;
    }
    std::size_t hi = 1;
    while (element(hi) < v) {
      hi *= 2;
    }
    std::size_t lo = hi / 2;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (element(mid) < v) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (element(lo) == v) {
      return lo;
    }
    return std::nullopt;
  }

  std::shared_ptr<Impl> impl_;
};

}  // namespace tempered
