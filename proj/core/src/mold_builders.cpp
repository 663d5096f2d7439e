#include "tempered/mold_builders.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tempered {

std::string to_string(MoldKind kind) {
  switch (kind) {
    case MoldKind::metric:
      return "metric";
    case MoldKind::golden_fractal:
      return "golden-fractal";
    case MoldKind::perfect_fractal:
      return "perfect-fractal";
    case MoldKind::generic_fractal:
      return "generic-fractal";
    case MoldKind::explicit_rule:
      return "explicit";
  }
  return "explicit";
}

std::string to_string(MoldProperty p) {
  switch (p) {
    case MoldProperty::mold_axioms:
      return "mold-axioms";
    case MoldProperty::metric:
      return "metric";
    case MoldProperty::fractal:
      return "fractal";
    case MoldProperty::even_filterable:
      return "even-filterable";
    case MoldProperty::closure:
      return "closure";
  }
  return "closure";
}

std::string to_string(Verdict v) {
  return v == Verdict::holds_on_prefix ? "holds-on-prefix" : "fails";
}

std::size_t fractal_period_start(std::size_t granularity, std::size_t ell) {
  std::size_t start = 0;
  std::size_t size = 1;
  for (std::size_t k = 0; k < ell; ++k) {
    start += size;
    size *= granularity;
  }
  return start;
}

LogValue metric_element(std::size_t i) {
  return LogValue(1, BigInt(static_cast<unsigned long>(i + 1)));
}

GoldenNumber golden_fractal_element(std::size_t i) {
  const std::uint64_t n1 = static_cast<std::uint64_t>(i) + 1;
  const unsigned ell = static_cast<unsigned>(std::bit_width(n1) - 1);
  const std::uint64_t n = n1 - (std::uint64_t{1} << ell);
  GoldenNumber f = f_ell(ell, n, GoldenNumber::tau());
  return f + GoldenNumber(static_cast<long>(ell));
}

std::optional<std::size_t> golden_fractal_index(const GoldenNumber& v) {
  if (v.sign() < 0) {
    return std::nullopt;
  }
  BigInt fl = v.floor();
  if (fl > 62) {
    return std::nullopt;
  }
  const unsigned ell = static_cast<unsigned>(to_int64(fl));
  GoldenNumber x = v - GoldenNumber(static_cast<long>(ell));
  const GoldenNumber tau = GoldenNumber::tau();
  const GoldenNumber inv_tau = GoldenNumber::phi();                  // 1 / tau
  const GoldenNumber inv_tau2(BigInt(2), BigInt(1));                 // 1 / tau^2 = 2 + tau
  std::uint64_t n = 0;
  // f_l(n) < tau exactly when the leading branch is p * f_{l-1}.
  for (unsigned level = ell; level > 0; --level) {
    n <<= 1U;
    if (x < tau) {
      x = x * inv_tau;
    } else {
      n |= 1U;
      x = (x - tau) * inv_tau2;
    }
  }
  if (x.sign() != 0) {
    return std::nullopt;
  }
  return static_cast<std::size_t>((std::uint64_t{1} << ell) - 1 + n);
}

ExactRational perfect_fractal_element(std::size_t l, std::size_t i) {
  if (l < 2) {
    throw std::invalid_argument("perfect fractal molds need granularity >= 2");
  }
  if (i == 0) {
    return ExactRational(0);
  }
  std::size_t k = 1;
  std::size_t start = 1;
  BigInt size(static_cast<unsigned long>(l));
  while (BigInt(static_cast<unsigned long>(i - start)) >= size) {
    start += static_cast<std::size_t>(to_int64(size));
    size *= static_cast<unsigned long>(l);
    ++k;
  }
  return ExactRational(static_cast<long>(k)) +
         ExactRational(BigInt(static_cast<unsigned long>(i - start)), size);
}

ExactRational quarters_element(std::size_t i) {
  if (i == 0) {
    return ExactRational(0);
  }
  std::size_t k = 1;
  std::size_t start = 1;
  std::size_t size = 4;
  while (i - start >= size) {
    start += size;
    size *= 2;
    ++k;
  }
  return ExactRational(static_cast<long>(k)) +
         ExactRational(BigInt(static_cast<unsigned long>(i - start)),
                       BigInt(static_cast<unsigned long>(size)));
}

namespace {

// Index of a rational in a mold whose period k >= 1 consists of the
// multiples of 1 / den(k) in [k, k+1), starting at index start(k).
template <class DenFn, class StartFn>
std::optional<std::size_t> uniform_period_index(const ExactRational& v, DenFn den, StartFn start) {
  if (v.sign() < 0) {
    return std::nullopt;
  }
  if (v.sign() == 0) {
    return 0;
  }
  BigInt k = v.floor();
  if (k < 1 || k > 40) {
    return std::nullopt;
  }
  const std::size_t kk = static_cast<std::size_t>(to_int64(k));
  ExactRational j = v.frac() * ExactRational(den(kk));
  if (!j.is_integer()) {
    return std::nullopt;
  }
  return start(kk) + static_cast<std::size_t>(to_int64(j.numerator()));
}

}  // namespace

Mold<LogValue> metric_mold() {
  Mold<LogValue>::Info info{"L", MoldKind::metric, 2, "metric mold log2(i+1)"};
  auto index = [](const LogValue& v) -> std::optional<std::size_t> {
    // log2(X) = log2(i + 1) has index X - 1.
    if (!mpz_fits_slong_p(v.power().get_mpz_t())) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(to_int64(v.power()) - 1);
  };
  auto spacing = [](unsigned long m) -> std::optional<std::size_t> {
    // Smallest n with m (lambda_{n+1} - lambda_n) < 1, i.e. (n+2)^m < 2 (n+1)^m.
    for (std::size_t n = 0;; ++n) {
      BigInt a = tempered::pow(BigInt(static_cast<unsigned long>(n + 2)), m);
      BigInt b = 2 * tempered::pow(BigInt(static_cast<unsigned long>(n + 1)), m);
      if (a < b) {
        return n;
      }
    }
  };
  return Mold<LogValue>::closed_form(std::move(info), metric_element, index, spacing);
}

Mold<GoldenNumber> golden_fractal_mold() {
  Mold<GoldenNumber>::Info info{"F", MoldKind::golden_fractal, 2,
                                "golden fractal mold with first period {1, phi}"};
  PeriodStructure<GoldenNumber> periods{
      [](std::size_t ell) { return fractal_period_start(2, ell); },
      [](std::size_t ell) { return pow(GoldenNumber::tau(), ell); }};
  return Mold<GoldenNumber>::closed_form(std::move(info), golden_fractal_element,
                                         golden_fractal_index, {}, periods);
}

Mold<ExactRational> perfect_fractal_mold(std::size_t l) {
  if (l < 2) {
    throw std::invalid_argument("perfect fractal molds need granularity >= 2");
  }
  Mold<ExactRational>::Info info{"perfect-" + std::to_string(l), MoldKind::perfect_fractal, l,
                                 "perfect fractal mold of granularity " + std::to_string(l)};
  PeriodStructure<ExactRational> periods{
      [l](std::size_t ell) { return fractal_period_start(l, ell); },
      [l](std::size_t ell) {
        return ExactRational(BigInt(1), tempered::pow(BigInt(static_cast<unsigned long>(l)), ell));
      }};
  auto index = [l](const ExactRational& v) {
    return uniform_period_index(
        v, [l](std::size_t k) { return tempered::pow(BigInt(static_cast<unsigned long>(l)), k); },
        [l](std::size_t k) { return fractal_period_start(l, k); });
  };
  return Mold<ExactRational>::closed_form(
      std::move(info), [l](std::size_t i) { return perfect_fractal_element(l, i); }, index, {},
      periods);
}

Mold<ExactRational> quarters_mold() {
  Mold<ExactRational>::Info info{"Q", MoldKind::explicit_rule, 4,
                                 "quarters mold: period k is {k + j/2^(k+1)}"};
  auto start = [](std::size_t ell) -> std::size_t {
    return ell == 0 ? 0 : (std::size_t{1} << (ell + 1)) - 3;
  };
  PeriodStructure<ExactRational> periods{
      start, [](std::size_t ell) {
        return ell == 0 ? ExactRational(1) : ExactRational(BigInt(1), pow2(ell + 1));
      }};
  auto index = [start](const ExactRational& v) {
    return uniform_period_index(v, [](std::size_t k) { return pow2(k + 1); }, start);
  };
  return Mold<ExactRational>::closed_form(std::move(info), quarters_element, index, {}, periods);
}

Mold<ExactRational> decimal_mold() {
  Mold<ExactRational> base = perfect_fractal_mold(10);
  Mold<ExactRational>::Info info{"D", MoldKind::perfect_fractal, 10,
                                 "decimal mold (perfect fractal of granularity 10)"};
  return Mold<ExactRational>::closed_form(
      std::move(info), [](std::size_t i) { return perfect_fractal_element(10, i); },
      [base](const ExactRational& v) { return base.index_of(v); }, {}, base.periods());
}

template <ExactValue T>
Mold<T> fractal_mold_from_period(const PeriodSpec<T>& spec, std::string id) {
  spec.validate();
  const std::size_t l = spec.granularity();
  const std::vector<T> first = spec.offsets();
  const T rho = spec.max_proportion();
  struct State {
    std::vector<T> offsets{from_integer<T>(0)};
    std::size_t period = 0;
  };
  auto state = std::make_shared<State>();
  auto extend = [state, first](std::vector<T>& cache) {
    // Called with the mold's lock held.
    const T base = from_integer<T>(static_cast<long>(state->period));
    for (const T& t : state->offsets) {
      cache.push_back(base + t);
    }
    state->offsets = subdivide_offsets(state->offsets, first);
    ++state->period;
  };
  PeriodStructure<T> periods{[l](std::size_t ell) { return fractal_period_start(l, ell); },
                             [rho](std::size_t ell) {
                               T r = from_integer<T>(1);
                               for (std::size_t k = 0; k < ell; ++k) {
                                 r = r * rho;
                               }
                               return r;
                             }};
  typename Mold<T>::Info info{std::move(id), MoldKind::generic_fractal, l,
                              "fractal mold generated by its first period"};
  return Mold<T>::sequential(std::move(info), extend, {}, {}, periods);
}

template <ExactValue T>
GeneratedMold<T> generic_fractal_mold(const PeriodSpec<T>& spec, std::size_t count) {
  if (count < 1) {
    throw std::invalid_argument("count must be at least 1");
  }
  spec.validate();
  const std::vector<T> first = spec.offsets();
  GeneratedMold<T> out;
  std::vector<T> offsets{from_integer<T>(0)};
  while (out.elements.size() < count) {
    const T base = from_integer<T>(static_cast<long>(out.periods));
    for (const T& t : offsets) {
      out.elements.push_back(base + t);
    }
    offsets = subdivide_offsets(offsets, first);
    ++out.periods;
  }
  out.closure = check_closure_in_range(out.elements);
  return out;
}

template Mold<ExactRational> fractal_mold_from_period(const PeriodSpec<ExactRational>&,
                                                      std::string);
template Mold<GoldenNumber> fractal_mold_from_period(const PeriodSpec<GoldenNumber>&, std::string);
template GeneratedMold<ExactRational> generic_fractal_mold(const PeriodSpec<ExactRational>&,
                                                           std::size_t);
template GeneratedMold<GoldenNumber> generic_fractal_mold(const PeriodSpec<GoldenNumber>&,
                                                          std::size_t);

bool is_golden_period_literal(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') {
      t.push_back(c);
    }
  }
  return t == "1,phi" || t == "golden";
}

PeriodSpec<ExactRational> parse_rational_period(const std::string& text) {
  PeriodSpec<ExactRational> spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) {
      continue;
    }
    spec.cuts.push_back(ExactRational::parse(item));
  }
  spec.validate();
  return spec;
}

}  // namespace tempered
