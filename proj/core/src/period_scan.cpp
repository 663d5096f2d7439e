#include "tempered/period_scan.hpp"

#include "tempered/fractal.hpp"
#include "tempered/thread_pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempered {

bool PeriodScanResult::certified() const {
  return std::all_of(certificate.begin(), certificate.end(),
                     [](const CertificateCheck& c) { return c.holds; });
}

ScanPoint scan_period_point(const ExactRational& p, std::size_t prefix) {
  const std::vector<ExactRational> first{ExactRational(0), p};
  std::vector<ExactRational> elements;
  std::vector<ExactRational> offsets{ExactRational(0)};
  long periods = 0;
  while (elements.size() < prefix) {
    for (const auto& t : offsets) {
      elements.push_back(ExactRational(periods) + t);
    }
    offsets = subdivide_offsets(offsets, first);
    ++periods;
  }
  // Work over a common denominator so that the inner loop is integer-only.
  BigInt den = 1;
  for (const auto& e : elements) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.denominator().get_mpz_t());
  }
  std::vector<BigInt> xs;
  xs.reserve(elements.size() + 1);
  for (const auto& e : elements) {
    xs.push_back(e.numerator() * (den / e.denominator()));
  }
  const BigInt top = BigInt(periods) * den;  // next period start, itself an element
  xs.push_back(top);

  BigInt min_spacing = xs[1] - xs[0];
  for (std::size_t i = 2; i + 1 < xs.size(); ++i) {
    min_spacing = std::min(min_spacing, BigInt(xs[i] - xs[i - 1]));
  }
  BigInt defect = 0;
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      BigInt s = xs[i] + xs[j];
      if (s >= top) {
        break;
      }
      auto it = std::lower_bound(xs.begin(), xs.end(), s);
      BigInt d = *it - s;
      if (it != xs.begin()) {
        d = std::min(d, BigInt(s - *(it - 1)));
      }
      if (d > defect) {
        defect = d;
      }
    }
  }
  ScanPoint out;
  out.p = p;
  out.defect = ExactRational(defect, den);
  out.min_spacing = ExactRational(min_spacing, den);
  // A sum identifies an element unambiguously when it is closer than half
  // the finest spacing.
  out.survives = 2 * defect < min_spacing;
  return out;
}

namespace {

struct QuadraticRoots {
  // Roots (num / den) with num in Z[tau]; only filled for degree <= 2
  // polynomials whose roots lie in Q or Q(sqrt 5).
  std::vector<std::pair<GoldenNumber, BigInt>> roots;
  bool real = true;
  bool representable = true;
};

QuadraticRoots real_roots(const IntPolynomial& f) {
  QuadraticRoots out;
  if (f.degree() == 1) {
    BigInt c0 = f.coefficient(0);
    BigInt c1 = f.coefficient(1);
    if (sgn(c1) < 0) {
      c0 = -c0;
      c1 = -c1;
    }
    out.roots.emplace_back(GoldenNumber(BigInt(-c0), BigInt(0)), c1);
    return out;
  }
  if (f.degree() != 2) {
    out.representable = false;
    return out;
  }
  BigInt a = f.coefficient(2);
  BigInt b = f.coefficient(1);
  BigInt c = f.coefficient(0);
  if (sgn(a) < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  BigInt disc = b * b - 4 * a * c;
  if (sgn(disc) < 0) {
    out.real = false;
    return out;
  }
  BigInt d2 = 2 * a;
  BigInt r = isqrt(disc);
  if (r * r == disc) {
    out.roots.emplace_back(GoldenNumber(BigInt(-b - r), BigInt(0)), d2);
    out.roots.emplace_back(GoldenNumber(BigInt(-b + r), BigInt(0)), d2);
    return out;
  }
  if (disc % 5 != 0 || [&] {
        BigInt k2 = disc / 5;
        BigInt k = isqrt(k2);
        return k * k != k2;
      }()) {
    out.representable = false;
    return out;
  }
  BigInt k = isqrt(BigInt(disc / 5));
  // sqrt(5) = 1 + 2 tau.
  GoldenNumber sqrt_disc(k, BigInt(2 * k));
  out.roots.emplace_back(GoldenNumber(BigInt(-b), BigInt(0)) - sqrt_disc, d2);
  out.roots.emplace_back(GoldenNumber(BigInt(-b), BigInt(0)) + sqrt_disc, d2);
  return out;
}

// num / den in the open interval (1/2, 1), den > 0.
bool in_open_half_one(const GoldenNumber& num, const BigInt& den) {
  GoldenNumber twice = num * GoldenNumber(2);
  return GoldenNumber(den, BigInt(0)) < twice && num < GoldenNumber(den, BigInt(0));
}

bool is_root(const IntPolynomial& f, const GoldenNumber& num, const BigInt& den) {
  // den^deg * f(num / den) computed in Z[tau].
  const auto& cs = f.coefficients();
  GoldenNumber acc(0);
  const int deg = f.degree();
  for (int i = 0; i <= deg; ++i) {
    GoldenNumber term = GoldenNumber(cs[static_cast<std::size_t>(i)], BigInt(0));
    for (int e = 0; e < i; ++e) {
      term = term * num;
    }
    for (int e = i; e < deg; ++e) {
      term = term * GoldenNumber(den, BigInt(0));
    }
    acc = acc + term;
  }
  return acc.sign() == 0;
}

}  // namespace

std::vector<CertificateCheck> golden_period_certificate() {
  std::vector<CertificateCheck> checks;
  const IntPolynomial p = IntPolynomial::variable();
  const IntPolynomial one(1);
  const IntPolynomial golden_min = p * p + p - one;  // p^2 + p - 1
  const GoldenNumber tau = GoldenNumber::tau();

  checks.push_back({"tau satisfies p^2+p-1 = 0 exactly", golden_min.evaluate(tau).sign() == 0});
  checks.push_back({"tau identities p^2 = 1-p, 1 = p+p^2, 2p = 1+p^3",
                    tau * tau == GoldenNumber(1) - tau && tau + tau * tau == GoldenNumber(1) &&
                        tau * GoldenNumber(2) == GoldenNumber(1) + tau * tau * tau});

  // Second and third periods symbolically in p.
  std::vector<IntPolynomial> second;
  for (std::uint64_t n = 0; n < 4; ++n) {
    second.push_back(f_ell(2, n, p));
  }
  std::vector<IntPolynomial> third;
  for (std::uint64_t n = 0; n < 8; ++n) {
    third.push_back(f_ell(3, n, p));
  }
  const IntPolynomial p2 = p * p;
  const IntPolynomial p3 = p2 * p;
  checks.push_back({"second period offsets are {0, p^2, p, 2p-p^2}",
                    second == std::vector<IntPolynomial>{IntPolynomial(0), p2, p,
                                                         IntPolynomial(2) * p - p2}});
  checks.push_back(
      {"third period offsets are {0, p^3, p^2, 2p^2-p^3, p, p+p^2-p^3, 2p-p^2, 3p-3p^2+p^3}",
       third == std::vector<IntPolynomial>{IntPolynomial(0), p3, p2,
                                           IntPolynomial(2) * p2 - p3, p, p + p2 - p3,
                                           IntPolynomial(2) * p - p2,
                                           IntPolynomial(3) * p - IntPolynomial(3) * p2 + p3}});

  // p < 1/2: 2+2p lies in the second period and can only equal 2 + (2p - p^2).
  checks.push_back({"p < 1/2 branch: 2p = 2p-p^2 forces p^2 = 0",
                    (IntPolynomial(2) * p - second[3]) == p2});

  // p > 1/2: 2+2p = 3 + t for t among the first three nonzero third-period offsets.
  // Each candidate is (3 + t) - (2 + 2p) = t - 2p + 1, compared up to sign.
  std::vector<IntPolynomial> candidates;
  for (std::size_t n = 1; n <= 3; ++n) {
    candidates.push_back(third[n] - IntPolynomial(2) * p + one);
  }
  const std::vector<IntPolynomial> stated{p3 - IntPolynomial(2) * p + one,
                                          p2 - IntPolynomial(2) * p + one,
                                          p3 - IntPolynomial(2) * p2 + IntPolynomial(2) * p - one};
  const IntPolynomial pm1 = p - one;
  const std::vector<std::vector<IntPolynomial>> factors{
      {golden_min, pm1}, {pm1, pm1}, {p2 - p + one, pm1}};
  std::vector<std::pair<GoldenNumber, BigInt>> admissible;
  for (std::size_t c = 0; c < 3; ++c) {
    bool matches = candidates[c] == stated[c] || candidates[c] == -stated[c];
    checks.push_back({"candidate equation " + std::to_string(c + 1) + " is " + stated[c].str(),
                      matches});
    IntPolynomial prod(1);
    std::string fs;
    for (const auto& f : factors[c]) {
      prod = prod * f;
      fs += "(" + f.str() + ")";
    }
    checks.push_back({stated[c].str() + " = " + fs, prod == stated[c]});
    for (const auto& f : factors[c]) {
      QuadraticRoots rr = real_roots(f);
      if (!rr.representable) {
        checks.push_back({"roots of " + f.str() + " are representable", false});
        continue;
      }
      for (const auto& [num, den] : rr.roots) {
        if (!is_root(f, num, den)) {
          checks.push_back({"computed root of " + f.str() + " is a root", false});
        }
        if (in_open_half_one(num, den)) {
          bool seen = false;
          for (const auto& [n2, d2] : admissible) {
            seen = seen || (num * GoldenNumber(d2, BigInt(0)) == n2 * GoldenNumber(den, BigInt(0)));
          }
          if (!seen) {
            admissible.emplace_back(num, den);
          }
        }
      }
    }
  }
  bool unique_tau = admissible.size() == 1 &&
                    admissible[0].first == tau * GoldenNumber(admissible[0].second, BigInt(0));
  checks.push_back({"the unique root in (1/2, 1) among all candidates is tau", unique_tau});
  return checks;
}

PeriodScanResult period_uniqueness_scan(const ExactRational& grid_step, std::size_t prefix,
                                        unsigned threads) {
  if (!(grid_step.sign() > 0 && grid_step < ExactRational(BigInt(1), BigInt(10)))) {
    throw std::invalid_argument("grid step must satisfy 0 < step < 0.1");
  }
  if (prefix < 4) {
    throw std::invalid_argument("prefix must be at least 4");
  }
  PeriodScanResult result;
  result.grid_step = grid_step;
  result.prefix = prefix;
  const ExactRational half(BigInt(1), BigInt(2));
  std::vector<ExactRational> grid;
  for (long k = 1;; ++k) {
    ExactRational p = grid_step * ExactRational(k);
    if (!(p < ExactRational(1))) {
      break;
    }
    if (p == half) {
      continue;
    }
    grid.push_back(p);
  }
  result.points.resize(grid.size());
  parallel_for(grid.size(), threads,
               [&](std::size_t i) { result.points[i] = scan_period_point(grid[i], prefix); });
  const GoldenNumber tau = GoldenNumber::tau();
  for (const auto& pt : result.points) {
    if (!pt.survives) {
      continue;
    }
    result.survivors.push_back(pt.p);
    // Attribute the survivor to the nearer of the two exact closed cases:
    // the bisectional p = 1/2 and the golden p = tau.
    GoldenNumber gp(pt.p.numerator(), BigInt(0));
    GoldenNumber den(pt.p.denominator(), BigInt(0));
    GoldenNumber to_tau = gp - tau * den;  // den * (p - tau)
    GoldenNumber to_half = gp * GoldenNumber(2) - den;  // 2 den * (p - 1/2)
    if (to_tau.sign() < 0) {
      to_tau = -to_tau;
    }
    if (to_half.sign() < 0) {
      to_half = -to_half;
    }
    if (to_half < to_tau * GoldenNumber(2)) {
      result.bisectional_survivors.push_back(pt.p);
    } else {
      result.golden_survivors.push_back(pt.p);
    }
  }
  std::size_t gen = 0;
  for (std::size_t size = 1; gen < prefix; size *= 2) {
    gen += size;
  }
  result.generated_elements = gen;
  result.certificate = golden_period_certificate();
  return result;
}

}  // namespace tempered
