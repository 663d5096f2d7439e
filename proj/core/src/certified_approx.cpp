#include "tempered/certified_approx.hpp"

#include <stdexcept>

namespace tempered {

CertifiedApprox::CertifiedApprox(Enclose enclose, unsigned initial_bits)
    : enclose_(std::move(enclose)), bits_(initial_bits) {
  auto [lo, hi] = enclose_(bits_);
  lower_ = std::move(lo);
  upper_ = std::move(hi);
}

CertifiedApprox CertifiedApprox::exact(const ExactRational& value) {
  return CertifiedApprox([value](unsigned) { return std::pair{value, value}; }, 0);
}

void CertifiedApprox::refine() {
  if (is_point()) {
    return;
  }
  ExactRational old = width();
  unsigned next = bits_ < 8 ? 16 : bits_ * 2;
  while (true) {
    auto [lo, hi] = enclose_(next);
    // Intersect with the previous enclosure; both contain the true value.
    if (lo < lower_) {
      lo = lower_;
    }
    if (hi > upper_) {
      hi = upper_;
    }
    if (hi - lo < old) {
      lower_ = std::move(lo);
      upper_ = std::move(hi);
      bits_ = next;
      return;
    }
    next *= 2;
  }
}

void CertifiedApprox::refine_below(const ExactRational& w) {
  while (!(width() < w)) {
    refine();
  }
}

CertifiedApprox CertifiedApprox::shifted(const ExactRational& offset) const {
  Enclose inner = enclose_;
  return CertifiedApprox(
      [inner, offset](unsigned bits) {
        auto [lo, hi] = inner(bits);
        return std::pair{lo + offset, hi + offset};
      },
      bits_);
}

std::pair<ExactRational, ExactRational> enclose(const GoldenNumber& x, unsigned bits) {
  // a + b tau = a - b/2 + (b sqrt 5)/2.
  ExactRational base = ExactRational(x.a()) - ExactRational(x.b(), BigInt(2));
  if (x.is_integer()) {
    return {base, base};
  }
  BigInt scale = pow2(bits);
  BigInt s = isqrt(BigInt(5 * x.b() * x.b() * scale * scale));
  BigInt lo_num;
  BigInt hi_num;
  if (sgn(x.b()) > 0) {
    lo_num = s;
    hi_num = s + 1;
  } else {
    lo_num = -s - 1;
    hi_num = -s;
  }
  BigInt den = scale * 2;
  return {base + ExactRational(lo_num, den), base + ExactRational(hi_num, den)};
}

std::pair<ExactRational, ExactRational> enclose(const LogValue& x, unsigned bits) {
  BigInt k = x.floor();
  if (x.is_integer()) {
    ExactRational v(k);
    return {v, v};
  }
  const long kf = x.floor_long();
  // Fixed-point bit extraction of log2(y), y = X / 2^k in (1, 2), with a
  // rigorous [lo, hi] bracket on y * 2^P. A straddle of the threshold 2 means
  // the precision was insufficient; retry with more guard bits.
  unsigned guard = 64;
  while (true) {
    const unsigned long P = bits + guard;
    BigInt lo;
    BigInt hi;
    if (static_cast<long>(P) >= kf) {
      lo = x.power() << static_cast<mp_bitcnt_t>(P - static_cast<unsigned long>(kf));
      hi = lo;
    } else {
      lo = x.power() >> static_cast<mp_bitcnt_t>(static_cast<unsigned long>(kf) - P);
      hi = lo + 1;
    }
    const BigInt two = pow2(P + 1);
    BigInt acc = 0;
    bool ok = true;
    for (unsigned step = 0; step < bits; ++step) {
      lo = (lo * lo) >> static_cast<mp_bitcnt_t>(P);
      BigInt sq = hi * hi;
      BigInt q = sq >> static_cast<mp_bitcnt_t>(P);
      if ((q << static_cast<mp_bitcnt_t>(P)) != sq) {
        q += 1;
      }
      hi = std::move(q);
      acc <<= 1;
      if (lo >= two) {
        acc += 1;
        lo >>= 1;
        BigInt h2 = hi >> 1;
        if ((h2 << 1) != hi) {
          h2 += 1;
        }
        hi = std::move(h2);
      } else if (hi >= two) {
        ok = false;
        break;
      }
    }
    if (ok) {
      BigInt den = pow2(bits);
      ExactRational low = ExactRational(k) + ExactRational(acc, den);
      ExactRational high = ExactRational(k) + ExactRational(BigInt(acc + 1), den);
      return {low, high};
    }
    guard *= 2;
  }
}

CertifiedApprox approximate(const ExactRational& x) {
  return CertifiedApprox::exact(x);
}

CertifiedApprox approximate(const GoldenNumber& x) {
  if (x.is_integer()) {
    return CertifiedApprox::exact(ExactRational(x.a()));
  }
  return CertifiedApprox([x](unsigned bits) { return enclose(x, bits); });
}

CertifiedApprox approximate(const LogValue& x) {
  if (x.is_integer()) {
    return CertifiedApprox::exact(ExactRational(x.floor()));
  }
  return CertifiedApprox([x](unsigned bits) { return enclose(x, bits); });
}

std::string to_string(ProvenOrder o) {
  switch (o) {
    case ProvenOrder::less:
      return "less";
    case ProvenOrder::equal:
      return "equal";
    case ProvenOrder::greater:
      return "greater";
    case ProvenOrder::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ProvenOrder compare_enclosures(CertifiedApprox x, bool x_exact, CertifiedApprox y, bool y_exact,
                               const ExactRational& gap) {
  if (gap.sign() <= 0) {
    throw std::invalid_argument("cross comparison gap must be positive");
  }
  if (x_exact && y_exact) {
    auto c = x.lower() <=> y.lower();
    return c < 0 ? ProvenOrder::less : (c > 0 ? ProvenOrder::greater : ProvenOrder::equal);
  }
  while (true) {
    if (x.upper() < y.lower()) {
      return ProvenOrder::less;
    }
    if (x.lower() > y.upper()) {
      return ProvenOrder::greater;
    }
    if (x.width() < gap && y.width() < gap) {
      return ProvenOrder::inconclusive;
    }
    x.refine();
    y.refine();
  }
}

ProvenOrder cross_compare(const GoldenNumber& x, const LogValue& y, const ExactRational& gap) {
  return cross_compare_values(x, y, gap);
}

}  // namespace tempered
