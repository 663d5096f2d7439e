#include "tempered/bigint.hpp"

#include <stdexcept>

namespace tempered {

std::size_t bit_length(const BigInt& x) {
  if (sgn(x) == 0) {
    return 0;
  }
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt isqrt(const BigInt& x) {
  if (sgn(x) < 0) {
    throw std::domain_error("isqrt of a negative integer");
  }
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (sgn(b) == 0) {
    throw std::domain_error("division by zero");
  }
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt pow(const BigInt& a, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

bool is_power_of_two(const BigInt& x) {
  return sgn(x) > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

int sign(const BigInt& x) {
  return sgn(x);
}

std::string to_string(const BigInt& x) {
  return x.get_str();
}

std::int64_t to_int64(const BigInt& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) {
    throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  }
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

}  // namespace tempered
