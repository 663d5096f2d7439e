#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tempered {

using BigInt = mpz_class;

// Number of bits needed to represent |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

// floor(sqrt(x)) for x >= 0.
BigInt isqrt(const BigInt& x);

// floor(a / b) for b != 0 (rounds toward negative infinity).
BigInt floor_div(const BigInt& a, const BigInt& b);

// a^e for e >= 0.
BigInt pow(const BigInt& a, unsigned long e);

// 2^e.
BigInt pow2(unsigned long e);

bool is_power_of_two(const BigInt& x);

int sign(const BigInt& x);

std::string to_string(const BigInt& x);

// Converts to int64; throws std::overflow_error if it does not fit.
std::int64_t to_int64(const BigInt& x);

}  // namespace tempered
