#pragma once

#include <cstdint>

namespace hurwitz {

bool is_rational_prime(std::int64_t n);

/// Euler's totient, by trial division.
std::int64_t totient(std::int64_t n);

/// Floor division for signed operands (rounds toward negative infinity).
std::int64_t floor_div(std::int64_t num, std::int64_t den);

/// Least non-negative residue of n modulo m (m > 0).
std::int64_t mod_floor(std::int64_t n, std::int64_t m);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Throws UnsupportedPrime unless p is an odd rational prime.
void require_odd_prime(std::int64_t p);

} // namespace hurwitz
