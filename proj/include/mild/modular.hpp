#ifndef MILD_MODULAR_HPP
#define MILD_MODULAR_HPP

#include <cstdint>
#include <vector>

namespace mild {

// Small exact number-theory kit. Everything here is deterministic and
// desk-scale: trial-division primality, brute-force discrete logs.

bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Prime factors of n, each listed once, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Smallest primitive root modulo the odd prime ell.
std::uint64_t smallest_primitive_root(std::uint64_t ell);

// Smallest primitive root modulo ell that is strictly larger than `after`.
std::uint64_t next_primitive_root(std::uint64_t ell, std::uint64_t after);

// Brute-force k with g^k = x (mod ell), 0 <= k < ell-1. Requires g primitive
// and ell below the desk-scale bound (2^21); throws otherwise.
std::uint64_t discrete_log(std::uint64_t g, std::uint64_t x, std::uint64_t ell);

} // namespace mild

#endif
