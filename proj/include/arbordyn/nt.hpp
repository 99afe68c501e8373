#pragma once

#include <cstdint>
#include <vector>

namespace arbordyn::nt {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    if (m <= 0xFFFFFFFFull) return (a * b) % m;
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + m - b; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);

/// Modular inverse; throws DivisionByZero if gcd(a, m) != 1.
uint64_t invmod(uint64_t a, uint64_t m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Largest prime <= n (n >= 2).
uint64_t prev_prime_u64(uint64_t n);

/// Odd primes in (2, cap], ascending.
std::vector<uint64_t> odd_primes_up_to(uint64_t cap);

}  // namespace arbordyn::nt
