#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace arbordyn {

/// Factorization of |n| into primes, with any leftover composite cofactors
/// reported instead of silently dropped. Primes ascending; multiplicities
/// exact. complete == cofactors.empty().
struct IntFactorization {
    std::vector<std::pair<mpz_class, uint64_t>> primes;
    std::vector<mpz_class> cofactors;
    bool complete = true;
};

inline constexpr uint64_t kDefaultIntFactorEffort = 1u << 20;

/// Trial division up to 10^6, then Pollard-Brent rho with at most `effort`
/// iterations per composite, recursively. Primality by Miller-Rabin
/// (mpz_probab_prime_p, 40 rounds). Deterministic for a fixed seed.
/// n must be nonzero; the sign is discarded.
IntFactorization factor_integer(const mpz_class& n, uint64_t effort = kDefaultIntFactorEffort,
                                uint64_t seed = 0x41524244594eull);

/// Split a set of integers into pairwise-coprime parts by repeated gcds and
/// merge the extra known atoms in; useful for refining unfinished cofactors
/// against factors found elsewhere.
std::vector<mpz_class> gcd_refine(std::vector<mpz_class> values);

/// The distinct odd prime divisors of |n| that fit in a word, via
/// factor_integer; throws CapExceeded if the factorization is incomplete or
/// a prime exceeds 2^62 (callers need the primes as characteristics).
std::vector<uint64_t> odd_word_prime_divisors(const mpz_class& n, uint64_t effort = kDefaultIntFactorEffort);

}  // namespace arbordyn
