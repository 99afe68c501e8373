#include "arbordyn/nt.hpp"

#include "arbordyn/errors.hpp"

namespace arbordyn::nt {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    int64_t t = 0, nt = 1;
    uint64_t r = m, nr = a % m;
    while (nr != 0) {
        uint64_t q = r / nr;
        int64_t tmp = t - static_cast<int64_t>(q) * nt;
        t = nt; nt = tmp;
        uint64_t tmpr = r - q * nr;
        r = nr; nr = tmpr;
    }
    if (r != 1) throw division_by_zero("element not invertible mod " + std::to_string(m));
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sprp bases covering all n < 2^64 (Sinclair set).
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t prev_prime_u64(uint64_t n) {
    if (n < 2) throw undefined("no prime below 2");
    if (n == 2) return 2;
    uint64_t c = (n % 2 == 0) ? n - 1 : n;
    while (!is_prime_u64(c)) c -= 2;
    return c;
}

std::vector<uint64_t> odd_primes_up_to(uint64_t cap) {
    std::vector<uint64_t> out;
    if (cap < 3) return out;
    std::vector<bool> sieve(cap + 1, true);
    for (uint64_t i = 3; i * i <= cap; i += 2)
        if (sieve[i])
            for (uint64_t j = i * i; j <= cap; j += 2 * i) sieve[j] = false;
    for (uint64_t i = 3; i <= cap; i += 2)
        if (sieve[i]) out.push_back(i);
    return out;
}

}  // namespace arbordyn::nt
