#include "arbordyn/intfactor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "arbordyn/errors.hpp"
#include "arbordyn/nt.hpp"

namespace arbordyn {

namespace {

constexpr uint64_t kTrialLimit = 1'000'000;

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Pollard-Brent rho with an iteration budget; returns a nontrivial factor of
/// the odd composite n, or 0 on budget exhaustion.
mpz_class brent_rho(const mpz_class& n, uint64_t effort, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        mpz_class c = mpz_class(rng() % 1000 + 1);
        mpz_class y = mpz_class(rng() % 1000 + 2), x, q = 1, g = 1, ys;
        uint64_t r = 1, spent = 0;
        const uint64_t m = 128;
        while (g == 1 && spent < effort) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            for (uint64_t k = 0; k < r && g == 1 && spent < effort; k += m) {
                ys = y;
                uint64_t lim = std::min(m, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    mpz_class d = x - y;
                    q = q * (d < 0 ? -d : d) % n;
                }
                spent += lim;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                mpz_class d = x - ys;
                mpz_gcd(g.get_mpz_t(), (d < 0 ? mpz_class(-d) : d).get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

}  // namespace

IntFactorization factor_integer(const mpz_class& n, uint64_t effort, uint64_t seed) {
    if (n == 0) throw undefined("factorization of zero");
    mpz_class m = abs(n);
    IntFactorization out;
    if (m == 1) return out;
    std::map<mpz_class, uint64_t> primes;
    // Trial division.
    for (uint64_t p = 2; p <= kTrialLimit && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (p * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++primes[mpz_class(p)];
        }
    }
    std::mt19937_64 rng(seed);
    std::vector<mpz_class> stack;
    if (m > 1) stack.push_back(m);
    while (!stack.empty()) {
        mpz_class v = stack.back();
        stack.pop_back();
        if (is_probable_prime(v)) {
            ++primes[v];
            continue;
        }
        // Perfect powers first (rho degenerates on them).
        if (mpz_perfect_power_p(v.get_mpz_t())) {
            for (uint64_t k = 2; k <= mpz_sizeinbase(v.get_mpz_t(), 2); ++k) {
                mpz_class r;
                if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k)) {
                    for (uint64_t i = 0; i < k; ++i) stack.push_back(r);
                    v = 1;
                    break;
                }
            }
            if (v == 1) continue;
        }
        mpz_class g = brent_rho(v, effort, rng);
        if (g == 0) {
            out.cofactors.push_back(v);
            out.complete = false;
            continue;
        }
        stack.push_back(g);
        stack.push_back(v / g);
    }
    out.primes.assign(primes.begin(), primes.end());
    // Merge duplicate cofactors deterministically.
    std::sort(out.cofactors.begin(), out.cofactors.end());
    return out;
}

std::vector<mpz_class> gcd_refine(std::vector<mpz_class> values) {
    std::vector<mpz_class> basis;
    for (auto v : values) {
        v = abs(v);
        if (v <= 1) continue;
        std::vector<mpz_class> queue{v};
        while (!queue.empty()) {
            mpz_class x = queue.back();
            queue.pop_back();
            if (x == 1) continue;
            bool split = false;
            for (size_t i = 0; i < basis.size(); ++i) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), basis[i].get_mpz_t(), x.get_mpz_t());
                if (g == 1) continue;
                if (g != basis[i]) {
                    mpz_class rest = basis[i] / g;
                    basis[i] = g;
                    queue.push_back(rest);
                }
                // x = g * (x/g); the g part is now covered by basis[i].
                queue.push_back(x / g);
                split = true;
                break;
            }
            if (!split) basis.push_back(x);
        }
    }
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

std::vector<uint64_t> odd_word_prime_divisors(const mpz_class& n, uint64_t effort) {
    IntFactorization f = factor_integer(n, effort);
    if (!f.complete) throw cap_exceeded("incomplete integer factorization of a candidate");
    std::vector<uint64_t> out;
    for (const auto& [p, mult] : f.primes) {
        (void)mult;
        if (p == 2) continue;
        if (!p.fits_ulong_p() || p.get_ui() >= (1ull << 62))
            throw cap_exceeded("candidate prime exceeds the word-size field limit");
        out.push_back(p.get_ui());
    }
    return out;
}

}  // namespace arbordyn
