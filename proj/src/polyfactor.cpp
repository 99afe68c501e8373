#include "arbordyn/polyfactor.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "arbordyn/errors.hpp"

namespace arbordyn {

namespace {

Poly modmul(const Poly& a, const Poly& b, const Poly& f) { return divmod(a * b, f).second; }

Poly powmod_poly(const Poly& base, u128 e, const Poly& f) {
    Poly r = Poly::constant(f.fd, f.fd.one());
    Poly b = divmod(base, f).second;
    while (e) {
        if (e & 1) r = modmul(r, b, f);
        b = modmul(b, b, f);
        e >>= 1;
    }
    return r;
}

Poly powmod_poly(const Poly& base, const mpz_class& e, const Poly& f) {
    Poly r = Poly::constant(f.fd, f.fd.one());
    Poly b = divmod(base, f).second;
    for (size_t i = 0, n = mpz_sizeinbase(e.get_mpz_t(), 2); i < n; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = modmul(r, b, f);
        b = modmul(b, b, f);
    }
    return r;
}

/// Random polynomial of degree < bound (nonzero).
Poly random_poly(const FieldDesc& fd, int bound, std::mt19937_64& rng) {
    Poly r{fd, {}};
    do {
        r.c.assign(bound, fd.zero());
        for (auto& v : r.c) {
            v.a = rng() % fd.p;
            v.b = fd.k == 2 ? rng() % fd.p : 0;
        }
        r.normalize();
    } while (r.is_zero());
    return r;
}

/// Equal-degree splitting of a monic squarefree product of degree-d
/// irreducibles (Cantor-Zassenhaus, odd characteristic).
void edf(const Poly& f, uint64_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (static_cast<uint64_t>(f.deg()) == d) {
        out.push_back(f);
        return;
    }
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), f.fd.p, f.fd.k);
    mpz_class exp;
    mpz_pow_ui(exp.get_mpz_t(), q.get_mpz_t(), d);
    exp = (exp - 1) / 2;
    while (true) {
        Poly a = random_poly(f.fd, f.deg(), rng);
        Poly g = gcd(a, f);
        if (!g.is_constant() && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(exact_div(f, g), d, rng, out);
            return;
        }
        Poly b = powmod_poly(a, exp, f);
        b = b - Poly::constant(f.fd, f.fd.one());
        if (b.is_zero()) continue;
        g = gcd(b, f);
        if (!g.is_constant() && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

/// Distinct-degree then equal-degree factorization of a monic squarefree f.
void factor_squarefree(const Poly& f0, std::mt19937_64& rng, std::vector<Poly>& out) {
    Poly f = f0;
    u128 q = f.fd.q();
    Poly h = divmod(Poly::t(f.fd), f).second;
    uint64_t d = 0;
    while (f.deg() > 0 && 2 * (d + 1) <= static_cast<uint64_t>(f.deg())) {
        ++d;
        h = powmod_poly(h, q, f);
        Poly g = gcd(h - Poly::t(f.fd), f);
        if (!g.is_constant()) {
            edf(g, d, rng, out);
            f = exact_div(f, g);
            h = divmod(h, f).second;
        }
    }
    if (f.deg() > 0) out.push_back(f);
}

}  // namespace

Factorization factor(const Poly& f, uint64_t seed) {
    if (f.is_zero()) throw undefined("factorization of zero");
    std::mt19937_64 rng(seed);
    Factorization out;
    out.unit = f.lc();
    auto sfd = squarefree_decomposition(f);
    for (const auto& [part, mult] : sfd.parts) {
        std::vector<Poly> irreducibles;
        factor_squarefree(part, rng, irreducibles);
        for (const auto& g : irreducibles) out.factors.emplace_back(g, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) return false;
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<Poly> monic_irreducibles(const FieldDesc& fd, uint64_t d) {
    if (d == 0) return {};
    // Trial division by lower-degree irreducibles, built recursively.
    std::vector<Poly> lower;
    for (uint64_t e = 1; 2 * e <= d; ++e) {
        auto more = monic_irreducibles(fd, e);
        lower.insert(lower.end(), more.begin(), more.end());
    }
    uint64_t q = fd.k == 1 ? fd.p : fd.p * fd.p;
    std::vector<Poly> out;
    std::vector<uint64_t> digits(d, 0);
    while (true) {
        Poly f{fd, {}};
        for (uint64_t i = 0; i < d; ++i) f.c.push_back({digits[i] % fd.p, digits[i] / fd.p});
        f.c.push_back(fd.one());
        bool reducible = false;
        for (const auto& g : lower)
            if (divmod(f, g).second.is_zero()) { reducible = true; break; }
        if (!reducible) out.push_back(f);
        uint64_t i = 0;
        while (i < d && ++digits[i] == q) digits[i++] = 0;
        if (i == d) break;
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs) {
    std::vector<Poly> basis;
    std::vector<Poly> queue;
    for (const auto& f : inputs) {
        if (f.is_zero()) throw undefined("coprime basis of zero");
        // Squarefree radical parts keep every basis element squarefree, so
        // gcd splits are clean (d coprime to b/d).
        for (const auto& [part, mult] : squarefree_decomposition(f).parts) queue.push_back(part);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Poly g = queue[qi];
        for (size_t i = 0; i < basis.size() && g.deg() > 0;) {
            Poly d = gcd(g, basis[i]);
            if (d.is_constant()) { ++i; continue; }
            g = exact_div(g, d);
            if (d == basis[i]) { ++i; continue; }
            Poly rest = exact_div(basis[i], d);
            basis[i] = d;
            basis.push_back(rest);
        }
        if (g.deg() > 0) basis.push_back(g);
    }
    std::sort(basis.begin(), basis.end(), poly_less);
    return basis;
}

}  // namespace arbordyn
