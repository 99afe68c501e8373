#include "arbordyn/bigmod.hpp"

#include <utility>

#include "arbordyn/errors.hpp"

namespace arbordyn {

namespace {

/// Thrown when a leading coefficient is a zero divisor; carries a proper
/// divisor of the modulus.
struct Split {
    mpz_class divisor;
};

/// Polynomial over Z/m with invertible leading coefficient (enforced by
/// normalize; violation raises Split).
struct BMPoly {
    mpz_class m;
    std::vector<mpz_class> c;  // reduced to [0, m)

    bool is_zero() const { return c.empty(); }
    int deg() const { return c.empty() ? kNegInfinity : static_cast<int>(c.size()) - 1; }
    bool is_constant() const { return c.size() <= 1; }

    void normalize() {
        while (!c.empty()) {
            if (c.back() == 0) {
                c.pop_back();
                continue;
            }
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), c.back().get_mpz_t(), m.get_mpz_t());
            if (g != 1) throw Split{g};
            break;
        }
    }
};

mpz_class invert(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        throw Split{g};
    }
    return r;
}

BMPoly reduce(const IntPoly& f, const mpz_class& m) {
    BMPoly r{m, {}};
    for (const auto& v : f.c) {
        mpz_class x = v % m;
        if (x < 0) x += m;
        r.c.push_back(x);
    }
    r.normalize();
    return r;
}

BMPoly bm_monic(const BMPoly& f) {
    if (f.is_zero()) return f;
    mpz_class inv = invert(f.c.back(), f.m);
    BMPoly r = f;
    for (auto& v : r.c) v = v * inv % f.m;
    return r;
}

BMPoly bm_derivative(const BMPoly& f) {
    BMPoly r{f.m, {}};
    for (size_t i = 1; i < f.c.size(); ++i) r.c.push_back(f.c[i] * i % f.m);
    r.normalize();
    return r;
}

/// Remainder of f modulo g; g must have invertible lc (guaranteed post
/// normalize).
BMPoly bm_rem(const BMPoly& f, const BMPoly& g) {
    BMPoly r = f;
    mpz_class inv = invert(g.c.back(), f.m);
    while (!r.c.empty() && r.c.size() >= g.c.size()) {
        mpz_class coef = r.c.back() * inv % f.m;
        size_t shift = r.c.size() - g.c.size();
        for (size_t i = 0; i < g.c.size(); ++i) {
            r.c[shift + i] = (r.c[shift + i] - coef * g.c[i]) % f.m;
            if (r.c[shift + i] < 0) r.c[shift + i] += f.m;
        }
        r.c.pop_back();  // cancelled exactly
        while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    }
    r.normalize();
    return r;
}

/// Monic gcd by the Euclidean algorithm; degree sequences are coherent across
/// all prime divisors of m because every leading coefficient is invertible.
BMPoly bm_gcd(BMPoly a, BMPoly b) {
    while (!b.is_zero()) {
        BMPoly r = bm_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return bm_monic(a);
}

BMPoly bm_exact_div(const BMPoly& f, const BMPoly& g) {
    if (f.is_zero()) return BMPoly{f.m, {}};
    if (f.c.size() < g.c.size()) throw undefined("inexact division mod m");
    BMPoly r = f;
    BMPoly q{f.m, std::vector<mpz_class>(f.c.size() - g.c.size() + 1, 0)};
    mpz_class inv = invert(g.c.back(), f.m);
    while (!r.c.empty() && r.c.size() >= g.c.size()) {
        mpz_class coef = r.c.back() * inv % f.m;
        size_t shift = r.c.size() - g.c.size();
        q.c[shift] = coef;
        for (size_t i = 0; i < g.c.size(); ++i) {
            r.c[shift + i] = (r.c[shift + i] - coef * g.c[i]) % f.m;
            if (r.c[shift + i] < 0) r.c[shift + i] += f.m;
        }
        r.c.pop_back();
        while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    }
    r.normalize();
    if (!r.is_zero()) throw undefined("inexact division mod m");
    q.normalize();
    return q;
}

/// True iff the odd-multiplicity part of f is constant — i.e. f is a unit
/// times a square mod every prime divisor of the modulus. Yun's algorithm;
/// the char-p branch is impossible because every prime divisor exceeds deg f.
bool bm_square_in_closure(const BMPoly& f0) {
    BMPoly f = bm_monic(f0);
    if (f.is_constant()) return true;
    BMPoly fp = bm_derivative(f);
    if (fp.is_zero()) throw undefined("vanishing derivative: modulus has a small prime divisor");
    BMPoly c = bm_gcd(f, fp);
    BMPoly w = bm_exact_div(f, c);
    uint64_t i = 1;
    while (!w.is_constant()) {
        BMPoly y = bm_gcd(w, c);
        BMPoly part = bm_exact_div(w, y);
        if (!part.is_constant() && i % 2 == 1) return false;
        c = bm_exact_div(c, y);
        w = std::move(y);
        ++i;
    }
    return true;
}

}  // namespace

BigSquareOutcome is_square_in_closure_mod(const IntPoly& f, const mpz_class& m) {
    if (f.is_zero()) throw undefined("square test on zero");
    if (m <= 1 || m % 2 == 0) throw domain_mismatch("modulus must be odd and > 1");
    // Guard the small-characteristic branch away: no prime divisor <= deg f.
    for (uint64_t p = 2; p <= static_cast<uint64_t>(f.deg()); ++p) {
        if (!nt::is_prime_u64(p)) continue;
        if (mpz_fdiv_ui(m.get_mpz_t(), p) == 0)
            throw domain_mismatch("modulus has a prime divisor not exceeding deg f");
    }
    {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), f.lc().get_mpz_t(), m.get_mpz_t());
        if (g != 1) throw domain_mismatch("leading coefficient shares a factor with the modulus");
    }
    BigSquareOutcome out;
    out.not_square_for_all_primes = true;
    std::vector<mpz_class> work{m};
    while (!work.empty()) {
        mpz_class cur = work.back();
        work.pop_back();
        if (cur == 1) continue;
        try {
            if (bm_square_in_closure(reduce(f, cur))) {
                out.not_square_for_all_primes = false;
                out.square_moduli.push_back(cur);
            }
        } catch (const Split& s) {
            mpz_class other;
            mpz_divexact(other.get_mpz_t(), cur.get_mpz_t(), s.divisor.get_mpz_t());
            out.splits_found.push_back(s.divisor);
            work.push_back(s.divisor);
            work.push_back(other);
        }
    }
    return out;
}

}  // namespace arbordyn
