#include "arbordyn/intpoly.hpp"

#include <algorithm>

#include "arbordyn/errors.hpp"
#include "arbordyn/xpoly.hpp"

namespace arbordyn {

IntPoly IntPoly::constant(const mpz_class& v) {
    IntPoly f;
    if (v != 0) f.c.push_back(v);
    return f;
}

IntPoly IntPoly::from_coeffs(std::vector<mpz_class> asc) {
    IntPoly f;
    f.c = std::move(asc);
    f.normalize();
    return f;
}

IntPoly IntPoly::from_int_coeffs(const std::vector<int64_t>& asc) {
    IntPoly f;
    for (int64_t v : asc) f.c.emplace_back(static_cast<long>(v));
    f.normalize();
    return f;
}

IntPoly IntPoly::t() { return from_int_coeffs({0, 1}); }

const mpz_class& IntPoly::lc() const {
    if (c.empty()) throw undefined("leading coefficient of the zero polynomial");
    return c.back();
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    IntPoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.coeff(i) + g.coeff(i);
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    IntPoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.coeff(i) - g.coeff(i);
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& f) {
    IntPoly r = f;
    for (auto& v : r.c) v = -v;
    return r;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly::zero();
    IntPoly r;
    r.c.assign(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (size_t j = 0; j < g.c.size(); ++j) r.c[i + j] += f.c[i] * g.c[j];
    }
    r.normalize();
    return r;
}

IntPoly scalar_mul(const mpz_class& s, const IntPoly& f) {
    if (s == 0) return IntPoly::zero();
    IntPoly r = f;
    for (auto& v : r.c) v *= s;
    return r;
}

IntPoly pow(const IntPoly& f, uint64_t e) {
    IntPoly r = IntPoly::constant(1);
    IntPoly b = f;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

IntPoly derivative(const IntPoly& f) {
    IntPoly r;
    for (size_t i = 1; i < f.c.size(); ++i) r.c.push_back(mpz_class(i) * f.c[i]);
    r.normalize();
    return r;
}

mpz_class eval(const IntPoly& f, const mpz_class& x) {
    mpz_class acc = 0;
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
    return acc;
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
    IntPoly acc;
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * g + IntPoly::constant(f.c[i]);
    return acc;
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw division_by_zero("polynomial division by zero");
    if (f.is_zero()) return IntPoly::zero();
    if (f.deg() < g.deg()) throw undefined("exact_div with nonzero remainder");
    IntPoly r = f;
    IntPoly q;
    q.c.assign(f.deg() - g.deg() + 1, 0);
    for (int k = f.deg() - g.deg(); k >= 0; --k) {
        mpz_class top = r.coeff(k + g.deg());
        if (top == 0) continue;
        mpz_class coef;
        mpz_class rem;
        mpz_fdiv_qr(coef.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), g.lc().get_mpz_t());
        if (rem != 0) throw undefined("exact_div with nonzero remainder");
        q.c[k] = coef;
        for (size_t i = 0; i < g.c.size(); ++i) {
            size_t idx = k + i;
            mpz_class v = (idx < r.c.size() ? r.c[idx] : mpz_class(0)) - coef * g.c[i];
            if (idx >= r.c.size()) r.c.resize(idx + 1, 0);
            r.c[idx] = v;
        }
    }
    r.normalize();
    if (!r.is_zero()) throw undefined("exact_div with nonzero remainder");
    q.normalize();
    return q;
}

mpz_class content(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& v : f.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    mpz_class c = content(f);
    if (f.lc() < 0) c = -c;
    IntPoly r = f;
    for (auto& v : r.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return r;
}

/// Pseudo-remainder of f by g in Z[t].
static IntPoly prem(const IntPoly& f, const IntPoly& g) {
    MpzRing R;
    XPoly<MpzRing> a(f.c.begin(), f.c.end()), b(g.c.begin(), g.c.end());
    auto r = xp_prem(R, a, b);
    return IntPoly::from_coeffs({r.begin(), r.end()});
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw undefined("gcd(0, 0)");
    IntPoly a = primitive_part(f), b = primitive_part(g);
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(prem(a, b));
        a = b;
        b = r;
    }
    if (a.is_zero()) throw undefined("gcd(0, 0)");
    // Content gcd: for primitive-part inputs the gcd of a constant with a
    // polynomial is 1 unless both inputs were constants.
    if (a.is_constant()) return IntPoly::constant(1);
    return a;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw undefined("squarefree part of zero");
    IntPoly p = primitive_part(f);
    if (p.is_constant()) return IntPoly::constant(1);
    IntPoly g = gcd(p, derivative(p));
    if (g.is_constant()) return p;
    return primitive_part(exact_div(p, g));
}

bool is_square_up_to_constant(const IntPoly& f) {
    if (f.is_zero()) throw undefined("square test on zero");
    return squarefree_part_geometric(f).is_constant();
}

std::vector<std::pair<IntPoly, uint64_t>> squarefree_decomposition_q(const IntPoly& f) {
    if (f.is_zero()) throw undefined("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, uint64_t>> parts;
    IntPoly p = primitive_part(f);
    if (p.is_constant()) return parts;
    // f_k = primitive product of the factors of multiplicity >= k, obtained by
    // the gcd chain g_0 = p, g_k = gcd(g_{k-1}, g_{k-1}'), f_k = g_{k-1}/g_k.
    // Every division is primitive/primitive with an exact quotient over Q,
    // hence exact over Z. The multiplicity-k part is f_k / f_{k+1}.
    std::vector<IntPoly> f_ge;  // f_1, f_2, ...
    IntPoly g = p;
    while (!g.is_constant()) {
        IntPoly h = gcd(g, derivative(g));
        f_ge.push_back(primitive_part(exact_div(g, h)));
        g = h;
    }
    for (size_t k = 0; k < f_ge.size(); ++k) {
        IntPoly part = k + 1 < f_ge.size() ? primitive_part(exact_div(f_ge[k], f_ge[k + 1]))
                                           : f_ge[k];
        if (!part.is_constant()) parts.emplace_back(part, k + 1);
    }
    return parts;
}

IntPoly squarefree_part_geometric(const IntPoly& f) {
    if (f.is_zero()) throw undefined("squarefree part of zero");
    IntPoly r = IntPoly::constant(1);
    for (const auto& [part, mult] : squarefree_decomposition_q(f))
        if (mult % 2 == 1) r = r * part;
    return primitive_part(r);
}

uint64_t height(const IntPoly& f) { return f.is_zero() ? 0 : static_cast<uint64_t>(f.deg()); }

Poly reduce_mod(const IntPoly& f, const FieldDesc& fd) {
    Poly r{fd, {}};
    for (const auto& v : f.c) {
        uint64_t a = mpz_fdiv_ui(v.get_mpz_t(), fd.p);
        r.c.push_back({a, 0});
    }
    r.normalize();
    return r;
}

static mpz_class mpz_pow(const mpz_class& b, uint64_t e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (g.is_constant()) return mpz_pow(g.c[0], f.deg());
    if (f.is_constant()) return mpz_pow(f.c[0], g.deg());
    // Squared Hadamard 2-norm bound: Res^2 <= (sum f_i^2)^{deg g} (sum g_i^2)^{deg f}.
    mpz_class nf = 0, ng = 0;
    for (const auto& v : f.c) nf += v * v;
    for (const auto& v : g.c) ng += v * v;
    mpz_class bound2 = mpz_pow(nf, g.deg()) * mpz_pow(ng, f.deg());

    mpz_class modulus = 1, acc = 0;
    uint64_t p = 0xFFFFFFFFFFFFFFFFull >> 2;  // start below 2^62
    while (modulus * modulus <= 4 * bound2) {
        p = nt::prev_prime_u64(p - 1);
        if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0 || mpz_fdiv_ui(g.lc().get_mpz_t(), p) == 0)
            continue;
        FieldDesc fd = FieldDesc::prime_field(p);
        FF rp = resultant(reduce_mod(f, fd), reduce_mod(g, fd));
        // CRT: acc' == acc (mod modulus), acc' == rp (mod p).
        mpz_class pm(static_cast<unsigned long>(p));
        mpz_class inv;
        mpz_class mod_red = modulus % pm;
        mpz_invert(inv.get_mpz_t(), mod_red.get_mpz_t(), pm.get_mpz_t());
        mpz_class diff = (mpz_class(static_cast<unsigned long>(rp.a)) - acc % pm) % pm;
        if (diff < 0) diff += pm;
        acc += modulus * ((diff * inv) % pm);
        modulus *= pm;
    }
    if (2 * acc > modulus) acc -= modulus;
    return acc;
}

mpz_class discriminant(const IntPoly& f) {
    if (f.deg() < 1) throw undefined("discriminant of a constant");
    if (f.deg() == 1) return 1;
    mpz_class res = resultant(f, derivative(f));
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    uint64_t n = f.deg();
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

mpz_class resultant_prs(const IntPoly& f, const IntPoly& g) {
    MpzRing R;
    XPoly<MpzRing> a(f.c.begin(), f.c.end()), b(g.c.begin(), g.c.end());
    return xp_resultant(R, a, b);
}

std::string format(const IntPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (f.c[i] == 0) continue;
        mpz_class a = f.c[i];
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? "-" : "+";
        }
        mpz_class mag = abs(a);
        bool unit_coeff = mag == 1 && i > 0;
        if (!unit_coeff) out += mag.get_str();
        if (i > 0) {
            if (!unit_coeff) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace arbordyn
