#include "arbordyn/poly.hpp"

#include <algorithm>

#include "arbordyn/errors.hpp"

namespace arbordyn {

Poly Poly::constant(const FieldDesc& fd, const FF& v) {
    Poly f{fd, {}};
    if (!fd.is_zero(v)) f.c.push_back(v);
    return f;
}

Poly Poly::from_int_coeffs(const FieldDesc& fd, const std::vector<int64_t>& asc) {
    Poly f{fd, {}};
    f.c.reserve(asc.size());
    for (int64_t v : asc) f.c.push_back(fd.from_int(v));
    f.normalize();
    return f;
}

Poly Poly::t(const FieldDesc& fd) { return {fd, {fd.zero(), fd.one()}}; }

FF Poly::lc() const {
    if (c.empty()) throw undefined("leading coefficient of the zero polynomial");
    return c.back();
}

void Poly::normalize() {
    while (!c.empty() && fd.is_zero(c.back())) c.pop_back();
}

static void check_same(const Poly& f, const Poly& g) {
    if (!(f.fd == g.fd)) throw domain_mismatch("polynomials over different fields");
}

Poly operator+(const Poly& f, const Poly& g) {
    check_same(f, g);
    Poly r{f.fd, {}};
    r.c.resize(std::max(f.c.size(), g.c.size()), f.fd.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.fd.add(f.coeff(i), g.coeff(i));
    r.normalize();
    return r;
}

Poly operator-(const Poly& f, const Poly& g) {
    check_same(f, g);
    Poly r{f.fd, {}};
    r.c.resize(std::max(f.c.size(), g.c.size()), f.fd.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.fd.sub(f.coeff(i), g.coeff(i));
    r.normalize();
    return r;
}

Poly operator-(const Poly& f) {
    Poly r = f;
    for (auto& v : r.c) v = f.fd.neg(v);
    return r;
}

Poly operator*(const Poly& f, const Poly& g) {
    check_same(f, g);
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.fd);
    Poly r{f.fd, std::vector<FF>(f.c.size() + g.c.size() - 1, f.fd.zero())};
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.fd.is_zero(f.c[i])) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = f.fd.add(r.c[i + j], f.fd.mul(f.c[i], g.c[j]));
    }
    r.normalize();
    return r;
}

Poly scalar_mul(const FF& s, const Poly& f) {
    if (f.fd.is_zero(s)) return Poly::zero(f.fd);
    Poly r = f;
    for (auto& v : r.c) v = f.fd.mul(s, v);
    return r;
}

Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    return scalar_mul(f.fd.inv(f.lc()), f);
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    check_same(f, g);
    if (g.is_zero()) throw division_by_zero("polynomial division by zero");
    Poly r = f;
    Poly q = Poly::zero(f.fd);
    if (f.deg() >= g.deg()) q.c.assign(f.deg() - g.deg() + 1, f.fd.zero());
    FF inv_lc = f.fd.inv(g.lc());
    while (!r.is_zero() && r.deg() >= g.deg()) {
        size_t shift = r.deg() - g.deg();
        FF coef = f.fd.mul(r.lc(), inv_lc);
        q.c[shift] = coef;
        for (size_t i = 0; i < g.c.size(); ++i)
            r.c[shift + i] = f.fd.sub(r.c[shift + i], f.fd.mul(coef, g.c[i]));
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw undefined("exact_div with nonzero remainder");
    return q;
}

Poly pow(const Poly& f, uint64_t e) {
    Poly r = Poly::constant(f.fd, f.fd.one());
    Poly b = f;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly derivative(const Poly& f) {
    Poly r{f.fd, {}};
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c.push_back(f.fd.scalar_mul(i % f.fd.p, f.c[i]));
    r.normalize();
    return r;
}

FF eval(const Poly& f, const FF& x) {
    FF acc = f.fd.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = f.fd.add(f.fd.mul(acc, x), f.c[i]);
    return acc;
}

Poly compose(const Poly& f, const Poly& g) {
    Poly acc = Poly::zero(f.fd);
    for (size_t i = f.c.size(); i-- > 0;)
        acc = acc * g + Poly::constant(f.fd, f.c[i]);
    return acc;
}

Poly gcd(const Poly& f, const Poly& g) {
    check_same(f, g);
    if (f.is_zero() && g.is_zero()) throw undefined("gcd(0, 0)");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return monic(a);
}

uint64_t height(const Poly& f) { return f.is_zero() ? 0 : static_cast<uint64_t>(f.deg()); }

Poly lift(const Poly& f, const FieldDesc& target) {
    if (!f.fd.subfield_of(target)) throw domain_mismatch("lift target is not an extension");
    Poly r{target, f.c};
    return r;
}

static FF coeff_pth_root(const FieldDesc& fd, const FF& v) {
    // Frobenius is x -> x^p on F_{p^k}; its inverse is x -> x^{p^{k-1}}.
    return fd.k == 1 ? v : fd.frobenius(v);
}

bool is_pth_power(const Poly& f) {
    for (size_t i = 0; i < f.c.size(); ++i)
        if (i % f.fd.p != 0 && !f.fd.is_zero(f.c[i])) return false;
    return true;
}

Poly pth_root(const Poly& f) {
    if (!is_pth_power(f)) throw not_a_pth_power("exponent not divisible by p");
    Poly r{f.fd, {}};
    for (size_t i = 0; i < f.c.size(); i += f.fd.p)
        r.c.push_back(coeff_pth_root(f.fd, f.c[i]));
    r.normalize();
    return r;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i].a != b.c[i].a) return a.c[i].a < b.c[i].a;
        if (a.c[i].b != b.c[i].b) return a.c[i].b < b.c[i].b;
    }
    return false;
}

static void sfd_accumulate(const Poly& f, uint64_t mult_scale,
                           std::vector<std::pair<Poly, uint64_t>>& out) {
    // f monic nonconstant; classical char-p squarefree algorithm.
    Poly fp = derivative(f);
    if (fp.is_zero()) {
        sfd_accumulate(pth_root(f), mult_scale * f.fd.p, out);
        return;
    }
    Poly c = gcd(f, fp);
    Poly w = exact_div(f, c);
    uint64_t i = 1;
    while (!w.is_constant()) {
        Poly y = gcd(w, c);
        Poly part = exact_div(w, y);
        if (!part.is_constant()) out.emplace_back(part, i * mult_scale);
        w = y;
        c = exact_div(c, y);
        ++i;
    }
    if (!c.is_constant()) sfd_accumulate(pth_root(c), mult_scale * f.fd.p, out);
}

SquarefreeDecomposition squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw undefined("squarefree decomposition of zero");
    SquarefreeDecomposition d;
    d.unit = f.lc();
    Poly m = monic(f);
    if (!m.is_constant()) sfd_accumulate(m, 1, d.parts);
    std::sort(d.parts.begin(), d.parts.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return d;
}

Poly radical(const Poly& f) {
    auto d = squarefree_decomposition(f);
    Poly r = Poly::constant(f.fd, f.fd.one());
    for (const auto& [g, m] : d.parts) r = r * g;
    return r;
}

Poly squarefree_part_geometric(const Poly& f) {
    auto d = squarefree_decomposition(f);
    Poly r = Poly::constant(f.fd, f.fd.one());
    for (const auto& [g, m] : d.parts)
        if (m % 2 == 1) r = r * g;
    return r;
}

bool is_square_in_closure(const Poly& f) {
    if (f.is_zero()) throw undefined("square test on zero");
    return squarefree_part_geometric(f).is_constant();
}

FF resultant(const Poly& f, const Poly& g) {
    const FieldDesc& fd = f.fd;
    check_same(f, g);
    if (f.is_zero() || g.is_zero()) return fd.zero();
    // Euclidean resultant: Res(f,g) = lc(g)^{deg f - deg r} (-1)^{deg f deg g} Res(g, r).
    Poly a = f, b = g;
    FF acc = fd.one();
    while (true) {
        if (b.is_constant()) {
            acc = fd.mul(acc, fd.pow(b.coeff(0), a.deg() < 0 ? 0 : a.deg()));
            return acc;
        }
        if (a.deg() < b.deg()) {
            if ((uint64_t(a.deg() < 0 ? 0 : a.deg()) * b.deg()) % 2 == 1) acc = fd.neg(acc);
            std::swap(a, b);
            continue;
        }
        Poly r = divmod(a, b).second;
        int dr = r.is_zero() ? 0 : r.deg();
        acc = fd.mul(acc, fd.pow(b.lc(), a.deg() - dr));
        if ((uint64_t(a.deg()) * b.deg()) % 2 == 1) acc = fd.neg(acc);
        if (r.is_zero()) return b.deg() > 0 ? fd.zero() : acc;
        a = b;
        b = r;
    }
}

FF discriminant(const Poly& f) {
    if (f.deg() < 1) throw undefined("discriminant of a constant");
    const FieldDesc& fd = f.fd;
    FF res = resultant(f, derivative(f));
    FF d = fd.div(res, f.lc());
    uint64_t n = f.deg();
    if ((n * (n - 1) / 2) % 2 == 1) d = fd.neg(d);
    return d;
}

RationalFn RationalFn::make(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw division_by_zero("rational function with zero denominator");
    if (num.is_zero()) return {Poly::zero(num.fd), Poly::constant(num.fd, num.fd.one())};
    Poly g = gcd(num, den);
    Poly n = exact_div(num, g);
    Poly d = exact_div(den, g);
    FF u = d.lc();
    return {scalar_mul(n.fd.inv(u), n), scalar_mul(d.fd.inv(u), d)};
}

uint64_t height(const RationalFn& f) { return std::max(height(f.num), height(f.den)); }

uint64_t pth_power_degree(const RationalFn& f) {
    if (f.is_zero()) throw undefined("pth_power_degree of zero");
    if (f.is_constant()) throw undefined("pth_power_degree of a constant");
    // In lowest terms, f = n/d is a p-th power in F_q(t) iff n and d both are
    // (up to units, and units are p-th powers in F_q since Frobenius is onto).
    uint64_t e = 0;
    Poly n = f.num, d = f.den;
    while (is_pth_power(monic(n)) && is_pth_power(d)) {
        FF un = n.lc();
        n = scalar_mul(coeff_pth_root(n.fd, un), pth_root(monic(n)));
        d = pth_root(d);
        ++e;
    }
    return e;
}

static std::string format_coeff(const FieldDesc& fd, const FF& v, bool lead_term) {
    if (fd.k == 2 && v.b != 0) return "(" + fd.format(v) + ")";
    std::string s = std::to_string(v.a);
    (void)lead_term;
    return s;
}

std::string format(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (f.fd.is_zero(f.c[i])) continue;
        if (!out.empty()) out += "+";
        bool unit_coeff = f.c[i] == f.fd.one() && i > 0;
        if (!unit_coeff) out += format_coeff(f.fd, f.c[i], out.empty());
        if (i > 0) {
            if (!unit_coeff) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace arbordyn
