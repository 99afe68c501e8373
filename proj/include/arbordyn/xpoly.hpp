#pragma once

#include <vector>

#include "arbordyn/errors.hpp"
#include "arbordyn/intpoly.hpp"
#include "arbordyn/poly.hpp"

namespace arbordyn {

/// Ring contexts for the generic polynomial-in-x machinery. Each provides the
/// integral-domain operations needed by the subresultant PRS.
struct MpzRing {
    using Elem = mpz_class;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem exact_div(const Elem& a, const Elem& b) const {
        Elem q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    Elem scalar(int64_t v) const { return v; }
};

struct IntPolyRing {
    using Elem = IntPoly;
    Elem zero() const { return IntPoly::zero(); }
    Elem one() const { return IntPoly::constant(1); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem exact_div(const Elem& a, const Elem& b) const { return arbordyn::exact_div(a, b); }
    Elem scalar(int64_t v) const { return IntPoly::constant(v); }
};

struct FqPolyRing {
    FieldDesc fd;
    using Elem = Poly;
    Elem zero() const { return Poly::zero(fd); }
    Elem one() const { return Poly::constant(fd, fd.one()); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem exact_div(const Elem& a, const Elem& b) const { return arbordyn::exact_div(a, b); }
    Elem scalar(int64_t v) const { return Poly::constant(fd, fd.from_int(v)); }
};

/// Polynomial in x with coefficients in ring R, ascending, no trailing zeros.
template <typename Ring>
using XPoly = std::vector<typename Ring::Elem>;

template <typename Ring>
void xp_normalize(const Ring& R, XPoly<Ring>& f) {
    while (!f.empty() && R.is_zero(f.back())) f.pop_back();
}

template <typename Elem>
int xp_deg(const std::vector<Elem>& f) {
    return f.empty() ? kNegInfinity : static_cast<int>(f.size()) - 1;
}

template <typename Ring>
XPoly<Ring> xp_add(const Ring& R, const XPoly<Ring>& f, const XPoly<Ring>& g) {
    XPoly<Ring> r(std::max(f.size(), g.size()), R.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < f.size()) r[i] = R.add(r[i], f[i]);
        if (i < g.size()) r[i] = R.add(r[i], g[i]);
    }
    xp_normalize(R, r);
    return r;
}

template <typename Ring>
XPoly<Ring> xp_sub(const Ring& R, const XPoly<Ring>& f, const XPoly<Ring>& g) {
    XPoly<Ring> r(std::max(f.size(), g.size()), R.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < f.size()) r[i] = R.add(r[i], f[i]);
        if (i < g.size()) r[i] = R.sub(r[i], g[i]);
    }
    xp_normalize(R, r);
    return r;
}

template <typename Ring>
XPoly<Ring> xp_mul(const Ring& R, const XPoly<Ring>& f, const XPoly<Ring>& g) {
    if (f.empty() || g.empty()) return {};
    XPoly<Ring> r(f.size() + g.size() - 1, R.zero());
    for (size_t i = 0; i < f.size(); ++i) {
        if (R.is_zero(f[i])) continue;
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = R.add(r[i + j], R.mul(f[i], g[j]));
    }
    xp_normalize(R, r);
    return r;
}

template <typename Ring>
XPoly<Ring> xp_scalar_mul(const Ring& R, const typename Ring::Elem& s, const XPoly<Ring>& f) {
    XPoly<Ring> r = f;
    for (auto& v : r) v = R.mul(s, v);
    xp_normalize(R, r);
    return r;
}

template <typename Ring>
XPoly<Ring> xp_derivative(const Ring& R, const XPoly<Ring>& f) {
    XPoly<Ring> r;
    for (size_t i = 1; i < f.size(); ++i)
        r.push_back(R.mul(R.scalar(static_cast<int64_t>(i)), f[i]));
    xp_normalize(R, r);
    return r;
}

/// Pseudo-remainder: lc(g)^{deg f - deg g + 1} * f reduced modulo g.
template <typename Ring>
XPoly<Ring> xp_prem(const Ring& R, XPoly<Ring> f, const XPoly<Ring>& g) {
    int e = xp_deg(f) - xp_deg(g) + 1;
    const auto& d = g.back();
    while (!f.empty() && f.size() >= g.size()) {
        auto top = f.back();
        size_t shift = f.size() - g.size();
        for (auto& v : f) v = R.mul(d, v);
        for (size_t i = 0; i < g.size(); ++i)
            f[shift + i] = R.sub(f[shift + i], R.mul(top, g[i]));
        xp_normalize(R, f);
        --e;
    }
    for (; e > 0; --e)
        for (auto& v : f) v = R.mul(d, v);
    return f;
}

/// Resultant with respect to x by the subresultant PRS (exact divisions only;
/// valid over any integral domain).
template <typename Ring>
typename Ring::Elem xp_resultant(const Ring& R, XPoly<Ring> A, XPoly<Ring> B) {
    if (A.empty() || B.empty()) return R.zero();
    bool negate = false;
    if (xp_deg(A) < xp_deg(B)) {
        if ((xp_deg(A) & 1) && (xp_deg(B) & 1)) negate = true;
        std::swap(A, B);
    }
    if (xp_deg(B) == 0) {
        auto r = R.one();
        for (int i = 0; i < xp_deg(A); ++i) r = R.mul(r, B[0]);
        return negate ? R.neg(r) : r;
    }
    auto g = R.one(), h = R.one();
    while (true) {
        int dA = xp_deg(A), dB = xp_deg(B);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) negate = !negate;
        XPoly<Ring> rem = xp_prem(R, A, B);
        A = B;
        // divide by g * h^delta, exactly
        auto divisor = g;
        for (int i = 0; i < delta; ++i) divisor = R.mul(divisor, h);
        B = rem;
        for (auto& v : B) v = R.exact_div(v, divisor);
        xp_normalize(R, B);
        g = A.back();
        if (delta > 0) {
            auto num = R.one();
            for (int i = 0; i < delta; ++i) num = R.mul(num, g);
            auto den = R.one();
            for (int i = 0; i < delta - 1; ++i) den = R.mul(den, h);
            h = R.exact_div(num, den);
        }
        if (B.empty()) return R.zero();  // common factor (deg of last A was > 0)
        if (xp_deg(B) == 0) {
            int dAf = xp_deg(A);
            auto num = R.one();
            for (int i = 0; i < dAf; ++i) num = R.mul(num, B[0]);
            auto den = R.one();
            for (int i = 0; i < dAf - 1; ++i) den = R.mul(den, h);
            auto r = R.exact_div(num, den);
            return negate ? R.neg(r) : r;
        }
    }
}

/// disc_x(f) = (-1)^{d(d-1)/2} Res_x(f, df/dx) / lc_x(f).
template <typename Ring>
typename Ring::Elem xp_discriminant(const Ring& R, const XPoly<Ring>& f) {
    if (xp_deg(f) < 1) throw undefined("discriminant of an x-constant");
    auto res = xp_resultant(R, f, xp_derivative(R, f));
    auto d = R.exact_div(res, f.back());
    uint64_t n = xp_deg(f);
    if ((n * (n - 1) / 2) % 2 == 1) d = R.neg(d);
    return d;
}

}  // namespace arbordyn
