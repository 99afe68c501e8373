#include "arbordyn/orbit.hpp"

#include <unordered_map>

#include "arbordyn/errors.hpp"
#include "arbordyn/xpoly.hpp"

namespace arbordyn {

QuadMap QuadMap::over_z(IntPoly gamma, IntPoly c1) {
    QuadMap m;
    m.zgamma = std::move(gamma);
    m.zc1 = std::move(c1);
    return m;
}

QuadMap QuadMap::over_field(const FieldDesc& fd, Poly gamma, Poly c1) {
    QuadMap m;
    m.fq = fd;
    m.gamma = std::move(gamma);
    m.c1 = std::move(c1);
    return m;
}

QuadMap QuadMap::reduce(const FieldDesc& fd) const {
    if (over_fq()) throw domain_mismatch("reduce expects a Z[t] map");
    return over_field(fd, reduce_mod(zgamma, fd), reduce_mod(zc1, fd));
}

bool QuadMap::is_isotrivial() const {
    return over_fq() ? (gamma + c1).is_constant() : (zgamma + zc1).is_constant();
}

uint64_t QuadMap::h_gamma() const { return over_fq() ? height(gamma) : height(zgamma); }
uint64_t QuadMap::h_c1() const { return over_fq() ? height(c1) : height(zc1); }
uint64_t QuadMap::h_gc() const {
    return over_fq() ? height(gamma + c1) : height(zgamma + zc1);
}

std::string QuadMap::format() const {
    std::string g = over_fq() ? arbordyn::format(gamma) : arbordyn::format(zgamma);
    std::string c = over_fq() ? arbordyn::format(c1) : arbordyn::format(zc1);
    if (g == "0") return "x^2-(" + c + ")";
    return "(x-(" + g + "))^2-(" + c + ")";
}

bool QuadMap::operator==(const QuadMap& o) const {
    if (over_fq() != o.over_fq()) return false;
    if (over_fq()) return *fq == *o.fq && gamma == o.gamma && c1 == o.c1;
    return zgamma == o.zgamma && zc1 == o.zc1;
}

HeightProfile height_profile(const QuadMap& phi) {
    HeightProfile hp;
    hp.h_gamma = phi.h_gamma();
    hp.h_c1 = phi.h_c1();
    hp.h_phi = phi.h_phi();
    hp.h_gc = phi.h_gc();
    if (hp.h_gamma == hp.h_c1 && !phi.is_isotrivial() && hp.h_gamma > 0) {
        // kappa = log2(h(gamma)/h(gamma+c1)) + 1; h_gc >= 1 by non-isotriviality.
        uint64_t a = hp.h_gamma, b = hp.h_gc;
        if (a % b == 0 && ((a / b) & (a / b - 1)) == 0) {
            uint64_t r = a / b, k = 0;
            while (r > 1) { r >>= 1; ++k; }
            hp.kappa_exact = k + 1;
        } else {
            uint64_t k = 0;
            while ((b << k) < a) ++k;
            hp.kappa_ceiling = k + 1;
        }
    }
    return hp;
}

OrbitCache adjusted_orbit(const QuadMap& phi, uint64_t n) {
    if (n < 1) throw undefined("orbit depth must be >= 1");
    OrbitCache o;
    o.map = phi;
    if (phi.over_fq()) {
        o.fc.assign(2, Poly::zero(*phi.fq));
        o.fcrit0.assign(2, Poly::zero(*phi.fq));
        o.fc[1] = phi.c1;
        Poly g2 = phi.gamma * phi.gamma;
        o.fcrit0[1] = g2 - phi.c1;
    } else {
        o.zc.assign(2, IntPoly::zero());
        o.zcrit0.assign(2, IntPoly::zero());
        o.zc[1] = phi.zc1;
        o.zcrit0[1] = phi.zgamma * phi.zgamma - phi.zc1;
    }
    extend_orbit(o, n);
    return o;
}

void extend_orbit(OrbitCache& o, uint64_t n) {
    const QuadMap& phi = o.map;
    if (phi.over_fq()) {
        while (o.fc.size() <= n) {
            size_t k = o.fc.size();
            // c[2] = (-c1 - gamma)^2 - c1; c[k] = (c[k-1] - gamma)^2 - c1.
            Poly prev = k == 2 ? -phi.c1 : o.fc[k - 1];
            Poly step = prev - phi.gamma;
            o.fc.push_back(step * step - phi.c1);
            Poly cstep = o.fcrit0[k - 1] - phi.gamma;
            o.fcrit0.push_back(cstep * cstep - phi.c1);
        }
    } else {
        while (o.zc.size() <= n) {
            size_t k = o.zc.size();
            IntPoly prev = k == 2 ? -phi.zc1 : o.zc[k - 1];
            IntPoly step = prev - phi.zgamma;
            o.zc.push_back(step * step - phi.zc1);
            IntPoly cstep = o.zcrit0[k - 1] - phi.zgamma;
            o.zcrit0.push_back(cstep * cstep - phi.zc1);
        }
    }
}

template <typename Ring>
static XPoly<Ring> iterate_generic(const Ring& R, const typename Ring::Elem& gamma,
                                   const typename Ring::Elem& c1, uint64_t n,
                                   uint64_t degree_cap) {
    if (n < 1) throw undefined("iterate needs n >= 1");
    if ((n >= 64) || ((1ull << n) > degree_cap)) throw cap_exceeded("iterate degree 2^n beyond cap");
    XPoly<Ring> f{R.sub(R.mul(gamma, gamma), c1), R.neg(R.add(gamma, gamma)), R.one()};
    for (uint64_t i = 2; i <= n; ++i) {
        XPoly<Ring> shifted = f;
        shifted[0] = R.sub(shifted[0], gamma);
        f = xp_mul(R, shifted, shifted);
        f[0] = R.sub(f[0], c1);
    }
    return f;
}

std::vector<IntPoly> iterate_z(const QuadMap& phi, uint64_t n, uint64_t degree_cap) {
    if (phi.over_fq()) throw domain_mismatch("iterate_z expects a Z[t] map");
    return iterate_generic(IntPolyRing{}, phi.zgamma, phi.zc1, n, degree_cap);
}

std::vector<Poly> iterate_fq(const QuadMap& phi, uint64_t n, uint64_t degree_cap) {
    if (!phi.over_fq()) throw domain_mismatch("iterate_fq expects an F_q[t] map");
    return iterate_generic(FqPolyRing{*phi.fq}, phi.gamma, phi.c1, n, degree_cap);
}

namespace {

bool int_pm_power_of_two(const mpz_class& v, uint64_t& m, bool& neg) {
    if (v == 0) return false;
    mpz_class a = abs(v);
    neg = v < 0;
    if (mpz_popcount(a.get_mpz_t()) != 1) return false;
    m = mpz_scan1(a.get_mpz_t(), 0);
    return true;
}

}  // namespace

DiscRecursionReport discriminant_recursion_check(const QuadMap& phi, uint64_t n) {
    if (n < 1) throw undefined("discriminant recursion needs n >= 1");
    DiscRecursionReport rep;
    rep.n = n;
    OrbitCache orbit = adjusted_orbit(phi, n);
    if (phi.over_fq()) {
        FqPolyRing R{*phi.fq};
        Poly dn = xp_discriminant(R, iterate_generic(R, phi.gamma, phi.c1, n, 1u << 14));
        Poly dprev = n == 1 ? R.one()
                            : xp_discriminant(R, iterate_generic(R, phi.gamma, phi.c1, n - 1, 1u << 14));
        const Poly& cn = orbit.fc[n];
        if (dn.is_zero() || dprev.is_zero()) throw iterates_inseparable("zero discriminant");
        if (cn.is_zero()) throw undefined("c_n = 0");
        Poly ratio;
        try {
            ratio = exact_div(dn, dprev * dprev * cn);
        } catch (const Error&) {
            rep.ratio = "non-polynomial";
            return rep;
        }
        rep.ratio = format(ratio);
        if (!ratio.is_constant()) return rep;
        const FieldDesc& fd = *phi.fq;
        FF v = ratio.coeff(0);
        FF two = fd.from_int(2);
        FF p = fd.one();
        for (uint64_t m = 0; m < 2 * fd.p; ++m) {
            if (v == p) {
                rep.is_pm_power_of_two = true;
                rep.exponent = m;
                break;
            }
            if (v == fd.neg(p)) {
                rep.is_pm_power_of_two = true;
                rep.exponent = m;
                rep.negative = true;
                break;
            }
            p = fd.mul(p, two);
        }
        return rep;
    }
    IntPolyRing R;
    IntPoly dn = xp_discriminant(R, iterate_z(phi, n));
    IntPoly dprev = n == 1 ? IntPoly::constant(1) : xp_discriminant(R, iterate_z(phi, n - 1));
    const IntPoly& cn = orbit.zc[n];
    if (dn.is_zero() || dprev.is_zero()) throw iterates_inseparable("zero discriminant");
    if (cn.is_zero()) throw undefined("c_n = 0");
    IntPoly ratio;
    try {
        ratio = exact_div(dn, dprev * dprev * cn);
    } catch (const Error&) {
        rep.ratio = "non-polynomial";
        return rep;
    }
    rep.ratio = format(ratio);
    if (!ratio.is_constant() || ratio.is_zero()) return rep;
    uint64_t m = 0;
    bool neg = false;
    if (int_pm_power_of_two(ratio.c[0], m, neg)) {
        rep.is_pm_power_of_two = true;
        rep.exponent = m;
        rep.negative = neg;
    }
    return rep;
}

std::optional<OrbitPeriod> orbit_period(const QuadMap& phi, uint64_t cap) {
    if (!phi.over_fq()) throw domain_mismatch("orbit_period needs a finite coefficient field");
    std::unordered_map<std::string, uint64_t> seen;
    Poly a = phi.gamma;
    for (uint64_t k = 0; k <= cap; ++k) {
        std::string key = format(a);
        auto [it, inserted] = seen.emplace(key, k);
        if (!inserted) return OrbitPeriod{it->second, k - it->second};
        Poly step = a - phi.gamma;
        a = step * step - phi.c1;
    }
    return std::nullopt;
}

}  // namespace arbordyn
