#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbordyn/intpoly.hpp"
#include "arbordyn/poly.hpp"

namespace arbordyn {

/// Monic quadratic map (x - gamma)^2 - c1 with coefficients in Z[t] or
/// F_q[t]. Exactly one coefficient ring is active.
struct QuadMap {
    std::optional<FieldDesc> fq;  // absent: Z[t]
    IntPoly zgamma, zc1;          // active when !fq
    Poly gamma, c1;               // active when fq

    bool over_fq() const { return fq.has_value(); }
    static QuadMap over_z(IntPoly gamma, IntPoly c1);
    static QuadMap over_field(const FieldDesc& fd, Poly gamma, Poly c1);
    /// Coefficient reduction of a Z[t] map into F_p[t].
    QuadMap reduce(const FieldDesc& fd) const;

    /// deg(gamma + c1) = 0, constants included (zero counts as constant).
    bool is_isotrivial() const;

    uint64_t h_gamma() const;
    uint64_t h_c1() const;
    uint64_t h_phi() const { return std::max(h_gamma(), h_c1()); }
    /// h(gamma + c1).
    uint64_t h_gc() const;

    std::string format() const;
    bool operator==(const QuadMap& o) const;
};

struct HeightProfile {
    uint64_t h_gamma = 0, h_c1 = 0, h_phi = 0, h_gc = 0;
    /// kappa = log2(h(gamma)/h(gamma+c1)) + 1, defined only when
    /// h(gamma) = h(c1) (and the map is non-isotrivial). Stored exactly when
    /// the ratio is a power of two; the ceiling bound is kept otherwise.
    std::optional<uint64_t> kappa_exact;
    std::optional<uint64_t> kappa_ceiling;
};

HeightProfile height_profile(const QuadMap& phi);

/// Adjusted post-critical orbit c[1] = -phi(gamma) = c1, c[n] = phi^(n)(gamma)
/// for n >= 2, plus the orbit of 0. Entries valid for 1 <= n <= depth; index 0
/// is a placeholder.
struct OrbitCache {
    QuadMap map;
    std::vector<IntPoly> zc, zcrit0;
    std::vector<Poly> fc, fcrit0;

    uint64_t depth() const {
        return (map.over_fq() ? fc.size() : zc.size()) - 1;
    }
};

OrbitCache adjusted_orbit(const QuadMap& phi, uint64_t n);
/// Extend an existing cache in place to depth n (no-op if already there).
void extend_orbit(OrbitCache& orbit, uint64_t n);

/// Exact expansion of phi^(n)(x) as a polynomial in x (ascending), degree 2^n.
std::vector<IntPoly> iterate_z(const QuadMap& phi, uint64_t n, uint64_t degree_cap = 1u << 14);
std::vector<Poly> iterate_fq(const QuadMap& phi, uint64_t n, uint64_t degree_cap = 1u << 14);

/// Delta_n / (Delta_{n-1}^2 * c_n) where Delta_n = disc_x(phi^(n)), computed
/// from scratch by the resultant; reports whether the ratio is +-2^m and the
/// observed m (smallest such m over F_q).
struct DiscRecursionReport {
    uint64_t n = 0;
    std::string ratio;  // formatted integer or field element
    bool is_pm_power_of_two = false;
    std::optional<uint64_t> exponent;
    bool negative = false;
};
DiscRecursionReport discriminant_recursion_check(const QuadMap& phi, uint64_t n);

/// Repetition scan of the critical orbit gamma, phi(gamma), ... over F_q[t].
struct OrbitPeriod {
    uint64_t tail = 0, cycle = 0;
};
std::optional<OrbitPeriod> orbit_period(const QuadMap& phi, uint64_t cap);

}  // namespace arbordyn
