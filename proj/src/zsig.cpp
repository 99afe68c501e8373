#include "arbordyn/zsig.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arbordyn/errors.hpp"
#include "arbordyn/intfactor.hpp"
#include "arbordyn/nt.hpp"

namespace arbordyn {

namespace {

mpz_class pow2(uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

uint64_t checked_p_pow(uint64_t p, uint64_t e) {
    unsigned __int128 r = 1;
    for (uint64_t i = 0; i < e; ++i) {
        r *= p;
        if (r > (unsigned __int128)1 << 62) throw cap_exceeded("p^e overflows the bound constants");
    }
    return static_cast<uint64_t>(r);
}

/// Everything the exclusion solver needs, shared by the F_q and the
/// characteristic-0 paths.
struct SolverCase {
    BoundConstants constants;
    uint64_t h_gamma = 0, h_c1 = 0, h_phi = 0, h_gc = 0;
    bool gamma_zero = false;
    bool equal_heights = false;               // h(gamma) == h(c1): the kappa regime
    std::optional<uint64_t> kappa_bar;        // upper bound on kappa when equal_heights
};

/// Upper bound for h(c_i), valid in both height regimes.
mpz_class hc_upper(const SolverCase& s, uint64_t i) {
    if (!s.equal_heights) return i == 1 ? mpz_class(s.h_c1) : mpz_class(pow2(i - 1) * s.h_phi);
    mpz_class a = s.h_gamma, b = pow2(i - 1) * s.h_gc;
    return a > b ? a : b;
}

/// Upper bound for h(phi^(i)(0)).
mpz_class h0_upper(const SolverCase& s, uint64_t i) {
    return pow2(i) * (s.equal_heights ? s.h_gamma : s.h_phi);
}

/// The divisor-height sum H(n) bounding h(d_n); the gamma = 0 refinement
/// drops the orbit-of-0 terms.
mpz_class h_divisor(const SolverCase& s, uint64_t n) {
    mpz_class acc = 0;
    for (uint64_t i = 1; i <= n / 2; ++i) {
        acc += hc_upper(s, i);
        if (!s.gamma_zero) acc += h0_upper(s, i);
    }
    return acc;
}

/// Provable lower bound for h(c_m) (0 when no exact regime applies at m);
/// exponential reports whether the value doubles with each further step.
mpz_class lhs_lower(const SolverCase& s, uint64_t m, bool& exponential) {
    exponential = false;
    if (!s.equal_heights) {
        if (m >= 2) {
            exponential = true;
            return pow2(m - 1) * s.h_phi;
        }
        return mpz_class(s.h_c1);
    }
    if (s.kappa_bar && m > *s.kappa_bar) {
        exponential = true;
        return pow2(m - 1) * s.h_gc;
    }
    return 0;
}

EffectiveBound run_solver(const SolverCase& s) {
    constexpr uint64_t kScanCap = 64;
    EffectiveBound out;
    out.constants = s.constants;
    const uint64_t n0 = s.constants.n0;
    const uint64_t lag = s.constants.singular ? 2 : 1;  // LHS index is n - lag
    // Exponential majorant of A*H(n) + B: the per-term coefficients above are
    // all <= 3 * 2^{i-1} * cH, so H(n) <= 3 * cH * 2^{floor(n/2)}.
    const uint64_t cH = (s.gamma_zero ? 1 : 3) *
                        std::max({s.h_phi, s.h_gamma, s.h_c1, s.h_gc, uint64_t{1}});
    uint64_t best_retained = n0 - 1;
    bool permanent = false;
    for (uint64_t n = n0; n <= kScanCap; ++n) {
        bool exponential = false;
        mpz_class lhs = lhs_lower(s, n - lag, exponential);
        mpz_class rhs = mpz_class(s.constants.A) * h_divisor(s, n) + s.constants.B;
        bool excluded = lhs > rhs;
        out.ledger.push_back({n, lhs.get_str(), rhs.get_str(), excluded});
        if (!excluded) best_retained = n;
        if (excluded && exponential) {
            // Once lhs > A*cH*2^{floor(n/2)} + B >= rhs, exclusion persists:
            // the lhs doubles per step while the majorant at most doubles.
            mpz_class majorant = mpz_class(s.constants.A) * cH * pow2(n / 2) + s.constants.B;
            if (lhs > majorant) {
                permanent = true;
                break;
            }
        }
    }
    if (!permanent) throw cap_exceeded("height exclusion did not stabilize by n = 64");
    out.N = best_retained;
    return out;
}

Poly fq_sqrt_c1_plus(const Poly& c1, int64_t shift) {
    auto [home, s] = closure_sqrt(c1);
    return s + Poly::constant(home, home.from_int(shift));
}

}  // namespace

BoundConstants bound_constants(const QuadMap& phi) {
    if (!phi.over_fq()) throw domain_mismatch("bound_constants expects an F_q[t] map");
    if (phi.is_isotrivial() || phi.c1.is_zero())
        throw ill_defined("bound constants need a non-isotrivial map with c1 != 0");
    InsepReport rep = insep_degree(phi);
    BoundConstants bc;
    bc.e = rep.e;
    bc.singular = rep.singular.yes;
    uint64_t pe = checked_p_pow(phi.fq->p, rep.e);
    bc.A = 8 * pe;
    if (!bc.singular) {
        Poly neg = -phi.c1 - phi.gamma;
        Poly c2 = neg * neg - phi.c1;
        uint64_t hd1 = height(squarefree_part_geometric(phi.c1));
        uint64_t inner = hd1 + 4 + 4 * height(radical(phi.c1)) + 4 * height(radical(c2));
        bc.B = 8 * pe * inner + 4 * phi.h_gamma() + 8 * phi.h_c1();
        uint64_t n = 3;
        while (!(mpz_class(phi.h_gc()) * pow2(n - 3) > phi.h_phi())) ++n;
        bc.n0 = n;
    } else {
        Poly s = fq_sqrt_c1_plus(phi.c1, 0);
        uint64_t hd1t = height(squarefree_part_geometric(s));
        uint64_t inner = hd1t + 4 + 4 * height(radical(phi.c1)) +
                         4 * height(radical(fq_sqrt_c1_plus(phi.c1, 2)));
        bc.B = 8 * pe * inner + 10 * phi.h_c1();
        bc.n0 = 4;
    }
    return bc;
}

EffectiveBound effective_bound(const QuadMap& phi) {
    SolverCase s;
    s.constants = bound_constants(phi);
    HeightProfile hp = height_profile(phi);
    s.h_gamma = hp.h_gamma;
    s.h_c1 = hp.h_c1;
    s.h_phi = hp.h_phi;
    s.h_gc = hp.h_gc;
    s.gamma_zero = phi.gamma.is_zero();
    s.equal_heights = hp.h_gamma == hp.h_c1;
    if (hp.kappa_exact)
        s.kappa_bar = hp.kappa_exact;
    else if (hp.kappa_ceiling)
        s.kappa_bar = hp.kappa_ceiling;
    return run_solver(s);
}

uint64_t remark_bound(uint64_t p_pow_e) {
    if (p_pow_e == 0) throw undefined("remark_bound needs p^e >= 1");
    mpz_class pe(static_cast<unsigned long>(p_pow_e));
    uint64_t best_retained = 2;
    for (uint64_t n = 3; n <= 64; ++n) {
        mpz_class lhs = pow2(n - 2);
        mpz_class rhs = 8 * pe * (3 * pow2(n / 2) - 3) + 136 * pe + 12;
        if (lhs <= rhs) {
            best_retained = n;
            continue;
        }
        // Permanence: lhs doubles per step, rhs at most doubles per step once
        // excluded (8pe*3*2^{floor(n/2)} dominates); check the majorant.
        if (lhs > 24 * pe * pow2(n / 2) + 136 * pe + 12) return best_retained;
    }
    throw cap_exceeded("remark inequality did not stabilize by n = 64");
}

std::vector<std::pair<Poly, uint64_t>> primitive_divisors(OrbitCache& orbit, uint64_t n,
                                                          uint64_t seed) {
    if (!orbit.map.over_fq()) throw domain_mismatch("primitive_divisors expects an F_q[t] orbit");
    extend_orbit(orbit, n);
    if (orbit.fc[n].is_zero()) throw undefined("primitive divisors of a vanishing orbit element");
    Factorization f = factor(orbit.fc[n], seed);
    std::vector<std::pair<Poly, uint64_t>> out;
    for (const auto& [g, mult] : f.factors) {
        bool fresh = true;
        for (uint64_t i = 1; i < n && fresh; ++i) {
            if (orbit.fc[i].is_zero()) continue;
            if (divmod(orbit.fc[i], g).second.is_zero()) fresh = false;
        }
        if (fresh) out.emplace_back(g, mult);
    }
    return out;
}

ZsigmondyReport zsigmondy_set(const QuadMap& phi, uint64_t M, uint64_t detail_cap) {
    if (!phi.over_fq()) throw domain_mismatch("zsigmondy_set expects an F_q[t] map");
    if (phi.c1.is_zero()) throw degenerate_square("c1 = 0: the adjusted orbit is degenerate");
    if (M < 1) throw undefined("scan depth must be >= 1");
    ZsigmondyReport rep;
    rep.scanned_up_to = M;
    OrbitCache orbit = adjusted_orbit(phi, M);
    for (uint64_t n = 1; n <= M; ++n) {
        if (orbit.fc[n].is_zero()) {
            rep.vanishing.push_back(n);
            continue;
        }
        Poly r = squarefree_part_geometric(orbit.fc[n]);
        for (uint64_t i = 1; i < n && !r.is_constant(); ++i) {
            if (orbit.fc[i].is_zero()) continue;
            Poly g = gcd(r, orbit.fc[i]);
            if (!g.is_constant()) r = exact_div(r, g);
        }
        ZsigmondyReport::PerN row;
        row.n = n;
        row.member = r.is_constant();
        if (static_cast<uint64_t>(std::max(orbit.fc[n].deg(), 0)) <= detail_cap) {
            row.detailed = true;
            for (const auto& [g, mult] : primitive_divisors(orbit, n))
                row.primitive.emplace_back(format(g), mult);
        }
        if (row.member) rep.members.push_back(n);
        rep.per_n.push_back(std::move(row));
    }
    return rep;
}

ZsigmondyReport zsigmondy_set_z(const QuadMap& phi, uint64_t M) {
    if (phi.over_fq()) throw domain_mismatch("zsigmondy_set_z expects a Z[t] map");
    if (phi.zc1.is_zero()) throw degenerate_square("c1 = 0: the adjusted orbit is degenerate");
    if (M < 1) throw undefined("scan depth must be >= 1");
    ZsigmondyReport rep;
    rep.scanned_up_to = M;
    OrbitCache orbit = adjusted_orbit(phi, M);
    for (uint64_t n = 1; n <= M; ++n) {
        if (orbit.zc[n].is_zero()) {
            rep.vanishing.push_back(n);
            continue;
        }
        IntPoly r = squarefree_part_geometric(orbit.zc[n]);
        for (uint64_t i = 1; i < n && !r.is_constant(); ++i) {
            if (orbit.zc[i].is_zero() || orbit.zc[i].is_constant()) continue;
            IntPoly g = gcd(r, orbit.zc[i]);
            if (!g.is_constant()) r = primitive_part(exact_div(r, g));
        }
        ZsigmondyReport::PerN row;
        row.n = n;
        row.member = r.is_constant();
        if (row.member) rep.members.push_back(n);
        rep.per_n.push_back(std::move(row));
    }
    return rep;
}

ExceptionalPrimes exceptional_primes(const QuadMap& phi) {
    if (phi.over_fq()) throw domain_mismatch("exceptional_primes expects a Z[t] map");
    if (phi.is_isotrivial() || phi.zc1.is_zero())
        throw ill_defined("exceptional primes need a non-isotrivial map with c1 != 0");
    IntPoly g = phi.zgamma + phi.zc1;
    // Candidate pool. Reductions can only misbehave at p when p divides a
    // leading coefficient (height drop), divides every coefficient of c1 or
    // every nonconstant coefficient of gamma + c1 (the T conditions), or is
    // small enough that a p-th power can appear in the inseparability test
    // (a nonconstant p-th power in F_p(t) has height >= p, so p <= 4h(phi)+4
    // covers the heights of every tested expression).
    std::set<uint64_t> candidates;
    for (uint64_t p : nt::odd_primes_up_to(4 * phi.h_phi() + 4)) candidates.insert(p);
    auto add_divisors = [&](const mpz_class& v) {
        if (v == 0) return;
        for (uint64_t p : odd_word_prime_divisors(v)) candidates.insert(p);
    };
    add_divisors(phi.zgamma.is_zero() ? mpz_class(0) : phi.zgamma.lc());
    add_divisors(phi.zc1.lc());
    add_divisors(g.lc());
    add_divisors(content(phi.zc1));
    IntPoly g_nonconst = g;
    if (!g_nonconst.c.empty()) g_nonconst.c[0] = 0;
    g_nonconst.normalize();
    add_divisors(content(g_nonconst));

    ExceptionalPrimes out;
    std::set<uint64_t> t_set, s_set;
    for (uint64_t p : candidates) {
        FieldDesc fd = FieldDesc::prime_field(p);
        QuadMap red = phi.reduce(fd);
        if (red.c1.is_zero()) {
            t_set.insert(p);
            out.reasons.emplace_back(p, "c1 vanishes mod p");
            continue;
        }
        if (red.is_isotrivial()) {
            t_set.insert(p);
            out.reasons.emplace_back(p, "reduction isotrivial");
            continue;
        }
        if (red.h_phi() != phi.h_phi()) {
            s_set.insert(p);
            out.reasons.emplace_back(p, "height drop");
            continue;
        }
        if (insep_degree(red).e > 0) {
            s_set.insert(p);
            out.reasons.emplace_back(p, "e_p > 0");
        }
    }
    out.T.assign(t_set.begin(), t_set.end());
    s_set.insert(t_set.begin(), t_set.end());
    out.S.assign(s_set.begin(), s_set.end());
    return out;
}

GlobalBound global_bound(const QuadMap& phi) {
    if (phi.over_fq()) throw domain_mismatch("global_bound expects a Z[t] map");
    if (phi.is_isotrivial() || phi.zc1.is_zero())
        throw ill_defined("global bound needs a non-isotrivial map with c1 != 0");
    GlobalBound out;
    // Generic characteristic-0 solver: e = 0, heights over Q.
    SolverCase s;
    s.constants.e = 0;
    s.constants.A = 8;
    IntPoly g = phi.zgamma + phi.zc1;
    bool singular = g * g == phi.zc1;
    s.constants.singular = singular;
    if (!singular) {
        IntPoly neg = -phi.zc1 - phi.zgamma;
        IntPoly c2 = neg * neg - phi.zc1;
        uint64_t inner = height(squarefree_part_geometric(phi.zc1)) + 4 +
                         4 * height(squarefree_part(phi.zc1)) + 4 * height(squarefree_part(c2));
        s.constants.B = 8 * inner + 4 * phi.h_gamma() + 8 * phi.h_c1();
        uint64_t n = 3;
        while (!(mpz_class(phi.h_gc()) * pow2(n - 3) > phi.h_phi())) ++n;
        s.constants.n0 = n;
    } else {
        // sqrt(c1) = +-g; take the worse radical height over both signs.
        IntPoly two = IntPoly::constant(2);
        uint64_t rad_shift = std::max(height(squarefree_part(g + two)), height(squarefree_part(g - two)));
        uint64_t inner = height(squarefree_part_geometric(g)) + 4 +
                         4 * height(squarefree_part(phi.zc1)) + 4 * rad_shift;
        s.constants.B = 8 * inner + 10 * phi.h_c1();
        s.constants.n0 = 4;
    }
    HeightProfile hp = height_profile(phi);
    s.h_gamma = hp.h_gamma;
    s.h_c1 = hp.h_c1;
    s.h_phi = hp.h_phi;
    s.h_gc = hp.h_gc;
    s.gamma_zero = phi.zgamma.is_zero();
    s.equal_heights = hp.h_gamma == hp.h_c1;
    if (hp.kappa_exact)
        s.kappa_bar = hp.kappa_exact;
    else if (hp.kappa_ceiling)
        s.kappa_bar = hp.kappa_ceiling;
    out.generic = run_solver(s);
    out.N_phi = out.generic.N;

    out.primes = exceptional_primes(phi);
    std::set<uint64_t> t_set(out.primes.T.begin(), out.primes.T.end());
    for (uint64_t q : out.primes.S) {
        if (t_set.count(q)) continue;
        EffectiveBound eb = effective_bound(phi.reduce(FieldDesc::prime_field(q)));
        out.per_prime.emplace_back(q, eb.N);
        out.N_phi = std::max(out.N_phi, eb.N);
    }
    return out;
}

}  // namespace arbordyn
