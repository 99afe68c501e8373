#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbordyn/insep.hpp"
#include "arbordyn/orbit.hpp"
#include "arbordyn/polyfactor.hpp"

namespace arbordyn {

/// Constants (e, A, B, n0) of the effective height bound, regular or singular
/// branch.
struct BoundConstants {
    uint64_t e = 0;
    uint64_t A = 0;   // 8 p^e
    uint64_t B = 0;   // branch formula
    uint64_t n0 = 0;  // smallest n the bound is asserted for
    bool singular = false;
};

/// Regular branch: B = 8p^e(h(d1)+4+4h(rad c1)+4h(rad c2)) + 4h(gamma) + 8h(c1),
/// n0 = least n >= 3 with h(gamma+c1)*2^{n-3} > h(phi).
/// Singular branch: B = 8p^e(h(d~1)+4+4h(rad c1)+4h(rad(sqrt(c1)+2))) + 10h(c1),
/// n0 = 4.
BoundConstants bound_constants(const QuadMap& phi);

/// All irreducible factors of c_n dividing no earlier nonzero c_i, with their
/// multiplicities in c_n.
std::vector<std::pair<Poly, uint64_t>> primitive_divisors(OrbitCache& orbit, uint64_t n,
                                                          uint64_t seed = kDefaultFactorSeed);

struct ZsigmondyReport {
    uint64_t scanned_up_to = 0;
    std::vector<uint64_t> members;
    /// Indices with c_i = 0 (excluded from membership and from comparison).
    std::vector<uint64_t> vanishing;
    struct PerN {
        uint64_t n = 0;
        bool member = false;
        bool detailed = false;  // factor list present (degree under the cap)
        std::vector<std::pair<std::string, uint64_t>> primitive;
    };
    std::vector<PerN> per_n;
};

/// Exact membership for 1 <= n <= M. Membership is decided by gcds alone
/// (odd-multiplicity part of c_n versus earlier orbit elements); irreducible
/// factor lists are attached only while deg c_n <= detail_cap.
ZsigmondyReport zsigmondy_set(const QuadMap& phi, uint64_t M, uint64_t detail_cap = 64);

/// Characteristic-0 analogue over Z[t] (squarefree parts over Q, gcd-based).
ZsigmondyReport zsigmondy_set_z(const QuadMap& phi, uint64_t M);

struct ExclusionLedgerRow {
    uint64_t n = 0;
    std::string lhs, rhs;  // exact integers, formatted
    bool excluded = false;
};

struct EffectiveBound {
    BoundConstants constants;
    uint64_t N = 0;  // largest index not excluded
    std::vector<ExclusionLedgerRow> ledger;
};

/// Largest n not excluded by the height inequality under the Zsigmondy
/// divisor bound; scans from n0 and stops once exclusion is permanent by the
/// exponential-majorant criterion. Caps at n = 64 (CapExceeded beyond).
EffectiveBound effective_bound(const QuadMap& phi);

/// The generic-case Remark inequality 2^{n-2} <= 8p^e(3*2^{floor(n/2)}-3) +
/// 136p^e + 12; returns the largest n not excluded (12 at e = 0).
uint64_t remark_bound(uint64_t p_pow_e);

struct ExceptionalPrimes {
    std::vector<uint64_t> T;
    std::vector<uint64_t> S;  // includes T
    /// (prime, reason tag) for every certified inclusion.
    std::vector<std::pair<uint64_t, std::string>> reasons;
};

/// T: primes where the reduction is isotrivial or c1 vanishes. S: T plus the
/// primes where e_p > 0 or h(phi_p) < h(phi); candidates are over-inclusive
/// by construction and then resolved exactly mod p.
ExceptionalPrimes exceptional_primes(const QuadMap& phi);

struct GlobalBound {
    uint64_t N_phi = 0;
    EffectiveBound generic;  // e = 0, characteristic-0 heights
    ExceptionalPrimes primes;
    std::vector<std::pair<uint64_t, uint64_t>> per_prime;  // (q, N_q) for q in S\T
};

GlobalBound global_bound(const QuadMap& phi);

}  // namespace arbordyn
