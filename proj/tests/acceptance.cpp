// Acceptance runner: prints one pass/fail line per criterion and exits
// nonzero if any fails. Every check is exact; no tolerances anywhere.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arbordyn/galois.hpp"
#include "arbordyn/nt.hpp"
#include "arbordyn/insep.hpp"
#include "arbordyn/orbit.hpp"
#include "arbordyn/parse.hpp"
#include "arbordyn/polyfactor.hpp"
#include "arbordyn/zsig.hpp"

using namespace arbordyn;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("criterion %2d: %s — %s\n", idx, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

IntPoly random_intpoly(int deg, std::mt19937_64& rng) {
    std::vector<int64_t> c(deg + 1);
    for (auto& v : c) v = static_cast<int64_t>(rng() % 9) - 4;
    if (c.back() == 0) c.back() = 1;
    return IntPoly::from_int_coeffs(c);
}

Poly random_poly(const FieldDesc& fd, int deg, std::mt19937_64& rng) {
    std::vector<int64_t> c(deg + 1);
    for (auto& v : c) v = static_cast<int64_t>(rng() % fd.p);
    if (c.back() == 0) c.back() = 1;
    return Poly::from_int_coeffs(fd, c);
}

/// Height laws of the adjusted orbit, n <= cap; returns "" or a description
/// of the first violation.
std::string check_height_laws(const QuadMap& phi, uint64_t cap) {
    HeightProfile hp = height_profile(phi);
    OrbitCache o = adjusted_orbit(phi, cap);
    auto h_c = [&](uint64_t n) {
        return phi.over_fq() ? height(o.fc[n]) : height(o.zc[n]);
    };
    auto h_0 = [&](uint64_t n) {
        return phi.over_fq() ? height(o.fcrit0[n]) : height(o.zcrit0[n]);
    };
    auto bad = [&](uint64_t n, const char* tag) {
        return "case " + std::string(tag) + " fails at n=" + std::to_string(n) + " for " +
               phi.format();
    };
    if (hp.h_gamma != hp.h_c1) {
        for (uint64_t n = 2; n <= cap; ++n) {
            if (h_c(n) != (uint64_t{1} << (n - 1)) * hp.h_phi) return bad(n, "1a");
            if (h_0(n) > (uint64_t{1} << n) * hp.h_phi) return bad(n, "1b");
        }
    } else {
        uint64_t kappa_hi = hp.kappa_exact ? *hp.kappa_exact : hp.kappa_ceiling.value_or(0);
        for (uint64_t n = 1; n <= cap; ++n) {
            if (hp.kappa_exact && n <= *hp.kappa_exact && h_c(n) > hp.h_gamma) return bad(n, "2a");
            if (n > kappa_hi && h_c(n) != (uint64_t{1} << (n - 1)) * hp.h_gc) return bad(n, "2b");
            if (h_0(n) != (uint64_t{1} << n) * hp.h_gamma) return bad(n, "2c");
        }
    }
    return "";
}

void criterion_1() {
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        FieldDesc fd = FieldDesc::prime_field(p);
        BoundConstants bc = bound_constants(parse_map("x^2+t", fd));
        if (bc.A != 8 || bc.B != 144) {
            report(1, false, "x^2+t mod " + std::to_string(p) + " gave A=" + std::to_string(bc.A) +
                                 " B=" + std::to_string(bc.B));
            return;
        }
    }
    report(1, true, "bound constants A=8, B=144 for x^2+t mod p in {3,5,7,11,13}");
}

uint64_t criterion_2() {
    GlobalBound gb = global_bound(parse_map("x^2+t"));
    bool row10 = false, row11 = false;
    for (const auto& r : gb.generic.ledger) {
        if (r.n == 10) row10 = r.lhs == "256" && r.rhs == "392" && !r.excluded;
        if (r.n == 11) row11 = r.lhs == "512" && r.rhs == "392" && r.excluded;
    }
    bool ok = gb.N_phi <= 11 && row10 && row11;
    report(2, ok, "global bound N_phi=" + std::to_string(gb.N_phi) +
                      " (<= 11); ledger: n=10 256<=392 kept, n=11 512>392 excluded");
    return gb.N_phi;
}

void criterion_3() {
    uint64_t n = remark_bound(1);
    report(3, n == 12, "generic-case remark inequality returns n=" + std::to_string(n));
}

void criterion_4() {
    std::mt19937_64 rng(101);
    std::vector<uint64_t> primes{3, 5, 7, 11, 13};
    int done_distinct = 0, done_equal = 0;
    int guard = 0;
    while ((done_distinct < 50 || done_equal < 50) && ++guard < 100000) {
        int dg = rng() % 3, dc = rng() % 4;
        QuadMap phi = [&] {
            if (rng() % 2) return QuadMap::over_z(random_intpoly(dg, rng), random_intpoly(dc, rng));
            FieldDesc fd = FieldDesc::prime_field(primes[rng() % primes.size()]);
            return QuadMap::over_field(fd, random_poly(fd, dg, rng), random_poly(fd, dc, rng));
        }();
        bool zero_c1 = phi.over_fq() ? phi.c1.is_zero() : phi.zc1.is_zero();
        if (phi.is_isotrivial() || zero_c1) continue;
        HeightProfile hp = height_profile(phi);
        int& counter = hp.h_gamma != hp.h_c1 ? done_distinct : done_equal;
        if (counter >= 50) continue;
        std::string err = check_height_laws(phi, 8);
        if (!err.empty()) {
            report(4, false, err);
            return;
        }
        ++counter;
    }
    report(4, done_distinct >= 50 && done_equal >= 50,
           "height laws 1a/1b/2a/2b/2c hold for 50 random maps per case, n <= 8");
}

void criterion_5() {
    std::string exponents;
    QuadMap phi = parse_map("x^2+t");
    for (uint64_t n : {2ull, 3ull, 4ull}) {
        DiscRecursionReport r = discriminant_recursion_check(phi, n);
        if (!r.is_pm_power_of_two) {
            report(5, false, "x^2+t ratio at n=" + std::to_string(n) + " is " + r.ratio);
            return;
        }
        exponents += (exponents.empty() ? "" : ",") + std::to_string(n) + ":" +
                     (r.negative ? "-" : "+") + "2^" +
                     (r.exponent ? std::to_string(*r.exponent) : "?");
    }
    std::mt19937_64 rng(102);
    FieldDesc f5 = FieldDesc::prime_field(5);
    int done = 0, guard = 0;
    while (done < 10 && ++guard < 10000) {
        QuadMap psi = QuadMap::over_field(f5, random_poly(f5, rng() % 2, rng),
                                          random_poly(f5, 1 + rng() % 2, rng));
        if (psi.c1.is_zero() || psi.is_isotrivial()) continue;
        bool ok = true;
        for (uint64_t n : {2ull, 3ull, 4ull}) {
            DiscRecursionReport r = discriminant_recursion_check(psi, n);
            ok = ok && r.is_pm_power_of_two;
        }
        if (!ok) {
            report(5, false, "random F_5 map " + psi.format() + " broke the recursion");
            return;
        }
        ++done;
    }
    report(5, done == 10,
           "disc ratio is +-2^m for x^2+t and 10 random F_5 maps, n in {2,3,4}; "
           "observed x^2+t exponents " + exponents);
}

void criterion_6(uint64_t n_phi) {
    for (uint64_t p = 3; p <= 200; p += 2) {
        if (!nt::is_prime_u64(p)) continue;
        FieldDesc fd = FieldDesc::prime_field(p);
        ZsigmondyReport r = zsigmondy_set(parse_map("x^2+t", fd), 14, /*detail_cap=*/0);
        for (uint64_t m : r.members) {
            if (m > n_phi) {
                report(6, false, "member n=" + std::to_string(m) + " > N_phi at p=" +
                                     std::to_string(p));
                return;
            }
        }
    }
    report(6, true, "Zsigmondy members of x^2+t stay <= N_phi up to depth 14 for odd p <= 200");
}

void criterion_7() {
    for (uint64_t p = 3; p <= 2000; p += 2) {
        if (!nt::is_prime_u64(p)) continue;
        FieldDesc fd = FieldDesc::prime_field(p);
        StollReport r = stoll_rank(parse_map("x^2+t", fd), 11, StollMode::Geometric);
        if (r.rank != 11) {
            report(7, false, "rank " + std::to_string(r.rank) + " != 11 at p=" + std::to_string(p));
            return;
        }
    }
    report(7, true, "geometric Stoll rank of x^2+t is 11 at depth 11 for every odd p <= 2000");
}

void criterion_8() {
    JonesReport r = jones_verify(7, uint64_t{1} << 20, 500);
    bool all_not_square = true;
    bool saw23 = false;
    for (const auto& s : r.subsets) {
        for (const auto& v : s.verdicts) {
            all_not_square = all_not_square && v.verdict == "NotASquare";
            if (s.I == std::vector<uint64_t>{3} && v.p == "23") saw23 = true;
        }
    }
    bool ok = r.complete && r.bad_primes_found.empty() && r.scan_deficiencies.empty() &&
              all_not_square && saw23;
    report(8, ok, std::string("jones depth 7: complete=") + (r.complete ? "true" : "false") +
                      ", bad primes " + std::to_string(r.bad_primes_found.size()) +
                      ", all verdicts NotASquare, subset {3} reproduces prime 23");
}

void criterion_9() {
    std::mt19937_64 rng(103);
    for (uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
        FieldDesc fd = FieldDesc::prime_field(p);
        int done = 0;
        while (done < 10000) {
            Poly a = random_poly(fd, 1 + rng() % 5, rng);
            Poly b = random_poly(fd, 1 + rng() % 5, rng);
            if (a.is_zero() || b.is_zero() || (a + b).is_zero()) continue;
            if (!gcd(a, b).is_constant()) continue;
            MasonStothersReport r = mason_stothers_check(a, b);
            if (!r.preconditions_ok) continue;
            if (!r.holds) {
                report(9, false, "violated at p=" + std::to_string(p) + " a=" + format(a) +
                                     " b=" + format(b));
                return;
            }
            ++done;
        }
    }
    report(9, true, "Mason-Stothers holds for 10^4 coprime triples per p in {3,5,7,13}");
}

void criterion_10() {
    std::mt19937_64 rng(104);
    // (a) factorization vs exhaustive trial division
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        FieldDesc fd = FieldDesc::prime_field(p);
        std::vector<Poly> irred;
        for (uint64_t d = 1; d <= 6; ++d) {
            auto more = monic_irreducibles(fd, d);
            irred.insert(irred.end(), more.begin(), more.end());
        }
        for (int i = 0; i < 25; ++i) {
            Poly f = random_poly(fd, 1 + rng() % 6, rng);
            std::map<std::string, uint64_t> expect;
            Poly rest = f;
            for (const Poly& g : irred)
                while (rest.deg() >= g.deg() && divmod(rest, g).second.is_zero()) {
                    ++expect[format(g)];
                    rest = exact_div(rest, g);
                }
            std::map<std::string, uint64_t> got;
            for (auto& [g, m] : factor(f).factors) got[format(g)] = m;
            if (got != expect) {
                report(10, false, "factor mismatch at p=" + std::to_string(p) + " f=" + format(f));
                return;
            }
        }
    }
    // (b) CRT resultant vs subresultant PRS, deg <= 20
    for (int i = 0; i < 25; ++i) {
        IntPoly f = random_intpoly(1 + rng() % 20, rng);
        IntPoly g = random_intpoly(1 + rng() % 20, rng);
        if (resultant(f, g) != resultant_prs(f, g)) {
            report(10, false, "resultant mismatch: " + format(f) + " vs " + format(g));
            return;
        }
    }
    // (c) field sqrt vs brute force, p < 100
    for (uint64_t p = 3; p < 100; p += 2) {
        if (!nt::is_prime_u64(p)) continue;
        FieldDesc fd = FieldDesc::prime_field(p);
        std::set<uint64_t> squares;
        for (uint64_t x = 0; x < p; ++x) squares.insert(x * x % p);
        for (uint64_t a = 0; a < p; ++a) {
            bool sq = squares.count(a) > 0;
            if (fd.is_square({a, 0}) != sq) {
                report(10, false, "is_square mismatch at p=" + std::to_string(p));
                return;
            }
            if (sq) {
                FF r = fd.sqrt({a, 0});
                if (fd.mul(r, r).a != a) {
                    report(10, false, "sqrt mismatch at p=" + std::to_string(p));
                    return;
                }
            }
        }
    }
    // (d) pth_power_degree on constructed p^i-th powers, i <= 3
    for (uint64_t p : {3ull, 5ull}) {
        FieldDesc fd = FieldDesc::prime_field(p);
        for (uint64_t i = 0; i <= 3; ++i) {
            Poly base = Poly::from_int_coeffs(fd, {1, 1});  // t+1, not a p-th power
            uint64_t e = 1;
            for (uint64_t k = 0; k < i; ++k) e *= p;
            RationalFn rf{pow(base, e), Poly::constant(fd, fd.one())};
            if (pth_power_degree(rf) != i) {
                report(10, false, "pth_power_degree((t+1)^" + std::to_string(e) + ") != " +
                                      std::to_string(i) + " at p=" + std::to_string(p));
                return;
            }
        }
    }
    report(10, true, "oracle equivalences: factor/trial division, CRT/PRS resultants, "
                     "sqrt/brute force, pth_power_degree on constructed powers");
}

void criterion_11() {
    FieldDesc f3 = FieldDesc::prime_field(3);
    InsepReport a = insep_degree(parse_map("x^2+t", f3));
    InsepReport b = insep_degree(parse_map("x^2-t^3", f3));
    FieldDesc f5 = FieldDesc::prime_field(5);
    QuadMap sing = QuadMap::over_field(f5, Poly::from_int_coeffs(f5, {0, -1, -1}),
                                       Poly::from_int_coeffs(f5, {0, 0, 1}));
    InsepReport c = insep_degree(sing);
    BoundConstants bc = bound_constants(sing);
    bool ok = a.e == 0 && b.e == 1 && c.e == 0 && c.branch == InsepCase::SquareC1ConstExpr &&
              c.singular.yes && c.singular.eta == 1 && bc.singular && bc.B == 124;
    report(11, ok, "insep fixtures: x^2+t e=0; x^2-t^3 (F_3) e=1; singular fixture "
                   "SquareC1ConstExpr, eta=+1, e=0, B=124");
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    uint64_t n_phi = criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6(n_phi);
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    std::printf("%s (%d failed, %llds)\n", failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES",
                failures, static_cast<long long>(secs));
    return failures == 0 ? 0 : 1;
}
