#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbordyn/orbit.hpp"

namespace arbordyn {

enum class StollMode { Geometric, Arithmetic };

/// The F_2 parity space of the square classes of c_1..c_depth.
struct StollReport {
    uint64_t depth = 0;
    StollMode mode = StollMode::Geometric;
    /// Ordered column labels: unit-character columns first (Arithmetic mode),
    /// then the coprime polynomial base, deterministically ordered.
    std::vector<std::string> base;
    /// Row i-1 is the parity vector of c_i over the base (packed elsewhere;
    /// exposed as 0/1 per column for reporting).
    std::vector<std::vector<uint8_t>> parity_matrix;
    uint64_t rank = 0;
    /// Largest m <= depth with the first m rows independent.
    uint64_t surjective_up_to = 0;
};

/// Stoll's criterion as linear algebra over F_2. Geometric mode takes classes
/// in k(t)^x modulo squares and constants; Arithmetic mode keeps the unit via
/// quadratic-character bits (F_q) or sign plus squarefree-content support (Z).
/// No polynomial factorization: the base is a gcd-refined coprime basis.
StollReport stoll_rank(const QuadMap& phi, uint64_t depth, StollMode mode);

struct StabilityCertificate {
    bool certified = false;  // false = Unknown, never "unstable"
    uint64_t depth = 0;
};

/// CertifiedStable(depth) when the geometric Stoll rank is full (maximal
/// action implies transitivity on each level, hence irreducible iterates).
StabilityCertificate geometric_stability_certificate(const QuadMap& phi, uint64_t depth);

struct MasonStothersReport {
    bool preconditions_ok = true;
    std::string precondition_failure;
    uint64_t e = 0;       // extracted p-power degree of b/c
    uint64_t lhs = 0;     // h(b/c)
    uint64_t places = 0;  // |V|: deg rad(abc) + the infinite place when unbalanced
    uint64_t rhs = 0;     // p^e * (|V| - 2)
    bool holds = false;
};

/// The genus-0 abc inequality h(b/c) <= p^e(|V| - 2) for a + b + c = 0 with
/// a, b coprime; e is extracted when b/c is a p-th power. Violated
/// preconditions are reported, not asserted.
MasonStothersReport mason_stothers_check(const Poly& a, const Poly& b);

struct JonesSubset {
    std::vector<uint64_t> I;
    uint64_t deg_d = 0;
    /// disc(d_I): full factored form when complete.
    std::vector<std::pair<std::string, uint64_t>> disc_factors;  // (prime, mult)
    std::vector<std::string> unfactored;  // leftover composite cofactors
    std::vector<uint64_t> candidate_primes;
    struct Verdict {
        std::string p;        // decimal; may exceed a word
        std::string verdict;  // "NotASquare" / "IsASquare"
    };
    std::vector<Verdict> verdicts;
    /// Outcome of the composite-modulus square test covering the primes of
    /// each unfactored cofactor: "NotASquareForAllPrimes" or the offending
    /// moduli. Empty when there is nothing to certify.
    std::string cofactor_certificate;
};

struct JonesReport {
    uint64_t depth = 0;
    std::vector<JonesSubset> subsets;
    std::vector<std::string> bad_primes_found;
    /// (p, rank) for every odd p <= scan_cap with geometric rank < depth.
    std::vector<std::pair<uint64_t, uint64_t>> scan_deficiencies;
    uint64_t scan_cap = 0;
    bool complete = true;
};

/// Verification pipeline for x^2 + t: for every nonempty I subset of
/// {1..depth}, the odd primes p dividing disc(d_I) are checked so that
/// prod_{i in I} c_i stays a non-square in F_p-bar[t]. Primes hidden in
/// cofactors that resist factoring (budget = factor_effort Brent iterations)
/// are covered by an exact square test modulo the cofactor itself; complete
/// means every candidate prime was resolved, explicitly or by that test.
/// A complementary geometric-rank scan runs for every odd p <= scan_cap.
/// checkpoint_dir, when nonempty, stores one resumable JSON file per subset;
/// jobs > 1 runs subsets on a worker pool with a deterministic reduce.
JonesReport jones_verify(uint64_t depth, uint64_t factor_effort, uint64_t scan_cap,
                         const std::string& checkpoint_dir = "", uint64_t jobs = 1);

}  // namespace arbordyn
