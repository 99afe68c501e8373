#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arbordyn/poly.hpp"

namespace arbordyn {

/// Complete factorization over the coefficient field: unit times a product of
/// monic irreducibles with multiplicities, sorted by (degree, coefficients).
struct Factorization {
    FF unit;
    std::vector<std::pair<Poly, uint64_t>> factors;
    bool complete = true;
};

inline constexpr uint64_t kDefaultFactorSeed = 0x41524244594eull;  // "ARBDYN"

/// Squarefree decomposition, then distinct-degree splitting, then randomized
/// equal-degree (Cantor-Zassenhaus) splitting. Deterministic for a fixed seed.
Factorization factor(const Poly& f, uint64_t seed = kDefaultFactorSeed);

bool is_irreducible(const Poly& f);

/// All monic irreducibles over F_q of degree exactly d, ascending — the
/// brute-force oracle (only sensible for q^d small).
std::vector<Poly> monic_irreducibles(const FieldDesc& fd, uint64_t d);

/// Pairwise-coprime refinement: monic polynomials such that every input is a
/// unit times a product of powers of basis elements. No factorization needed;
/// the substrate of the Stoll parity matrices at large degree.
std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs);

}  // namespace arbordyn
