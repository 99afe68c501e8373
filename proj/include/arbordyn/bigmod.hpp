#pragma once

#include <gmpxx.h>

#include <vector>

#include "arbordyn/intpoly.hpp"

namespace arbordyn {

/// Outcome of the closure-square test for f modulo every prime divisor of a
/// (possibly composite, possibly unfactored) odd modulus m.
///
/// The computation runs in (Z/m)[t]. Whenever a leading coefficient fails to
/// be invertible, the modulus splits and both parts are re-run, so every
/// completed run has coherent degrees modulo each prime divisor of its
/// modulus. Monic nonconstant odd-multiplicity parts stay nonconstant modulo
/// every prime, which is what makes the composite verdict sound.
///
/// Precondition (checked): m has no prime divisor <= deg f, so the
/// characteristic-p branch of squarefree decomposition cannot trigger and
/// multiplicities (<= deg f) cannot vanish mod any prime divisor.
struct BigSquareOutcome {
    bool not_square_for_all_primes = false;
    /// Final moduli (pairwise runs) whose primes see a square — empty on success.
    std::vector<mpz_class> square_moduli;
    /// Proper divisors of m discovered as zero-divisor splits (free factors).
    std::vector<mpz_class> splits_found;
};

/// Is f a square in F_q[t] up to a constant, for every prime q | m at once?
/// Requires lc(f) coprime to m and m odd, coprime to every prime <= deg f.
BigSquareOutcome is_square_in_closure_mod(const IntPoly& f, const mpz_class& m);

}  // namespace arbordyn
