#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "arbordyn/poly.hpp"

namespace arbordyn {

/// Dense univariate polynomial over Z, ascending coefficients, no trailing
/// zeros.
struct IntPoly {
    std::vector<mpz_class> c;

    static IntPoly zero() { return {}; }
    static IntPoly constant(const mpz_class& v);
    static IntPoly from_coeffs(std::vector<mpz_class> asc);
    static IntPoly from_int_coeffs(const std::vector<int64_t>& asc);
    static IntPoly t();

    bool is_zero() const { return c.empty(); }
    int deg() const { return c.empty() ? kNegInfinity : static_cast<int>(c.size()) - 1; }
    bool is_constant() const { return c.size() <= 1; }
    const mpz_class& lc() const;
    mpz_class coeff(size_t i) const { return i < c.size() ? c[i] : mpz_class(0); }
    void normalize();

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f);
IntPoly operator*(const IntPoly& f, const IntPoly& g);
IntPoly scalar_mul(const mpz_class& s, const IntPoly& f);
IntPoly pow(const IntPoly& f, uint64_t e);
IntPoly derivative(const IntPoly& f);
mpz_class eval(const IntPoly& f, const mpz_class& x);
IntPoly compose(const IntPoly& f, const IntPoly& g);

/// Exact division in Z[t]; throws Undefined if not divisible.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);
/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const IntPoly& f);
/// f / content(f), sign chosen so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& f);

/// Primitive gcd with positive leading coefficient (subresultant PRS).
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// Primitive squarefree part over Q with positive leading coefficient:
/// the radical of f up to a rational constant.
IntPoly squarefree_part(const IntPoly& f);
/// True iff f is an integer times a square in Q[t] — the characteristic-0
/// geometric square test (constants are closure squares).
bool is_square_up_to_constant(const IntPoly& f);

/// Yun decomposition of the primitive part over Q: pairwise-coprime primitive
/// squarefree parts with multiplicities (content discarded). f nonzero.
std::vector<std::pair<IntPoly, uint64_t>> squarefree_decomposition_q(const IntPoly& f);
/// Product of the odd-multiplicity parts: the primitive squarefree d with
/// f = c * d * y^2 over Q (constants count as squares). Positive leading
/// coefficient.
IntPoly squarefree_part_geometric(const IntPoly& f);

uint64_t height(const IntPoly& f);

/// Coefficient reduction into F_p (or F_{p^2}'s prime subfield).
Poly reduce_mod(const IntPoly& f, const FieldDesc& fd);

/// Resultant over Z by CRT over word-size primes, with the Hadamard 2-norm
/// bound |Res(f,g)| <= ||f||_2^{deg g} * ||g||_2^{deg f} certifying the
/// modulus. Zero inputs give 0.
mpz_class resultant(const IntPoly& f, const IntPoly& g);
/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f); f nonconstant.
mpz_class discriminant(const IntPoly& f);

/// Subresultant-PRS resultant, the slow cross-check oracle for the CRT path.
mpz_class resultant_prs(const IntPoly& f, const IntPoly& g);

std::string format(const IntPoly& f, const std::string& var = "t");

}  // namespace arbordyn
