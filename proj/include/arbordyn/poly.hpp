#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arbordyn/fields.hpp"

namespace arbordyn {

/// Degree of the zero polynomial. All comparisons treat it as -infinity;
/// height() maps it to 0 by the documented convention.
inline constexpr int kNegInfinity = -1;

/// Dense univariate polynomial over F_q, ascending coefficients, no
/// trailing zeros.
struct Poly {
    FieldDesc fd;
    std::vector<FF> c;

    static Poly zero(const FieldDesc& fd) { return {fd, {}}; }
    static Poly constant(const FieldDesc& fd, const FF& v);
    static Poly from_int_coeffs(const FieldDesc& fd, const std::vector<int64_t>& asc);
    /// The monomial t.
    static Poly t(const FieldDesc& fd);

    bool is_zero() const { return c.empty(); }
    int deg() const { return c.empty() ? kNegInfinity : static_cast<int>(c.size()) - 1; }
    bool is_constant() const { return c.size() <= 1; }
    FF lc() const;
    FF coeff(size_t i) const { return i < c.size() ? c[i] : fd.zero(); }
    void normalize();

    bool operator==(const Poly& o) const { return fd == o.fd && c == o.c; }
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const Poly& f, const Poly& g);

Poly scalar_mul(const FF& s, const Poly& f);
Poly monic(const Poly& f);
/// Quotient and remainder; divisor nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
/// Exact division; throws Undefined if the remainder is nonzero.
Poly exact_div(const Poly& f, const Poly& g);
Poly pow(const Poly& f, uint64_t e);
Poly derivative(const Poly& f);
FF eval(const Poly& f, const FF& x);
/// f(g(t)).
Poly compose(const Poly& f, const Poly& g);

/// Monic gcd; throws Undefined when both are zero.
Poly gcd(const Poly& f, const Poly& g);

/// Deterministic total order: by degree, then coefficients from the top.
bool poly_less(const Poly& a, const Poly& b);

/// Degree for nonzero polynomials, 0 for the zero polynomial.
uint64_t height(const Poly& f);

/// Map the coefficients into a larger field (same p). Throws DomainMismatch
/// unless f.fd is a subfield of target.
Poly lift(const Poly& f, const FieldDesc& target);

/// Coefficient-wise p-th root; throws NotAPthPower when some exponent with a
/// nonzero coefficient is not divisible by p.
Poly pth_root(const Poly& f);
bool is_pth_power(const Poly& f);

/// Squarefree decomposition valid in characteristic p (p-th-root branch
/// included): f = unit * prod part^mult with parts monic, squarefree,
/// pairwise coprime, sorted by (degree, coefficients).
struct SquarefreeDecomposition {
    FF unit;
    std::vector<std::pair<Poly, uint64_t>> parts;
};
SquarefreeDecomposition squarefree_decomposition(const Poly& f);

/// Monic product of distinct irreducible factors.
Poly radical(const Poly& f);

/// Monic product of the odd-multiplicity parts: the squarefree d with
/// f = c * d * y^2 over the algebraic closure (constants are closure squares).
Poly squarefree_part_geometric(const Poly& f);

/// True iff f is a constant times a square in F_q[t] (equivalently, a square
/// in the closure). Throws Undefined on zero input.
bool is_square_in_closure(const Poly& f);

/// Resultant of two polynomials over F_q (0 when both nonconstant share a
/// factor); Res(f, g) with the standard sign conventions.
FF resultant(const Poly& f, const Poly& g);
/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f); f nonconstant.
FF discriminant(const Poly& f);

/// Rational function in lowest terms, monic denominator.
struct RationalFn {
    Poly num;
    Poly den;

    static RationalFn make(const Poly& num, const Poly& den);
    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.is_constant() && den.is_constant(); }
    bool operator==(const RationalFn& o) const { return num == o.num && den == o.den; }
};

uint64_t height(const RationalFn& f);

/// Largest i such that f is a p^i-th power in F_q(t); f nonzero and
/// nonconstant (constants are p^i-th powers for every i → Undefined).
uint64_t pth_power_degree(const RationalFn& f);

/// Render with descending exponents, e.g. "t^4+2*t^3+t^2+t"; F_{p^2}
/// coefficients are parenthesized "(a+b*u)".
std::string format(const Poly& f, const std::string& var = "t");

}  // namespace arbordyn
