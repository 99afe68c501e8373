#pragma once

#include <cstdint>
#include <string>

#include "arbordyn/nt.hpp"

namespace arbordyn {

/// Raw coordinates of an element of F_p or F_{p^2}: a + b*u with u the
/// adjoined root (b is always 0 when k = 1). Arithmetic lives on FieldDesc.
struct FF {
    uint64_t a = 0;
    uint64_t b = 0;
    bool operator==(const FF&) const = default;
};

using u128 = unsigned __int128;

/// Description of F_p (k = 1) or F_{p^2} (k = 2, modulus u^2 + m1*u + m0,
/// the lexicographically least monic irreducible quadratic over F_p).
struct FieldDesc {
    uint64_t p = 0;
    uint32_t k = 1;
    uint64_t m0 = 0, m1 = 0;
    uint64_t up_a = 0, up_b = 1;  // u^p = up_a + up_b*u, precomputed

    static FieldDesc prime_field(uint64_t p);
    static FieldDesc quadratic_ext(uint64_t p);
    /// The degree-2 extension of this field (identity if already k = 2).
    FieldDesc extension() const;

    bool operator==(const FieldDesc& o) const {
        return p == o.p && k == o.k && m0 == o.m0 && m1 == o.m1;
    }
    /// True when `o` is the same field or this is its prime subfield.
    bool subfield_of(const FieldDesc& o) const { return p == o.p && (k == 1 || *this == o); }

    u128 q() const { return k == 1 ? u128(p) : u128(p) * p; }

    FF zero() const { return {0, 0}; }
    FF one() const { return {1 % p, 0}; }
    FF from_int(int64_t v) const;
    bool is_zero(const FF& x) const { return x.a == 0 && x.b == 0; }

    FF add(const FF& x, const FF& y) const {
        return {nt::addmod(x.a, y.a, p), nt::addmod(x.b, y.b, p)};
    }
    FF sub(const FF& x, const FF& y) const {
        return {nt::submod(x.a, y.a, p), nt::submod(x.b, y.b, p)};
    }
    FF neg(const FF& x) const { return {x.a ? p - x.a : 0, x.b ? p - x.b : 0}; }
    FF mul(const FF& x, const FF& y) const;
    FF scalar_mul(uint64_t s, const FF& x) const { return {nt::mulmod(s, x.a, p), nt::mulmod(s, x.b, p)}; }
    FF inv(const FF& x) const;
    FF div(const FF& x, const FF& y) const { return mul(x, inv(y)); }
    FF pow(FF x, u128 e) const;
    FF frobenius(const FF& x) const;

    bool is_square(const FF& x) const;
    /// Canonical square root: the lexicographically smaller of the two roots
    /// under the [0,p) coordinate representation. Throws NotASquare.
    FF sqrt(const FF& x) const;

    std::string format(const FF& x) const;
    FF parse(const std::string& s) const;
};

/// Value-semantics wrapper pairing an element with its field.
struct FieldElem {
    FieldDesc fd;
    FF v;

    static FieldElem make(const FieldDesc& fd, int64_t x) { return {fd, fd.from_int(x)}; }
    bool operator==(const FieldElem& o) const { return fd == o.fd && v == o.v; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
};

}  // namespace arbordyn
