#include "arbordyn/fields.hpp"

#include <cstdlib>

#include "arbordyn/errors.hpp"

namespace arbordyn {

using nt::addmod;
using nt::mulmod;
using nt::submod;

FieldDesc FieldDesc::prime_field(uint64_t p) {
    if (p == 2 || !nt::is_prime_u64(p))
        throw domain_mismatch("field characteristic must be an odd prime, got " + std::to_string(p));
    FieldDesc fd;
    fd.p = p;
    fd.k = 1;
    return fd;
}

static bool quadratic_irreducible(uint64_t p, uint64_t m0, uint64_t m1) {
    // u^2 + m1*u + m0 has a root in F_p iff its discriminant is a square.
    uint64_t disc = submod(mulmod(m1, m1, p), mulmod(4 % p, m0, p), p);
    if (disc == 0) return false;
    return nt::powmod(disc, (p - 1) / 2, p) != 1;
}

FieldDesc FieldDesc::quadratic_ext(uint64_t p) {
    FieldDesc fd = prime_field(p);
    fd.k = 2;
    bool found = false;
    for (uint64_t m1 = 0; m1 < p && !found; ++m1)
        for (uint64_t m0 = 0; m0 < p; ++m0)
            if (quadratic_irreducible(p, m0, m1)) {
                fd.m0 = m0;
                fd.m1 = m1;
                found = true;
                break;
            }
    FF up = fd.pow({0, 1}, p);
    fd.up_a = up.a;
    fd.up_b = up.b;
    return fd;
}

FieldDesc FieldDesc::extension() const { return k == 2 ? *this : quadratic_ext(p); }

FF FieldDesc::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p);
    if (r < 0) r += static_cast<int64_t>(p);
    return {static_cast<uint64_t>(r), 0};
}

FF FieldDesc::mul(const FF& x, const FF& y) const {
    if (k == 1 || (x.b == 0 && y.b == 0)) return {mulmod(x.a, y.a, p), 0};
    // (xa + xb u)(ya + yb u) with u^2 = -m1 u - m0
    uint64_t aa = mulmod(x.a, y.a, p);
    uint64_t bb = mulmod(x.b, y.b, p);
    uint64_t cross = addmod(mulmod(x.a, y.b, p), mulmod(x.b, y.a, p), p);
    uint64_t ra = submod(aa, mulmod(bb, m0, p), p);
    uint64_t rb = submod(cross, mulmod(bb, m1, p), p);
    return {ra, rb};
}

FF FieldDesc::frobenius(const FF& x) const {
    if (k == 1 || x.b == 0) return x;
    // (a + b u)^p = a + b u^p
    FF up{up_a, up_b};
    return add({x.a, 0}, mul({x.b, 0}, up));
}

FF FieldDesc::inv(const FF& x) const {
    if (is_zero(x)) throw division_by_zero();
    if (k == 1 || x.b == 0) return {nt::invmod(x.a, p), 0};
    FF conj = frobenius(x);
    FF norm = mul(x, conj);  // lands in the prime field
    uint64_t ninv = nt::invmod(norm.a, p);
    return scalar_mul(ninv, conj);
}

FF FieldDesc::pow(FF x, u128 e) const {
    FF r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

bool FieldDesc::is_square(const FF& x) const {
    if (is_zero(x)) return true;
    FF t = pow(x, (q() - 1) / 2);
    return t == one();
}

static bool ff_lex_less(const FF& x, const FF& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
}

FF FieldDesc::sqrt(const FF& x) const {
    if (!is_square(x)) throw not_a_square("sqrt of a non-square");
    if (is_zero(x)) return x;
    // Tonelli-Shanks in the cyclic group F_q^x, q odd.
    u128 m = q() - 1;
    int s = 0;
    while ((m & 1) == 0) { m >>= 1; ++s; }
    FF r, t, z;
    if (s == 1) {
        r = pow(x, (m + 1) / 2);
    } else {
        // first non-square in canonical enumeration order
        bool found = false;
        for (uint64_t b = 0; b < (k == 2 ? p : 1) && !found; ++b)
            for (uint64_t a = 0; a < p; ++a) {
                FF c{a, b};
                if (!is_zero(c) && !is_square(c)) { z = c; found = true; break; }
            }
        FF cc = pow(z, m);
        t = pow(x, m);
        r = pow(x, (m + 1) / 2);
        int mm = s;
        while (!(t == one())) {
            FF t2 = t;
            int i = 0;
            while (!(t2 == one())) { t2 = mul(t2, t2); ++i; }
            FF b = cc;
            for (int j = 0; j < mm - i - 1; ++j) b = mul(b, b);
            r = mul(r, b);
            cc = mul(b, b);
            t = mul(t, cc);
            mm = i;
        }
    }
    FF other = neg(r);
    return ff_lex_less(r, other) ? r : other;
}

std::string FieldDesc::format(const FF& x) const {
    if (k == 1) return std::to_string(x.a);
    return std::to_string(x.a) + "+" + std::to_string(x.b) + "*u";
}

FF FieldDesc::parse(const std::string& s) const {
    FF r{0, 0};
    size_t plus = s.find('+');
    auto parse_part = [&](const std::string& part) {
        size_t star = part.find('*');
        if (star != std::string::npos || part == "u") {
            uint64_t coef = (part == "u") ? 1 : std::strtoull(part.substr(0, star).c_str(), nullptr, 10);
            r.b = addmod(r.b, coef % p, p);
        } else {
            r.a = addmod(r.a, std::strtoull(part.c_str(), nullptr, 10) % p, p);
        }
    };
    if (plus == std::string::npos) {
        parse_part(s);
    } else {
        parse_part(s.substr(0, plus));
        parse_part(s.substr(plus + 1));
    }
    if (r.b != 0 && k == 1) throw parse_error("extension element in a prime field context");
    return r;
}

static void check_same(const FieldDesc& a, const FieldDesc& b) {
    if (!(a == b)) throw domain_mismatch("operands live in different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const { check_same(fd, o.fd); return {fd, fd.add(v, o.v)}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { check_same(fd, o.fd); return {fd, fd.sub(v, o.v)}; }
FieldElem FieldElem::operator*(const FieldElem& o) const { check_same(fd, o.fd); return {fd, fd.mul(v, o.v)}; }
FieldElem FieldElem::operator/(const FieldElem& o) const { check_same(fd, o.fd); return {fd, fd.div(v, o.v)}; }

}  // namespace arbordyn
