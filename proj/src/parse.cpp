#include "arbordyn/parse.hpp"

#include <cctype>

#include "arbordyn/errors.hpp"
#include "arbordyn/xpoly.hpp"

namespace arbordyn {

namespace {

/// Bivariate polynomial in x with Z[t] coefficients, the parser's value type.
using Biv = XPoly<IntPolyRing>;

class Parser {
public:
    explicit Parser(const std::string& s, bool allow_x) : s_(s), allow_x_(allow_x) {}

    Biv parse() {
        Biv v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    bool allow_x_;
    IntPolyRing R_;

    [[noreturn]] void fail(const std::string& why) {
        throw parse_error(why + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Biv expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Biv acc = term();
        if (neg) acc = xp_scalar_mul(R_, IntPoly::constant(-1), acc);
        while (true) {
            if (eat('+')) {
                acc = xp_add(R_, acc, term());
            } else if (eat('-')) {
                acc = xp_sub(R_, acc, term());
            } else {
                return acc;
            }
        }
    }

    Biv term() {
        Biv acc = factor();
        while (eat('*')) acc = xp_mul(R_, acc, factor());
        return acc;
    }

    Biv factor() {
        Biv base = atom();
        if (eat('^')) {
            uint64_t e = natural();
            Biv acc{R_.one()};
            for (uint64_t i = 0; i < e; ++i) acc = xp_mul(R_, acc, base);
            return acc;
        }
        return base;
    }

    uint64_t natural() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected exponent");
        uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 100000) fail("exponent too large");
            ++pos_;
        }
        return v;
    }

    Biv atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Biv v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 't') {
            ++pos_;
            return {IntPoly::t()};
        }
        if (c == 'x') {
            if (!allow_x_) fail("variable x not allowed here");
            ++pos_;
            return {IntPoly::zero(), IntPoly::constant(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {IntPoly::constant(mpz_class(s_.substr(start, pos_ - start)))};
        }
        if (c == '-') {
            ++pos_;
            return xp_scalar_mul(R_, IntPoly::constant(-1), factor());
        }
        fail("unexpected character");
    }
};

/// Extract (b, c) from a monic quadratic x^2 + b x + c.
std::pair<IntPoly, IntPoly> monic_quadratic(const Biv& f) {
    if (xp_deg(f) != 2) throw parse_error("map must be quadratic in x");
    if (!(f[2] == IntPoly::constant(1))) throw parse_error("map must be monic in x");
    return {f[1], f[0]};
}

}  // namespace

IntPoly parse_intpoly(const std::string& text) {
    Biv v = Parser(text, false).parse();
    return v.empty() ? IntPoly::zero() : v[0];
}

Poly parse_poly(const std::string& text, const FieldDesc& fd) {
    return reduce_mod(parse_intpoly(text), fd);
}

QuadMap parse_map(const std::string& text) {
    auto [b, c] = monic_quadratic(Parser(text, true).parse());
    // gamma = -b/2, c1 = gamma^2 - c.
    IntPoly gamma;
    for (const auto& v : b.c) {
        if (mpz_odd_p(v.get_mpz_t())) throw parse_error("gamma = -b/2 not integral over Z[t]");
        gamma.c.push_back(-v / 2);
    }
    gamma.normalize();
    IntPoly c1 = gamma * gamma - c;
    return QuadMap::over_z(gamma, c1);
}

QuadMap parse_map(const std::string& text, const FieldDesc& fd) {
    auto [b, c] = monic_quadratic(Parser(text, true).parse());
    Poly bp = reduce_mod(b, fd), cp = reduce_mod(c, fd);
    FF half = fd.inv(fd.from_int(2));
    Poly gamma = scalar_mul(fd.neg(half), bp);
    Poly c1 = gamma * gamma - cp;
    return QuadMap::over_field(fd, gamma, c1);
}

}  // namespace arbordyn
