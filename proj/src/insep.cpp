#include "arbordyn/insep.hpp"

#include "arbordyn/errors.hpp"

namespace arbordyn {

namespace {

std::string format_rf(const RationalFn& f) {
    if (f.den == Poly::constant(f.den.fd, f.den.fd.one())) return format(f.num);
    return "(" + format(f.num) + ")/(" + format(f.den) + ")";
}

FF unit_pth_root(const FieldDesc& fd, const FF& u) {
    // Frobenius inverse on F_{p^k}: x -> x^{p^{k-1}}.
    return fd.k == 1 ? u : fd.frobenius(u);
}

uint64_t power_chain(const RationalFn& f, std::vector<std::string>* chain) {
    const FieldDesc& fd = f.num.fd;
    uint64_t e = 0;
    Poly n = f.num, d = f.den;
    while (is_pth_power(monic(n)) && is_pth_power(d)) {
        FF un = n.lc();
        n = scalar_mul(unit_pth_root(fd, un), pth_root(monic(n)));
        d = pth_root(d);
        if (chain) chain->push_back(format_rf({n, d}));
        ++e;
    }
    return e;
}

}  // namespace

std::pair<FieldDesc, Poly> closure_sqrt(const Poly& c1) {
    const FieldDesc& fd = c1.fd;
    auto sfd = squarefree_decomposition(c1);
    Poly g = Poly::constant(fd, fd.one());
    for (const auto& [part, mult] : sfd.parts) {
        if (mult % 2 != 0) throw not_a_square("sqrt of a closure non-square");
        g = g * pow(part, mult / 2);
    }
    FieldDesc home = fd.is_square(sfd.unit) ? fd : fd.extension();
    FF u = home.sqrt(fd.k == home.k ? sfd.unit : FF{sfd.unit.a, 0});
    return {home, scalar_mul(u, lift(g, home))};
}

SingularResult detect_singular(const QuadMap& phi) {
    if (!phi.over_fq()) throw domain_mismatch("detect_singular expects an F_q[t] map");
    if (phi.c1.is_zero() || !is_square_in_closure(phi.c1)) return {};
    auto [home, s] = closure_sqrt(phi.c1);
    Poly gc = lift(phi.gamma + phi.c1, home);
    if (gc == -s) return {true, +1};
    if (gc == s) return {true, -1};
    return {};
}

InsepReport insep_degree(const QuadMap& phi) {
    if (!phi.over_fq()) throw domain_mismatch("insep_degree expects an F_q[t] map");
    if (phi.is_isotrivial() || phi.c1.is_zero())
        throw ill_defined("inseparability degree needs a non-isotrivial map with c1 != 0");
    const FieldDesc& fd = *phi.fq;
    InsepReport rep;
    rep.singular = detect_singular(phi);
    if (!is_square_in_closure(phi.c1)) {
        rep.branch = InsepCase::NonSquareC1;
        Poly neg = -phi.c1 - phi.gamma;
        Poly c2 = neg * neg - phi.c1;
        RationalFn expr = RationalFn::make(c2, phi.c1);
        if (expr.is_constant()) throw ill_defined("c_2/c_1 is constant");
        rep.tested_expr = format_rf(expr);
        rep.e = power_chain(expr, &rep.root_chain);
        return rep;
    }
    auto [home, s] = closure_sqrt(phi.c1);
    Poly gc = lift(phi.gamma + phi.c1, home);
    // gamma/sqrt(c1) + sqrt(c1) = (gamma + c1)/sqrt(c1).
    auto run = [&](const Poly& root) {
        RationalFn expr = RationalFn::make(gc, root);
        if (!expr.is_constant()) {
            std::vector<std::string> chain;
            uint64_t e = power_chain(expr, &chain);
            return std::tuple{InsepCase::SquareC1NonConstExpr, expr, e, chain};
        }
        RationalFn base{lift(phi.c1, home), Poly::constant(home, home.one())};
        if (base.is_constant()) throw ill_defined("constant c1 in the constant-expression branch");
        std::vector<std::string> chain;
        uint64_t e = power_chain(base, &chain);
        return std::tuple{InsepCase::SquareC1ConstExpr, base, e, chain};
    };
    auto [cs, expr, e, chain] = run(s);
    auto [cs2, expr2, e2, chain2] = run(-s);
    if (e != e2 || cs != cs2)
        throw ill_defined("inseparability degree depends on the square-root choice");
    rep.branch = cs;
    rep.tested_expr = format_rf(expr);
    rep.e = e;
    rep.root_chain = chain;
    (void)expr2;
    (void)chain2;
    return rep;
}

}  // namespace arbordyn
