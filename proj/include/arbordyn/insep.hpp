#pragma once

#include <string>
#include <vector>

#include "arbordyn/orbit.hpp"

namespace arbordyn {

enum class InsepCase { NonSquareC1, SquareC1NonConstExpr, SquareC1ConstExpr };

/// The configuration gamma + c1 + eta*sqrt(c1) = 0.
struct SingularResult {
    bool yes = false;
    int eta = 0;  // +1 or -1 when yes
};

struct InsepReport {
    uint64_t e = 0;
    InsepCase branch = InsepCase::NonSquareC1;
    SingularResult singular;
    /// The rational function whose p-th-power chain defines e, rendered.
    std::string tested_expr;
    /// Successive exact p-th roots extracted from it.
    std::vector<std::string> root_chain;
};

/// Canonical square root of a closure square: canonical unit root (possibly
/// in F_{p^2}) times the monic square root, with the field it lives in.
std::pair<FieldDesc, Poly> closure_sqrt(const Poly& c1);

/// Requires c1 a closure square (else No outright): tests gamma = -c1 -+ sqrt(c1)
/// against the canonical root.
SingularResult detect_singular(const QuadMap& phi);

/// Dynamical inseparability degree of an F_q[t] map; non-isotrivial, c1 != 0.
/// Branches on whether c1 is a square in the closure; square roots may live
/// over F_{p^2}. The result is checked to be independent of the root choice.
InsepReport insep_degree(const QuadMap& phi);

}  // namespace arbordyn
