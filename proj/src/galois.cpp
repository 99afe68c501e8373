#include "arbordyn/galois.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

#include "arbordyn/bigmod.hpp"
#include "arbordyn/errors.hpp"
#include "arbordyn/intfactor.hpp"
#include "arbordyn/nt.hpp"
#include "arbordyn/parse.hpp"
#include "arbordyn/polyfactor.hpp"

namespace arbordyn {

namespace {

using json = nlohmann::ordered_json;

bool int_poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (size_t i = a.c.size(); i-- > 0;) {
        int c = cmp(a.c[i], b.c[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

/// Coprime refinement over Z[t]: primitive nonconstant outputs, pairwise
/// coprime over Q, every squarefree input a constant times a product of them.
std::vector<IntPoly> z_coprime_basis(const std::vector<IntPoly>& inputs) {
    std::vector<IntPoly> basis;
    std::vector<IntPoly> queue;
    for (const auto& f : inputs) {
        IntPoly p = primitive_part(f);
        if (!p.is_constant()) queue.push_back(p);
    }
    while (!queue.empty()) {
        IntPoly x = queue.back();
        queue.pop_back();
        if (x.is_constant()) continue;
        bool split = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            IntPoly g = gcd(basis[i], x);
            if (g.is_constant()) continue;
            if (!(g == basis[i])) {
                IntPoly rest = primitive_part(exact_div(basis[i], g));
                basis[i] = g;
                if (!rest.is_constant()) queue.push_back(rest);
            }
            IntPoly xr = primitive_part(exact_div(x, g));
            if (!xr.is_constant()) queue.push_back(xr);
            split = true;
            break;
        }
        if (!split) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end(), int_poly_less);
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

bool divides_z(const IntPoly& d, const IntPoly& f) {
    return !gcd(d, f).is_constant() && gcd(d, f) == d;
}

/// Packed-bit F_2 elimination with pivot = lowest column; returns the rank
/// and the first 1-based row index that reduced to zero (0 if none).
std::pair<uint64_t, uint64_t> f2_rank(const std::vector<std::vector<uint8_t>>& rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t words = (cols + 63) / 64;
    std::vector<std::pair<size_t, std::vector<uint64_t>>> pivots;  // (col, row)
    uint64_t rank = 0, first_dependent = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<uint64_t> v(words, 0);
        for (size_t c = 0; c < cols; ++c)
            if (rows[r][c]) v[c / 64] |= 1ull << (c % 64);
        for (const auto& [pc, pv] : pivots)
            if (v[pc / 64] >> (pc % 64) & 1)
                for (size_t w = 0; w < words; ++w) v[w] ^= pv[w];
        size_t pivot = cols;
        for (size_t c = 0; c < cols; ++c)
            if (v[c / 64] >> (c % 64) & 1) {
                pivot = c;
                break;
            }
        if (pivot == cols) {
            if (first_dependent == 0) first_dependent = r + 1;
            continue;
        }
        pivots.emplace_back(pivot, std::move(v));
        ++rank;
    }
    return {rank, first_dependent};
}

StollReport stoll_rank_fq(const QuadMap& phi, uint64_t depth, StollMode mode) {
    const FieldDesc& fd = *phi.fq;
    OrbitCache orbit = adjusted_orbit(phi, depth);
    std::vector<Poly> sq;
    std::vector<FF> units;
    for (uint64_t i = 1; i <= depth; ++i) {
        if (orbit.fc[i].is_zero()) throw ill_defined("c_i = 0 in the Stoll matrix");
        sq.push_back(squarefree_part_geometric(orbit.fc[i]));
        units.push_back(orbit.fc[i].lc());
    }
    std::vector<Poly> nonconst;
    for (const auto& s : sq)
        if (!s.is_constant()) nonconst.push_back(s);
    std::vector<Poly> basis = coprime_basis(nonconst);
    std::sort(basis.begin(), basis.end(), poly_less);

    StollReport rep;
    rep.depth = depth;
    rep.mode = mode;
    if (mode == StollMode::Arithmetic) rep.base.push_back("unit");
    for (const auto& b : basis) rep.base.push_back(format(b));
    for (uint64_t i = 0; i < depth; ++i) {
        std::vector<uint8_t> row;
        if (mode == StollMode::Arithmetic) row.push_back(fd.is_square(units[i]) ? 0 : 1);
        for (const auto& b : basis)
            row.push_back(divmod(sq[i], b).second.is_zero() ? 1 : 0);
        rep.parity_matrix.push_back(std::move(row));
    }
    auto [rank, first_dep] = f2_rank(rep.parity_matrix);
    rep.rank = rank;
    rep.surjective_up_to = first_dep == 0 ? depth : first_dep - 1;
    return rep;
}

StollReport stoll_rank_z(const QuadMap& phi, uint64_t depth, StollMode mode) {
    OrbitCache orbit = adjusted_orbit(phi, depth);
    std::vector<IntPoly> sq;
    std::vector<bool> sign_bits;
    std::vector<mpz_class> contents;
    for (uint64_t i = 1; i <= depth; ++i) {
        const IntPoly& ci = orbit.zc[i];
        if (ci.is_zero()) throw ill_defined("c_i = 0 in the Stoll matrix");
        sq.push_back(squarefree_part_geometric(ci));
        sign_bits.push_back(ci.lc() < 0);
        contents.push_back(content(ci));
    }
    std::vector<IntPoly> basis = z_coprime_basis(sq);

    // Unit square classes in Q^x: sign plus the squarefree kernel of the
    // content (2 included — this is the arithmetic, not geometric, quotient).
    std::vector<mpz_class> unit_primes;
    std::vector<std::vector<uint8_t>> unit_bits(depth);
    if (mode == StollMode::Arithmetic) {
        std::map<mpz_class, std::vector<uint8_t>> cols;
        for (uint64_t i = 0; i < depth; ++i) {
            IntFactorization f = factor_integer(contents[i] == 0 ? 1 : contents[i]);
            if (!f.complete) throw cap_exceeded("unit content resisted factoring");
            for (const auto& [p, mult] : f.primes) {
                if (mult % 2 == 0) continue;
                auto& col = cols[p];
                col.resize(depth, 0);
                col[i] = 1;
            }
        }
        for (auto& [p, col] : cols) {
            col.resize(depth, 0);
            unit_primes.push_back(p);
            for (uint64_t i = 0; i < depth; ++i) unit_bits[i].push_back(col[i]);
        }
    }

    StollReport rep;
    rep.depth = depth;
    rep.mode = mode;
    if (mode == StollMode::Arithmetic) {
        rep.base.push_back("sign");
        for (const auto& p : unit_primes) rep.base.push_back(p.get_str());
    }
    for (const auto& b : basis) rep.base.push_back(format(b));
    for (uint64_t i = 0; i < depth; ++i) {
        std::vector<uint8_t> row;
        if (mode == StollMode::Arithmetic) {
            row.push_back(sign_bits[i] ? 1 : 0);
            for (size_t j = 0; j < unit_primes.size(); ++j) row.push_back(unit_bits[i][j]);
        }
        for (const auto& b : basis) row.push_back(divides_z(b, sq[i]) ? 1 : 0);
        rep.parity_matrix.push_back(std::move(row));
    }
    auto [rank, first_dep] = f2_rank(rep.parity_matrix);
    rep.rank = rank;
    rep.surjective_up_to = first_dep == 0 ? depth : first_dep - 1;
    return rep;
}

QuadMap x2_plus_t_map() {
    return QuadMap::over_z(IntPoly::zero(), IntPoly::from_int_coeffs({0, -1}));
}

json subset_to_json(const JonesSubset& s) {
    json j;
    j["I"] = s.I;
    j["deg_d"] = s.deg_d;
    json df = json::array();
    for (const auto& [p, m] : s.disc_factors) df.push_back({{"p", p}, {"mult", m}});
    j["disc_factors"] = df;
    j["unfactored"] = s.unfactored;
    j["candidate_primes"] = s.candidate_primes;
    json vs = json::array();
    for (const auto& v : s.verdicts) vs.push_back({{"p", v.p}, {"verdict", v.verdict}});
    j["verdicts"] = vs;
    j["cofactor_certificate"] = s.cofactor_certificate;
    return j;
}

JonesSubset subset_from_json(const json& j) {
    JonesSubset s;
    s.I = j.at("I").get<std::vector<uint64_t>>();
    s.deg_d = j.at("deg_d").get<uint64_t>();
    for (const auto& e : j.at("disc_factors"))
        s.disc_factors.emplace_back(e.at("p").get<std::string>(), e.at("mult").get<uint64_t>());
    s.unfactored = j.at("unfactored").get<std::vector<std::string>>();
    s.candidate_primes = j.at("candidate_primes").get<std::vector<uint64_t>>();
    for (const auto& e : j.at("verdicts"))
        s.verdicts.push_back({e.at("p").get<std::string>(), e.at("verdict").get<std::string>()});
    s.cofactor_certificate = j.at("cofactor_certificate").get<std::string>();
    return s;
}

/// One subset's pipeline: d_I, disc(d_I), candidate primes, square verdicts.
JonesSubset run_subset(const OrbitCache& orbit, const std::vector<IntPoly>& sq,
                       bool pairwise_coprime, uint64_t mask, uint64_t depth,
                       uint64_t factor_effort) {
    JonesSubset out;
    IntPoly prod = IntPoly::constant(1);
    for (uint64_t i = 1; i <= depth; ++i)
        if (mask >> (i - 1) & 1) {
            out.I.push_back(i);
            prod = prod * orbit.zc[i];
        }
    IntPoly d;
    if (pairwise_coprime) {
        d = IntPoly::constant(1);
        for (uint64_t i : out.I) d = d * sq[i];
    } else {
        d = squarefree_part_geometric(prod);
    }
    out.deg_d = std::max(d.deg(), 0);
    std::vector<mpz_class> big_candidates;
    if (d.deg() >= 2) {
        mpz_class disc = discriminant(d);
        IntFactorization f = factor_integer(disc, factor_effort);
        for (const auto& [p, mult] : f.primes) {
            out.disc_factors.emplace_back(p.get_str(), mult);
            if (p == 2) continue;
            if (p.fits_ulong_p() && p.get_ui() < (1ull << 62))
                out.candidate_primes.push_back(p.get_ui());
            else
                big_candidates.push_back(p);
        }
        for (const auto& cof : f.cofactors) out.unfactored.push_back(cof.get_str());
        // Word-size candidates: reduce and test directly.
        for (uint64_t p : out.candidate_primes) {
            FieldDesc fd = FieldDesc::prime_field(p);
            bool square = is_square_in_closure(reduce_mod(prod, fd));
            out.verdicts.push_back({std::to_string(p), square ? "IsASquare" : "NotASquare"});
        }
        // Oversize primes and unfactored cofactors: exact test mod the value.
        auto run_big = [&](const mpz_class& m, bool known_prime) {
            try {
                BigSquareOutcome o = is_square_in_closure_mod(prod, m);
                if (known_prime) {
                    out.verdicts.push_back(
                        {m.get_str(), o.not_square_for_all_primes ? "NotASquare" : "IsASquare"});
                    return;
                }
                if (o.not_square_for_all_primes) {
                    if (!out.cofactor_certificate.empty()) out.cofactor_certificate += "; ";
                    out.cofactor_certificate += "NotASquareForAllPrimes(" + m.get_str() + ")";
                } else {
                    for (const auto& sm : o.square_moduli)
                        out.verdicts.push_back({sm.get_str(), "IsASquare"});
                    if (!out.cofactor_certificate.empty()) out.cofactor_certificate += "; ";
                    out.cofactor_certificate += "SquaresFound(" + m.get_str() + ")";
                }
            } catch (const Error& err) {
                if (!out.cofactor_certificate.empty()) out.cofactor_certificate += "; ";
                out.cofactor_certificate += "unresolved(" + m.get_str() + "): " + err.what();
            }
        };
        for (const auto& p : big_candidates) run_big(p, true);
        for (const auto& cof : f.cofactors) run_big(cof, false);
    }
    return out;
}

}  // namespace

StollReport stoll_rank(const QuadMap& phi, uint64_t depth, StollMode mode) {
    if (depth < 1) throw undefined("Stoll depth must be >= 1");
    bool zero_c1 = phi.over_fq() ? phi.c1.is_zero() : phi.zc1.is_zero();
    if (zero_c1) throw degenerate_square("c1 = 0: square classes degenerate");
    return phi.over_fq() ? stoll_rank_fq(phi, depth, mode) : stoll_rank_z(phi, depth, mode);
}

StabilityCertificate geometric_stability_certificate(const QuadMap& phi, uint64_t depth) {
    StabilityCertificate cert;
    cert.depth = depth;
    try {
        cert.certified = stoll_rank(phi, depth, StollMode::Geometric).surjective_up_to == depth;
    } catch (const Error&) {
        cert.certified = false;  // Unknown, never "unstable"
    }
    return cert;
}

MasonStothersReport mason_stothers_check(const Poly& a, const Poly& b) {
    MasonStothersReport rep;
    auto fail = [&](const std::string& why) {
        rep.preconditions_ok = false;
        rep.precondition_failure = why;
        return rep;
    };
    if (a.is_zero() || b.is_zero()) return fail("a and b must be nonzero");
    Poly c = -a - b;
    if (c.is_zero()) return fail("c = -a-b vanishes");
    if (!gcd(a, b).is_constant()) return fail("a and b share a factor");
    RationalFn bc = RationalFn::make(b, c);
    if (!bc.is_constant()) rep.e = pth_power_degree(bc);
    rep.lhs = height(bc);
    Poly rad_abc = radical(a * b * c);
    bool balanced = a.deg() == b.deg() && b.deg() == c.deg();
    rep.places = height(rad_abc) + (balanced ? 0 : 1);
    unsigned __int128 pe = 1;
    for (uint64_t i = 0; i < rep.e; ++i) {
        pe *= a.fd.p;
        if (pe > (unsigned __int128)1 << 62) throw cap_exceeded("p^e overflow in abc check");
    }
    if (rep.places < 2) return fail("fewer than two places");
    rep.rhs = static_cast<uint64_t>(pe) * (rep.places - 2);
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

JonesReport jones_verify(uint64_t depth, uint64_t factor_effort, uint64_t scan_cap,
                         const std::string& checkpoint_dir, uint64_t jobs) {
    if (depth < 1) throw undefined("depth must be >= 1");
    if (depth > 20) throw cap_exceeded("subset enumeration above depth 20");
    JonesReport rep;
    rep.depth = depth;
    rep.scan_cap = scan_cap;
    QuadMap phi = x2_plus_t_map();
    OrbitCache orbit = adjusted_orbit(phi, depth);
    std::vector<IntPoly> sq(depth + 1);
    for (uint64_t i = 1; i <= depth; ++i) sq[i] = squarefree_part_geometric(orbit.zc[i]);
    bool pairwise_coprime = true;
    for (uint64_t i = 1; i <= depth && pairwise_coprime; ++i)
        for (uint64_t j = i + 1; j <= depth && pairwise_coprime; ++j)
            if (!gcd(sq[i], sq[j]).is_constant()) pairwise_coprime = false;

    const uint64_t total = (1ull << depth) - 1;
    std::vector<JonesSubset> subsets(total);
    auto checkpoint_path = [&](uint64_t mask) {
        return checkpoint_dir + "/jones_d" + std::to_string(depth) + "_e" +
               std::to_string(factor_effort) + "_m" + std::to_string(mask) + ".json";
    };
    auto work = [&](uint64_t mask) {
        if (!checkpoint_dir.empty()) {
            std::ifstream in(checkpoint_path(mask));
            if (in) {
                try {
                    subsets[mask - 1] = subset_from_json(json::parse(in));
                    return;
                } catch (...) {
                    // corrupt checkpoint: recompute
                }
            }
        }
        subsets[mask - 1] = run_subset(orbit, sq, pairwise_coprime, mask, depth, factor_effort);
        if (!checkpoint_dir.empty()) {
            std::string tmp = checkpoint_path(mask) + ".tmp";
            std::ofstream out(tmp);
            out << subset_to_json(subsets[mask - 1]).dump(2) << "\n";
            out.close();
            std::filesystem::rename(tmp, checkpoint_path(mask));
        }
    };
    if (!checkpoint_dir.empty()) std::filesystem::create_directories(checkpoint_dir);
    if (jobs <= 1) {
        for (uint64_t mask = 1; mask <= total; ++mask) work(mask);
    } else {
        std::vector<std::thread> pool;
        std::mutex mx;
        uint64_t next = 1;
        for (uint64_t w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                while (true) {
                    uint64_t mask;
                    {
                        std::lock_guard<std::mutex> lk(mx);
                        if (next > total) return;
                        mask = next++;
                    }
                    work(mask);
                }
            });
        for (auto& th : pool) th.join();
    }

    std::set<std::string> bad;
    for (auto& s : subsets) {
        for (const auto& v : s.verdicts)
            if (v.verdict == "IsASquare") bad.insert(v.p);
        if (s.cofactor_certificate.find("unresolved") != std::string::npos) rep.complete = false;
        for (const auto& u : s.unfactored)
            if (s.cofactor_certificate.empty()) {
                (void)u;
                rep.complete = false;  // cofactor present but never certified
            }
    }
    rep.bad_primes_found.assign(bad.begin(), bad.end());
    rep.subsets = std::move(subsets);

    // Complementary geometric-rank scan.
    for (uint64_t p : nt::odd_primes_up_to(scan_cap)) {
        FieldDesc fd = FieldDesc::prime_field(p);
        StollReport sr = stoll_rank(phi.reduce(fd), depth, StollMode::Geometric);
        if (sr.rank < depth) rep.scan_deficiencies.emplace_back(p, sr.rank);
    }
    return rep;
}

}  // namespace arbordyn
