#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "arbordyn/errors.hpp"
#include "arbordyn/galois.hpp"
#include "arbordyn/insep.hpp"
#include "arbordyn/json_io.hpp"
#include "arbordyn/nt.hpp"
#include "arbordyn/orbit.hpp"
#include "arbordyn/parse.hpp"
#include "arbordyn/polyfactor.hpp"
#include "arbordyn/zsig.hpp"

namespace {

using arbordyn::FieldDesc;
using arbordyn::QuadMap;
using json = nlohmann::ordered_json;

struct Options {
    std::string map_text;
    std::string a_text, b_text;  // ms-check operands
    std::optional<uint64_t> mod;
    uint64_t depth = 4;
    std::string mode = "geometric";
    uint64_t prime_cap = 0;
    uint64_t factor_effort = 1u << 20;
    uint64_t jobs = 1;
    uint64_t seed = arbordyn::kDefaultFactorSeed;
    uint64_t detail_cap = 64;
    std::string out_path;
    std::string checkpoint_dir;
    bool as_json = false;  // full wrapped report even on verbs with terse default
};

FieldDesc field_for(uint64_t p) {
    if (p < 3 || !arbordyn::nt::is_prime_u64(p))
        throw arbordyn::ill_defined("--mod must be an odd prime");
    return FieldDesc::prime_field(p);
}

QuadMap parse_map_opt(const Options& o) {
    if (o.mod) return arbordyn::parse_map(o.map_text, field_for(*o.mod));
    return arbordyn::parse_map(o.map_text);
}

void emit(const Options& o, const json& report) {
    std::string text = report.dump(2) + "\n";
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out_path);
        out << text;
    }
}

int run_orbit(const Options& o) {
    QuadMap phi = parse_map_opt(o);
    arbordyn::OrbitCache orbit = arbordyn::adjusted_orbit(phi, o.depth);
    json c = json::array(), k = json::array();
    for (uint64_t i = 1; i <= o.depth; ++i) {
        if (phi.over_fq()) {
            c.push_back(arbordyn::format(orbit.fc[i]));
            if (i < orbit.fcrit0.size()) k.push_back(arbordyn::format(orbit.fcrit0[i]));
        } else {
            c.push_back(arbordyn::format(orbit.zc[i]));
            if (i < orbit.zcrit0.size()) k.push_back(arbordyn::format(orbit.zcrit0[i]));
        }
    }
    json payload{{"map", phi.format()}, {"orbit", c}, {"crit0", k}};
    emit(o, arbordyn::wrap_report("orbit", payload));
    return 0;
}

int run_insep(const Options& o) {
    if (!o.mod) throw arbordyn::ill_defined("insep needs --mod (an F_q[t] map)");
    QuadMap phi = parse_map_opt(o);
    emit(o, arbordyn::wrap_report("insep", arbordyn::to_json(arbordyn::insep_degree(phi))));
    return 0;
}

int run_zsig(const Options& o) {
    QuadMap phi = parse_map_opt(o);
    json payload;
    if (phi.over_fq()) {
        payload = arbordyn::to_json(arbordyn::zsigmondy_set(phi, o.depth, o.detail_cap));
    } else {
        payload = arbordyn::to_json(arbordyn::zsigmondy_set_z(phi, o.depth));
        if (o.prime_cap >= 3) {
            // Soundness scan: reductions mod every odd p <= cap.
            json per_p = json::array();
            for (uint64_t p : arbordyn::nt::odd_primes_up_to(o.prime_cap)) {
                QuadMap red = phi.reduce(FieldDesc::prime_field(p));
                if (red.c1.is_zero() || red.is_isotrivial()) continue;
                auto zr = arbordyn::zsigmondy_set(red, o.depth, /*detail_cap=*/0);
                per_p.push_back({{"p", p}, {"members", zr.members}});
            }
            payload["per_prime_scan"] = per_p;
        }
    }
    emit(o, arbordyn::wrap_report("zsig", payload));
    return 0;
}

int run_bound(const Options& o) {
    if (!o.mod) throw arbordyn::ill_defined("bound needs --mod (an F_q[t] map)");
    QuadMap phi = parse_map_opt(o);
    emit(o, arbordyn::wrap_report("bound", arbordyn::to_json(arbordyn::effective_bound(phi))));
    return 0;
}

int run_global_bound(const Options& o) {
    if (o.mod) throw arbordyn::ill_defined("global-bound takes a Z[t] map (no --mod)");
    QuadMap phi = parse_map_opt(o);
    emit(o, arbordyn::wrap_report("global-bound", arbordyn::to_json(arbordyn::global_bound(phi))));
    return 0;
}

int run_stoll(const Options& o) {
    QuadMap phi = parse_map_opt(o);
    arbordyn::StollMode mode;
    if (o.mode == "geometric")
        mode = arbordyn::StollMode::Geometric;
    else if (o.mode == "arithmetic")
        mode = arbordyn::StollMode::Arithmetic;
    else
        throw arbordyn::ill_defined("--mode must be geometric or arithmetic");
    emit(o, arbordyn::wrap_report("stoll",
                                  arbordyn::to_json(arbordyn::stoll_rank(phi, o.depth, mode))));
    return 0;
}

int run_jones(const Options& o) {
    arbordyn::JonesReport rep =
        arbordyn::jones_verify(o.depth, o.factor_effort, o.prime_cap, o.checkpoint_dir, o.jobs);
    emit(o, arbordyn::wrap_report("jones", arbordyn::to_json(rep)));
    return rep.complete ? 0 : 3;
}

int run_ms_check(const Options& o) {
    if (!o.mod) throw arbordyn::ill_defined("ms-check needs --mod");
    FieldDesc fd = field_for(*o.mod);
    arbordyn::Poly a = arbordyn::parse_poly(o.a_text, fd);
    arbordyn::Poly b = arbordyn::parse_poly(o.b_text, fd);
    emit(o, arbordyn::wrap_report("ms-check",
                                  arbordyn::to_json(arbordyn::mason_stothers_check(a, b))));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbordyn: exact arithmetic for quadratic-map orbits over function fields"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_map) {
        if (with_map) sub->add_option("map", o.map_text, "map, e.g. \"x^2+t\"")->required();
        sub->add_option("--mod", o.mod, "odd prime modulus (absent: Z[t] coefficients)");
        sub->add_option("--out", o.out_path, "write the report to a file");
        sub->add_flag("--json", o.as_json, "force the full JSON report (always on)");
    };

    auto* orbit = app.add_subcommand("orbit", "adjusted post-critical orbit");
    add_common(orbit, true);
    orbit->add_option("--depth", o.depth, "orbit depth");

    auto* insep = app.add_subcommand("insep", "dynamical inseparability degree");
    add_common(insep, true);

    auto* zsig = app.add_subcommand("zsig", "Zsigmondy set scan");
    add_common(zsig, true);
    zsig->add_option("--depth", o.depth, "scan depth M");
    zsig->add_option("--prime-cap", o.prime_cap, "odd-prime cap for the soundness scan (Z maps)");
    zsig->add_option("--seed", o.seed, "factorization seed for the detail lists");
    zsig->add_option("--detail-cap", o.detail_cap, "degree cap for factored detail");

    auto* bound = app.add_subcommand("bound", "effective bound constants and solver ledger");
    add_common(bound, true);

    auto* gbound = app.add_subcommand("global-bound", "characteristic-0 global bound");
    add_common(gbound, true);

    auto* stoll = app.add_subcommand("stoll", "Stoll parity rank");
    add_common(stoll, true);
    stoll->add_option("--depth", o.depth, "number of orbit classes");
    stoll->add_option("--mode", o.mode, "geometric|arithmetic");

    auto* jones = app.add_subcommand("jones", "subset-discriminant verification pipeline");
    add_common(jones, false);
    jones->add_option("--depth", o.depth, "orbit depth (subsets of {1..depth})");
    jones->add_option("--factor-effort", o.factor_effort, "Brent iteration budget per cofactor");
    jones->add_option("--prime-cap", o.prime_cap, "cap for the complementary rank scan");
    jones->add_option("--jobs", o.jobs, "worker threads");
    jones->add_option("--checkpoint-dir", o.checkpoint_dir, "resumable per-subset checkpoints");

    auto* ms = app.add_subcommand("ms-check", "Mason-Stothers abc inequality check");
    ms->add_option("a", o.a_text, "polynomial a")->required();
    ms->add_option("b", o.b_text, "polynomial b")->required();
    ms->add_option("--mod", o.mod, "odd prime modulus")->required();
    ms->add_option("--out", o.out_path, "write the report to a file");
    ms->add_flag("--json", o.as_json, "force the full JSON report (always on)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(orbit)) return run_orbit(o);
        if (app.got_subcommand(insep)) return run_insep(o);
        if (app.got_subcommand(zsig)) return run_zsig(o);
        if (app.got_subcommand(bound)) return run_bound(o);
        if (app.got_subcommand(gbound)) return run_global_bound(o);
        if (app.got_subcommand(stoll)) return run_stoll(o);
        if (app.got_subcommand(jones)) return run_jones(o);
        if (app.got_subcommand(ms)) return run_ms_check(o);
    } catch (const arbordyn::Error& e) {
        if (e.code() == "ParseError") {
            std::cerr << "parse error: " << e.what() << "\n";
            return 1;
        }
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
