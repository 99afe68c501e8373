#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "arbordyn/galois.hpp"
#include "arbordyn/parse.hpp"
#include "arbordyn/polyfactor.hpp"

using namespace arbordyn;

namespace {

Poly random_poly(const FieldDesc& fd, int deg, std::mt19937_64& rng) {
    std::vector<int64_t> c(deg + 1);
    for (auto& v : c) v = static_cast<int64_t>(rng() % fd.p);
    if (c.back() == 0) c.back() = 1;
    return Poly::from_int_coeffs(fd, c);
}

}  // namespace

TEST_CASE("Stoll rank of x^2+t mod 5 at depth 4") {
    FieldDesc f5 = FieldDesc::prime_field(5);
    QuadMap phi = parse_map("x^2+t", f5);
    StollReport r = stoll_rank(phi, 4, StollMode::Geometric);
    CHECK(r.rank == 4);
    CHECK(r.surjective_up_to == 4);
    REQUIRE(r.base.size() == 4);
    CHECK(r.base[0] == "t");
    CHECK(r.base[1] == "t+1");
    CHECK(r.base[2] == "t^3+2*t^2+t+1");
    CHECK(r.base[3] == "t^6+3*t^5+3*t^4+3*t^3+2*t^2+1");
    REQUIRE(r.parity_matrix.size() == 4);
    auto row = [&](size_t i) {
        std::string s;
        for (uint8_t b : r.parity_matrix[i]) s += char('0' + b);
        return s;
    };
    CHECK(row(0) == "1000");
    CHECK(row(1) == "1100");
    CHECK(row(2) == "1010");
    CHECK(row(3) == "1101");
}

TEST_CASE("arithmetic mode sees the constant class over Q") {
    QuadMap phi = parse_map("(x+t)^2+1");
    StollReport geo = stoll_rank(phi, 1, StollMode::Geometric);
    CHECK(geo.rank == 0);
    StollReport ar = stoll_rank(phi, 1, StollMode::Arithmetic);
    CHECK(ar.rank == 1);
    REQUIRE(!ar.base.empty());
    CHECK(ar.base[0] == "sign");
}

TEST_CASE("isotrivial maps stall below full rank") {
    FieldDesc f3 = FieldDesc::prime_field(3);
    QuadMap phi = parse_map("(x-t)^2+t+1", f3);
    StollReport r = stoll_rank(phi, 6, StollMode::Geometric);
    CHECK(r.rank == 2);
    CHECK(r.rank < 6);
}

TEST_CASE("parity rows match per-subset closure square tests") {
    // The product prod_{i in I} c_i is a closure square iff the F_2 sum of the
    // parity rows over I vanishes.
    std::mt19937_64 rng(51);
    for (uint64_t p : {3ull, 7ull, 13ull, 41ull}) {
        FieldDesc fd = FieldDesc::prime_field(p);
        QuadMap phi = parse_map("x^2+t", fd);
        uint64_t depth = 5;
        StollReport r = stoll_rank(phi, depth, StollMode::Geometric);
        OrbitCache orbit = adjusted_orbit(phi, depth);
        for (int trial = 0; trial < 12; ++trial) {
            uint64_t mask = 1 + rng() % ((1u << depth) - 1);
            std::vector<uint8_t> sum(r.base.size(), 0);
            Poly prod = Poly::constant(fd, fd.one());
            for (uint64_t i = 1; i <= depth; ++i) {
                if (!(mask >> (i - 1) & 1)) continue;
                for (size_t j = 0; j < sum.size(); ++j) sum[j] ^= r.parity_matrix[i - 1][j];
                prod = prod * orbit.fc[i];
            }
            bool zero_sum = true;
            for (uint8_t b : sum) zero_sum = zero_sum && b == 0;
            CHECK(zero_sum == is_square_in_closure(prod));
        }
    }
}

TEST_CASE("geometric stability certificate for x^2+t over Q") {
    QuadMap phi = parse_map("x^2+t");
    StabilityCertificate c = geometric_stability_certificate(phi, 8);
    CHECK(c.certified);
    CHECK(c.depth == 8);
    // the isotrivial map over F_3 stalls at rank 2, so depth 4 is not certified
    FieldDesc f3 = FieldDesc::prime_field(3);
    StabilityCertificate u = geometric_stability_certificate(parse_map("(x-t)^2+t+1", f3), 4);
    CHECK_FALSE(u.certified);
}

TEST_CASE("Mason-Stothers worked examples") {
    FieldDesc f5 = FieldDesc::prime_field(5);
    Poly a = parse_poly("t^2+2*t+1", f5);
    Poly b = parse_poly("-t^2-2*t", f5);
    MasonStothersReport r = mason_stothers_check(a, b);
    CHECK(r.preconditions_ok);
    CHECK(r.e == 0);
    CHECK(r.lhs == 2);
    CHECK(r.places == 4);
    CHECK(r.rhs == 2);
    CHECK(r.holds);

    FieldDesc f3 = FieldDesc::prime_field(3);
    MasonStothersReport r2 = mason_stothers_check(Poly::t(f3), Poly::constant(f3, f3.one()));
    CHECK(r2.preconditions_ok);
    CHECK(r2.lhs == 1);
    CHECK(r2.places == 3);
    CHECK(r2.rhs == 1);
    CHECK(r2.holds);
}

TEST_CASE("Mason-Stothers precondition reporting") {
    FieldDesc f5 = FieldDesc::prime_field(5);
    Poly t = Poly::t(f5);
    MasonStothersReport r = mason_stothers_check(t, Poly::zero(f5));
    CHECK_FALSE(r.preconditions_ok);
    CHECK(!r.precondition_failure.empty());
    // a and b sharing a factor
    MasonStothersReport r2 = mason_stothers_check(t, t * t);
    CHECK_FALSE(r2.preconditions_ok);
}

TEST_CASE("Mason-Stothers holds on random coprime triples") {
    std::mt19937_64 rng(52);
    for (uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
        FieldDesc fd = FieldDesc::prime_field(p);
        int done = 0;
        while (done < 1000) {
            Poly a = random_poly(fd, 1 + rng() % 5, rng);
            Poly b = random_poly(fd, 1 + rng() % 5, rng);
            if (a.is_zero() || b.is_zero() || (a + b).is_zero()) continue;
            if (!gcd(a, b).is_constant()) continue;
            MasonStothersReport r = mason_stothers_check(a, b);
            if (!r.preconditions_ok) continue;
            CAPTURE(p);
            CAPTURE(format(a));
            CAPTURE(format(b));
            CHECK(r.holds);
            ++done;
        }
    }
}

TEST_CASE("Jones verification at depth 3") {
    JonesReport r = jones_verify(3, 1u << 16, 50);
    CHECK(r.depth == 3);
    CHECK(r.complete);
    CHECK(r.bad_primes_found.empty());
    CHECK(r.scan_deficiencies.empty());
    CHECK(r.subsets.size() == 7);
    // the subset {3} has disc(d_{3}) = -23 up to powers of 2
    bool saw23 = false;
    for (const auto& s : r.subsets) {
        for (const auto& v : s.verdicts) {
            CHECK(v.verdict == "NotASquare");
            if (v.p == "23") saw23 = true;
        }
        CHECK(s.unfactored.empty());
    }
    CHECK(saw23);
}

TEST_CASE("Jones depth 2 has no odd candidate primes") {
    JonesReport r = jones_verify(2, 1u << 16, 20);
    CHECK(r.complete);
    for (const auto& s : r.subsets) {
        CHECK(s.candidate_primes.empty());
        CHECK(s.verdicts.empty());
    }
}

TEST_CASE("checkpointed runs resume and agree") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "arbordyn_ckpt_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    JonesReport fresh = jones_verify(3, 1u << 16, 0);
    JonesReport first = jones_verify(3, 1u << 16, 0, dir.string());
    // corrupt one checkpoint: the resume must recompute it
    bool corrupted = false;
    for (auto& ent : fs::directory_iterator(dir)) {
        if (!corrupted) {
            std::ofstream(ent.path()) << "{ not json";
            corrupted = true;
        }
    }
    REQUIRE(corrupted);
    JonesReport resumed = jones_verify(3, 1u << 16, 0, dir.string());
    auto render = [](const JonesReport& r) {
        std::string s;
        for (const auto& sub : r.subsets) {
            for (uint64_t i : sub.I) s += std::to_string(i) + ",";
            s += "|" + std::to_string(sub.deg_d) + "|";
            for (const auto& [p, m] : sub.disc_factors) s += p + "^" + std::to_string(m) + " ";
            for (const auto& v : sub.verdicts) s += v.p + "=" + v.verdict + ";";
            s += "\n";
        }
        return s;
    };
    CHECK(render(first) == render(fresh));
    CHECK(render(resumed) == render(fresh));
    CHECK(resumed.complete == fresh.complete);
    fs::remove_all(dir);
}

TEST_CASE("parallel execution is deterministic") {
    JonesReport one = jones_verify(4, 1u << 16, 0);
    JonesReport two = jones_verify(4, 1u << 16, 0, "", 2);
    REQUIRE(one.subsets.size() == two.subsets.size());
    for (size_t i = 0; i < one.subsets.size(); ++i) {
        CHECK(one.subsets[i].I == two.subsets[i].I);
        CHECK(one.subsets[i].candidate_primes == two.subsets[i].candidate_primes);
        REQUIRE(one.subsets[i].verdicts.size() == two.subsets[i].verdicts.size());
        for (size_t j = 0; j < one.subsets[i].verdicts.size(); ++j)
            CHECK(one.subsets[i].verdicts[j].verdict == two.subsets[i].verdicts[j].verdict);
    }
    CHECK(one.complete == two.complete);
}
