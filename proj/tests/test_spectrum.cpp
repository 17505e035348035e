#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "jg/spectrum.hpp"

using jg::BigInt;
using jg::BigRat;
using jg::GraphParams;
using jg::Theorem;

namespace {

GraphParams gp(long n, long r, long s) { return GraphParams::checked(n, r, s); }

// Small pool of random canonical, non-degenerate triples.
std::vector<GraphParams> random_canonical(std::mt19937_64& gen, int count,
                                          long max_n) {
    std::vector<GraphParams> out;
    std::uniform_int_distribution<long> pick_n(2, max_n);
    while (static_cast<int>(out.size()) < count) {
        const long n = pick_n(gen);
        if (n / 2 < 1) continue;
        std::uniform_int_distribution<long> pick_r(1, n / 2);
        const long r = pick_r(gen);
        std::uniform_int_distribution<long> pick_s(0, r - 1);
        out.push_back(gp(n, r, pick_s(gen)));
    }
    return out;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gp(0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gp(5, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gp(5, 6, 0), std::invalid_argument);
    CHECK_THROWS_AS(gp(5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gp(5, 2, -1), std::invalid_argument);
    CHECK(gp(4, 3, 1).degenerate());
    CHECK_FALSE(gp(8, 5, 3).degenerate());
    CHECK(gp(8, 4, 2).canonical());
    CHECK_FALSE(gp(8, 5, 3).canonical());
}

TEST_CASE("canonicalize applies the complement map") {
    CHECK(jg::canonicalize(gp(8, 5, 3)) == gp(8, 3, 1));
    CHECK(jg::canonicalize(gp(8, 4, 2)) == gp(8, 4, 2));
    CHECK(jg::canonicalize(gp(10, 7, 5)) == gp(10, 3, 1));
    CHECK_THROWS_AS(jg::canonicalize(gp(4, 3, 1)), std::domain_error);
}

TEST_CASE("degree") {
    CHECK(jg::degree(gp(5, 2, 0)) == 3);
    CHECK(jg::degree(gp(8, 4, 2)) == 36);
    CHECK(jg::degree(gp(4, 2, 1)) == 4);
    CHECK(jg::degree(gp(12, 6, 3)) == 400);
    CHECK(jg::degree(gp(4, 3, 1)) == 0);  // edgeless
}

TEST_CASE("eigenvalue routes on pinned instances") {
    CHECK(jg::eigenvalue_route_a(gp(8, 4, 2), 0) == 36);
    CHECK(jg::eigenvalue_route_a(gp(8, 4, 2), 2) == -6);
    CHECK(jg::eigenvalue_route_a(gp(4, 2, 1), 2) == -2);
    CHECK(jg::eigenvalue_route_b(gp(8, 4, 2), 1) == 0);
    CHECK(jg::eigenvalue_route_b(gp(8, 4, 2), 4) == 6);
    CHECK(jg::eigenvalue_route_b(gp(5, 2, 0), 1) == -2);
    CHECK_THROWS_AS(jg::eigenvalue_route_a(gp(8, 4, 2), 5),
                    std::out_of_range);
    CHECK_THROWS_AS(jg::eigenvalue_route_b(gp(8, 4, 2), -1),
                    std::out_of_range);
    // non-canonical input is refused rather than silently evaluated
    CHECK_THROWS_AS(jg::eigenvalue_route_b(gp(8, 5, 3), 1),
                    std::invalid_argument);
}

TEST_CASE("the two summation routes agree everywhere tested") {
    std::mt19937_64 gen(123);
    for (const auto& p : random_canonical(gen, 300, 60)) {
        for (long i = 0; i <= p.r; ++i)
            CHECK(jg::eigenvalue_route_a(p, i) == jg::eigenvalue_route_b(p, i));
    }
}

TEST_CASE("full spectrum of the octahedron G(4,2,1)") {
    const auto sp = jg::full_spectrum(gp(4, 2, 1));
    REQUIRE(sp.entries.size() == 3);
    CHECK(sp.entries[0].value == 4);
    CHECK(sp.entries[1].value == 0);
    CHECK(sp.entries[2].value == -2);
    CHECK(sp.entries[0].multiplicity == 1);
    CHECK(sp.entries[1].multiplicity == 3);
    CHECK(sp.entries[2].multiplicity == 2);
    CHECK(sp.lambda == 2);
    CHECK(sp.argmax_index == 2);
    CHECK(sp.degree == 4);
    CHECK(sp.vertex_count() == 6);
}

TEST_CASE("full spectrum of the Petersen graph G(5,2,0)") {
    const auto sp = jg::full_spectrum(gp(5, 2, 0));
    REQUIRE(sp.entries.size() == 3);
    // multiset {3^1, (-2)^4, 1^5}
    CHECK(sp.entries[0].value == 3);
    CHECK(sp.entries[1].value == -2);
    CHECK(sp.entries[2].value == 1);
    CHECK(sp.entries[1].multiplicity == 4);
    CHECK(sp.entries[2].multiplicity == 5);
    CHECK(sp.lambda == 2);
    CHECK(sp.argmax_index == 1);
}

TEST_CASE("full spectrum of G(8,4,2)") {
    const auto sp = jg::full_spectrum(gp(8, 4, 2));
    const std::vector<long> want_vals{36, 0, -6, 0, 6};
    const std::vector<long> want_mult{1, 7, 20, 28, 14};
    REQUIRE(sp.entries.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(sp.entries[i].value == want_vals[i]);
        CHECK(sp.entries[i].multiplicity == want_mult[i]);
    }
    CHECK(sp.lambda == 6);
    CHECK(sp.argmax_index == 2);

    const auto merged = sp.merged();
    REQUIRE(merged.size() == 4);
    CHECK(merged[0] == std::pair<BigInt, BigInt>(36, 1));
    CHECK(merged[1] == std::pair<BigInt, BigInt>(6, 14));
    CHECK(merged[2] == std::pair<BigInt, BigInt>(0, 35));
    CHECK(merged[3] == std::pair<BigInt, BigInt>(-6, 20));
}

TEST_CASE("degenerate parameters are refused with an edgeless message") {
    CHECK_THROWS_WITH_AS(jg::full_spectrum(gp(4, 3, 1)),
                         doctest::Contains("edgeless"), std::domain_error);
}

TEST_CASE("non-canonical input is evaluated through its canonical form") {
    const auto a = jg::full_spectrum(gp(8, 5, 3));
    const auto b = jg::full_spectrum(gp(8, 3, 1));
    CHECK(a.params == b.params);
    CHECK(a.merged() == b.merged());
    CHECK(a.lambda == b.lambda);
}

TEST_CASE("spectrum invariants on a random sample") {
    std::mt19937_64 gen(77);
    for (const auto& p : random_canonical(gen, 150, 80)) {
        const auto sp = jg::full_spectrum(p);
        const BigInt N = sp.vertex_count();
        BigInt mult_sum = 0, trace = 0, trace_sq = 0;
        for (const auto& e : sp.entries) {
            CHECK(e.multiplicity >= 0);
            mult_sum += e.multiplicity;
            trace += e.multiplicity * e.value;
            trace_sq += e.multiplicity * e.value * e.value;
        }
        CHECK(mult_sum == N);
        CHECK(trace == 0);
        CHECK(trace_sq == sp.degree * N);
        CHECK(sp.entries[0].value == sp.degree);
        CHECK(sp.lambda > 0);
        CHECK(sp.lambda <= sp.degree);
        // exact-lambda regime: (r-s)(n-1) >= r(n-r)
        if (BigInt(p.r - p.s) * (p.n - 1) >= BigInt(p.r) * (p.n - p.r)) {
            CHECK(sp.argmax_index == 1);
            CHECK(sp.lambda == abs(sp.entries[1].value));
        }
    }
}

TEST_CASE("Eberlein term recurrence residual vanishes") {
    CHECK(jg::eberlein_recurrence_residual(gp(8, 4, 2), 1, 0) == 0);
    CHECK(jg::eberlein_recurrence_residual(gp(8, 4, 2), 2, 1) == 0);
    CHECK(jg::eberlein_recurrence_residual(gp(12, 5, 2), 3, 2) == 0);

    std::mt19937_64 gen(9);
    for (const auto& p : random_canonical(gen, 40, 40)) {
        for (long i = 1; i <= p.r; ++i)
            for (long j = 0; j <= i; ++j)
                CHECK(jg::eberlein_recurrence_residual(p, i, j) == 0);
    }
}

TEST_CASE("recurrence residual domain errors") {
    CHECK_THROWS_AS(jg::eberlein_recurrence_residual(gp(8, 4, 2), 0, 0),
                    std::domain_error);
    CHECK_THROWS_AS(jg::eberlein_recurrence_residual(gp(8, 4, 2), 2, 3),
                    std::domain_error);
    // i = 4 makes n - r - i + 1 = 0 for the non-canonical triple (8,5,1)
    CHECK_THROWS_AS(jg::eberlein_recurrence_residual(gp(8, 5, 1), 4, 0),
                    std::domain_error);
}

TEST_CASE("verify_bound: Kneser exact lambda") {
    const auto rep = jg::verify_bound(gp(5, 2, 0), Theorem::lovasz);
    CHECK(rep.applicable);
    REQUIRE(rep.predicted.has_value());
    CHECK(*rep.predicted == 2);
    REQUIRE(rep.ratio.has_value());
    CHECK(*rep.ratio == 1);
    CHECK(rep.claim_holds == true);
    CHECK(rep.argmax_index == 1);

    const auto off = jg::verify_bound(gp(8, 4, 2), Theorem::lovasz);
    CHECK_FALSE(off.applicable);
    CHECK_FALSE(off.predicted.has_value());
    CHECK(off.lambda == 6);
}

TEST_CASE("verify_bound: closed-form regime") {
    const auto rep = jg::verify_bound(gp(5, 2, 0), Theorem::brouwer);
    CHECK(rep.applicable);  // (2)(4) = 8 >= 6
    CHECK(*rep.predicted == 2);
    CHECK(*rep.ratio == 1);
    CHECK(rep.claim_holds == true);

    const auto off = jg::verify_bound(gp(8, 4, 2), Theorem::brouwer);
    CHECK_FALSE(off.applicable);  // 2*7 = 14 < 16
}

TEST_CASE("verify_bound: G(4s,2s,s) family") {
    const auto rep = jg::verify_bound(gp(8, 4, 2), Theorem::t4);
    CHECK(rep.applicable);
    CHECK(*rep.predicted == 6);
    CHECK(*rep.ratio == 1);
    CHECK(rep.claim_holds == true);

    const auto big = jg::verify_bound(gp(12, 6, 3), Theorem::t4);
    CHECK(big.applicable);
    CHECK(*big.predicted == 40);
    CHECK(big.lambda == 40);

    CHECK_FALSE(jg::verify_bound(gp(12, 5, 2), Theorem::t4).applicable);
}

TEST_CASE("verify_bound: density-ratio normalizer") {
    const auto rep = jg::verify_bound(gp(8, 4, 2), Theorem::main_bound,
                                      jg::make_rat(1, 2));
    CHECK(rep.applicable);
    REQUIRE(rep.f_r.has_value());
    CHECK(*rep.f_r == 0);
    CHECK(*rep.f_s == 0);
    CHECK(*rep.predicted == jg::make_rat(9, 2));  // d * 1 / n
    CHECK(*rep.ratio == jg::make_rat(4, 3));
    CHECK_FALSE(rep.claim_holds.has_value());

    CHECK_THROWS_AS(jg::verify_bound(gp(8, 4, 2), Theorem::main_bound),
                    std::invalid_argument);
}

TEST_CASE("verify_bound flags degenerate parameters") {
    const auto rep = jg::verify_bound(gp(4, 3, 1), Theorem::lovasz);
    CHECK(rep.degenerate);
    CHECK_FALSE(rep.applicable);
    CHECK_FALSE(rep.predicted.has_value());
    CHECK(rep.lambda == 0);
}

TEST_CASE("scan_bounds over the G(4s,2s,s) family") {
    std::vector<jg::ScanItem> items;
    for (long sp = 2; sp <= 10; ++sp)
        items.push_back({gp(4 * sp, 2 * sp, sp), std::nullopt});
    const auto scan = jg::scan_bounds(items, Theorem::t4);
    REQUIRE(scan.reports.size() == 9);
    for (const auto& rep : scan.reports) {
        CHECK(rep.applicable);
        CHECK(rep.claim_holds == true);
        CHECK(*rep.ratio == 1);
    }
    CHECK(scan.threshold_index == 0);
    CHECK_FALSE(scan.any_error);
}

TEST_CASE("scan_bounds finds the argmax threshold for fixed (r,s) = (3,1)") {
    std::vector<jg::ScanItem> items;
    for (long n = 10; n <= 40; ++n)
        items.push_back({gp(n, 3, 1), std::nullopt});
    const auto scan = jg::scan_bounds(items, Theorem::t5_1);
    // argmax moves to i = 1 from n = 13 on
    CHECK(scan.threshold_index == 3);
    REQUIRE(scan.max_ratio.has_value());
    CHECK(*scan.max_ratio == jg::make_rat(31, 37));
    const auto& first = scan.reports.front();
    const auto& last = scan.reports.back();
    REQUIRE(first.ratio.has_value());
    REQUIRE(last.ratio.has_value());
    const BigRat gap_first = abs(BigRat(1) - *first.ratio);
    const BigRat gap_last = abs(BigRat(1) - *last.ratio);
    CHECK(gap_last < gap_first);
}

TEST_CASE("scan_bounds records per-item failures and keeps going") {
    std::vector<jg::ScanItem> items;
    items.push_back({gp(8, 4, 2), std::nullopt});
    items.push_back({GraphParams{10, 3, 3}, std::nullopt});  // invalid: s >= r
    items.push_back({gp(12, 6, 3), std::nullopt});
    const auto scan = jg::scan_bounds(items, Theorem::t4);
    REQUIRE(scan.reports.size() == 3);
    CHECK(scan.any_error);
    CHECK(scan.reports[0].error.empty());
    CHECK_FALSE(scan.reports[1].error.empty());
    CHECK(scan.reports[2].error.empty());
    CHECK(scan.reports[2].claim_holds == true);
}

TEST_CASE("theorem names round-trip") {
    for (Theorem t : {Theorem::lovasz, Theorem::brouwer, Theorem::t4,
                      Theorem::t5_1, Theorem::main_bound})
        CHECK(jg::theorem_from_name(jg::theorem_name(t)) == t);
    CHECK_FALSE(jg::theorem_from_name("nonsense").has_value());
}
