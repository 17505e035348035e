#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "jg/oracle.hpp"
#include "jg/spectrum.hpp"

using jg::BigInt;
using jg::GraphParams;

namespace {
GraphParams gp(long n, long r, long s) { return GraphParams::checked(n, r, s); }
}

TEST_CASE("octahedron structure G(4,2,1)") {
    const auto g = jg::build_graph(gp(4, 2, 1));
    REQUIRE(g.vertex_count() == 6);
    CHECK(g.edge_count() == 12);
    for (const auto& nbrs : g.adj) CHECK(nbrs.size() == 4);
    // masks come out ascending (colex order)
    CHECK(std::is_sorted(g.vertices.begin(), g.vertices.end()));
    CHECK(static_cast<unsigned long long>(g.vertices.front()) == 0b0011u);
    CHECK(static_cast<unsigned long long>(g.vertices.back()) == 0b1100u);
}

TEST_CASE("Petersen structure G(5,2,0)") {
    const auto g = jg::build_graph(gp(5, 2, 0));
    REQUIRE(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    for (const auto& nbrs : g.adj) CHECK(nbrs.size() == 3);
    // adjacency is the popcount rule, symmetric, sorted
    for (std::size_t u = 0; u < 10; ++u) {
        CHECK(std::is_sorted(g.adj[u].begin(), g.adj[u].end()));
        for (std::size_t v = 0; v < 10; ++v) {
            const bool adjacent =
                std::binary_search(g.adj[u].begin(), g.adj[u].end(),
                                   static_cast<int32_t>(v));
            const bool rule = u != v && jg::popcount128(g.vertices[u] &
                                                        g.vertices[v]) == 0;
            CHECK(adjacent == rule);
        }
    }
}

TEST_CASE("G(8,4,2) counts") {
    const auto g = jg::build_graph(gp(8, 4, 2));
    CHECK(g.vertex_count() == 70);
    for (const auto& nbrs : g.adj) CHECK(nbrs.size() == 36);
    CHECK(2 * g.edge_count() == 36 * 70);
}

TEST_CASE("build_graph limits") {
    jg::BuildLimits tight;
    tight.max_vertices = 1000;
    CHECK_THROWS_AS(jg::build_graph(gp(16, 8, 4), tight),
                    std::invalid_argument);
    CHECK_NOTHROW(jg::build_graph(gp(16, 2, 1)));
    CHECK_THROWS_AS(jg::build_graph(GraphParams{130, 2, 1}),
                    std::invalid_argument);
}

TEST_CASE("trace moments of the octahedron") {
    const auto g = jg::build_graph(gp(4, 2, 1));
    const auto m = jg::trace_moments(g, 3);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == 6);
    CHECK(m[1] == 0);
    CHECK(m[2] == 24);   // d * N
    CHECK(m[3] == 48);   // 6 walks around each of the 8 triangles
}

TEST_CASE("Petersen is triangle-free") {
    const auto g = jg::build_graph(gp(5, 2, 0));
    const auto m = jg::trace_moments(g, 3);
    CHECK(m[2] == 30);
    CHECK(m[3] == 0);
}

TEST_CASE("moment invariants") {
    for (const auto& p : {gp(5, 2, 0), gp(8, 4, 2), gp(7, 3, 1)}) {
        const auto g = jg::build_graph(p);
        const auto m = jg::trace_moments(g, 6);
        CHECK(m[0] == jg::binom(p.n, p.r));
        CHECK(m[1] == 0);
        CHECK(m[2] == jg::degree(p) * jg::binom(p.n, p.r));
        for (std::size_t k = 0; k < m.size(); k += 2) CHECK(m[k] >= 0);
    }
}

TEST_CASE("degenerate parameters build an edgeless graph") {
    const auto g = jg::build_graph(gp(4, 3, 1));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    CHECK(jg::trace_moments(g, 4) ==
          std::vector<jg::BigInt>({4, 0, 0, 0, 0}));
    CHECK(jg::components(g) == std::vector<long>({1, 1, 1, 1}));
}

TEST_CASE("walk, transitive and dense routes agree") {
    for (const auto& p :
         {gp(4, 2, 1), gp(5, 2, 0), gp(8, 4, 2), gp(6, 3, 1), gp(9, 4, 2)}) {
        const auto g = jg::build_graph(p);
        const auto full = jg::trace_moments(g, 4, jg::TraceMode::full_diagonal);
        const auto trans = jg::trace_moments(g, 4, jg::TraceMode::transitive);
        const auto dense = jg::trace_moments_dense(g, 4);
        CHECK(full == trans);
        CHECK(full == dense);
    }
    CHECK_THROWS_AS(
        jg::trace_moments_dense(jg::build_graph(gp(4, 2, 1)), 5),
        std::invalid_argument);
}

TEST_CASE("large-power moments exercise the arbitrary-precision path") {
    // K = 127 gives d^ceil(K/2) = 4^64 >= 2^126, forcing the walk counters
    // off the 128-bit fast path.
    const auto p = gp(4, 2, 1);
    const auto g = jg::build_graph(p);
    const long K = 127;
    const auto m = jg::trace_moments(g, K, jg::TraceMode::full_diagonal);
    const auto sp = jg::full_spectrum(p);
    std::vector<BigInt> powers(sp.entries.size(), 1);
    for (long k = 0; k <= K; ++k) {
        BigInt want = 0;
        for (std::size_t e = 0; e < sp.entries.size(); ++e) {
            want += sp.entries[e].multiplicity * powers[e];
            powers[e] *= sp.entries[e].value;
        }
        CHECK(m[static_cast<std::size_t>(k)] == want);
    }
}

TEST_CASE("spectrum consistency on the pinned instances") {
    CHECK(jg::spectrum_consistency(gp(4, 2, 1), 6).ok);
    CHECK(jg::spectrum_consistency(gp(5, 2, 0), 6).ok);
    const auto res = jg::spectrum_consistency(gp(8, 4, 2), 9);
    CHECK(res.ok);
    CHECK(res.first_failing_k == -1);
    CHECK(res.graph_moments[2] == 2520);  // 36 * 70
}

TEST_CASE("consistency through the complement map") {
    // graph built from the non-canonical triple, spectrum from the canon
    const auto res = jg::spectrum_consistency(gp(8, 5, 3), 7);
    CHECK(res.ok);
}

TEST_CASE("moment matching discriminates a wrong spectrum") {
    // Deliberately transpose the Petersen multiplicities: {3^1, 1^4, (-2)^5}
    // instead of {3^1, (-2)^4, 1^5}. The odd moments give it away.
    const auto g = jg::build_graph(gp(5, 2, 0));
    const auto m = jg::trace_moments(g, 3);
    const BigInt wrong3 = 1 * 27 + 4 * 1 + 5 * (-8);
    CHECK(m[3] != wrong3);
    CHECK(m[3] == 1 * 27 + 5 * 1 + 4 * (-8));
}

TEST_CASE("components with and without edge masks") {
    const auto g = jg::build_graph(gp(4, 2, 1));
    CHECK(jg::components(g) == std::vector<long>{6});
    CHECK(jg::components(g, [](int32_t, int32_t) { return false; }) ==
          std::vector<long>({1, 1, 1, 1, 1, 1}));
    CHECK(jg::components(g, [](int32_t u, int32_t v) {
              return u == 0 && v == 1;
          }) == std::vector<long>({2, 1, 1, 1, 1}));

    const auto petersen = jg::build_graph(gp(5, 2, 0));
    CHECK(jg::components(petersen) == std::vector<long>{10});
    // the Kneser half-size case is a perfect matching
    const auto matching = jg::build_graph(gp(4, 2, 0));
    CHECK(jg::components(matching) == std::vector<long>({2, 2, 2}));
}

TEST_CASE("edge list export") {
    const auto g = jg::build_graph(gp(4, 2, 1));
    std::ostringstream os;
    jg::write_edge_list(g, os);
    std::istringstream is(os.str());
    int lines = 0;
    long u, v;
    while (is >> u >> v) {
        ++lines;
        CHECK(u < v);
        CHECK(std::binary_search(g.adj[static_cast<std::size_t>(u)].begin(),
                                 g.adj[static_cast<std::size_t>(u)].end(),
                                 static_cast<int32_t>(v)));
    }
    CHECK(lines == 12);
}

TEST_CASE("regularity and handshake over a sweep of small graphs") {
    for (long n = 2; n <= 10; ++n)
        for (long r = 1; 2 * r <= n; ++r)
            for (long s = 0; s < r; ++s) {
                const auto p = gp(n, r, s);
                const auto g = jg::build_graph(p);
                const BigInt d = jg::degree(p);
                for (const auto& nbrs : g.adj)
                    CHECK(BigInt(static_cast<long>(nbrs.size())) == d);
                CHECK(BigInt(2) * static_cast<unsigned long>(g.edge_count()) ==
                      d * jg::binom(n, r));
            }
}
