#include "jg/oracle.hpp"

#include <atomic>
#include <cstring>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "jg/dsu.hpp"
#include "jg/spectrum.hpp"

namespace jg {

namespace {

constexpr std::size_t kFullDiagonalMaxVertices = 1024;

// 256-bit accumulator for sums of 128x128-bit products. The walk vectors are
// bounded by d^T < 2^126, so each dot product (a diagonal entry of A^k,
// k <= 2T) stays below 2^252 and never carries out of the top limb.
struct U256 {
    std::uint64_t w[4] = {0, 0, 0, 0};

    void add_word(std::uint64_t v, int limb) {
        for (int i = limb; v != 0 && i < 4; ++i) {
            std::uint64_t old = w[i];
            w[i] = old + v;
            v = (w[i] < old) ? 1 : 0;
        }
    }

    void add_product(unsigned __int128 a, unsigned __int128 b) {
        const std::uint64_t a0 = static_cast<std::uint64_t>(a);
        const std::uint64_t a1 = static_cast<std::uint64_t>(a >> 64);
        const std::uint64_t b0 = static_cast<std::uint64_t>(b);
        const std::uint64_t b1 = static_cast<std::uint64_t>(b >> 64);
        unsigned __int128 p = static_cast<unsigned __int128>(a0) * b0;
        add_word(static_cast<std::uint64_t>(p), 0);
        add_word(static_cast<std::uint64_t>(p >> 64), 1);
        p = static_cast<unsigned __int128>(a0) * b1;
        add_word(static_cast<std::uint64_t>(p), 1);
        add_word(static_cast<std::uint64_t>(p >> 64), 2);
        p = static_cast<unsigned __int128>(a1) * b0;
        add_word(static_cast<std::uint64_t>(p), 1);
        add_word(static_cast<std::uint64_t>(p >> 64), 2);
        p = static_cast<unsigned __int128>(a1) * b1;
        add_word(static_cast<std::uint64_t>(p), 2);
        add_word(static_cast<std::uint64_t>(p >> 64), 3);
    }

    BigInt to_bigint() const {
        BigInt z;
        mpz_import(z.get_mpz_t(), 4, -1, sizeof(std::uint64_t), 0, 0, w);
        return z;
    }
};

// Closed-walk counts (A^k)_{src,src}, k = 0..K, via T = ceil(K/2) sparse
// propagations and one dot product per k: (A^{a+b})_{uu} = <A^a e_u, A^b e_u>.
std::vector<BigInt> diagonal_walks_u128(const ExplicitGraph& g, long K,
                                        int32_t src,
                                        std::vector<unsigned __int128>& ws) {
    const std::size_t N = g.vertex_count();
    const long T = (K + 1) / 2;
    ws.assign(static_cast<std::size_t>(T + 1) * N, 0);
    auto level = [&](long t) { return ws.data() + static_cast<std::size_t>(t) * N; };
    level(0)[static_cast<std::size_t>(src)] = 1;
    for (long t = 1; t <= T; ++t) {
        const auto* prev = level(t - 1);
        auto* cur = level(t);
        for (std::size_t v = 0; v < N; ++v) {
            unsigned __int128 acc = 0;
            for (int32_t w : g.adj[v]) acc += prev[static_cast<std::size_t>(w)];
            cur[v] = acc;
        }
    }
    std::vector<BigInt> diag(static_cast<std::size_t>(K) + 1);
    for (long k = 0; k <= K; ++k) {
        const auto* xa = level(k / 2);
        const auto* xb = level(k - k / 2);
        U256 dot;
        for (std::size_t v = 0; v < N; ++v)
            if (xa[v] != 0 && xb[v] != 0) dot.add_product(xa[v], xb[v]);
        diag[static_cast<std::size_t>(k)] = dot.to_bigint();
    }
    return diag;
}

// Same contract, arbitrary precision. Only used when d^T could overflow the
// 128-bit walk counters.
std::vector<BigInt> diagonal_walks_mpz(const ExplicitGraph& g, long K,
                                       int32_t src) {
    const std::size_t N = g.vertex_count();
    const long T = (K + 1) / 2;
    std::vector<std::vector<BigInt>> xs(
        static_cast<std::size_t>(T + 1), std::vector<BigInt>(N));
    xs[0][static_cast<std::size_t>(src)] = 1;
    for (long t = 1; t <= T; ++t) {
        const auto& prev = xs[static_cast<std::size_t>(t - 1)];
        auto& cur = xs[static_cast<std::size_t>(t)];
        for (std::size_t v = 0; v < N; ++v) {
            BigInt acc = 0;
            for (int32_t w : g.adj[v]) acc += prev[static_cast<std::size_t>(w)];
            cur[v] = std::move(acc);
        }
    }
    std::vector<BigInt> diag(static_cast<std::size_t>(K) + 1);
    for (long k = 0; k <= K; ++k) {
        const auto& xa = xs[static_cast<std::size_t>(k / 2)];
        const auto& xb = xs[static_cast<std::size_t>(k - k / 2)];
        BigInt dot = 0;
        for (std::size_t v = 0; v < N; ++v) dot += xa[v] * xb[v];
        diag[static_cast<std::size_t>(k)] = std::move(dot);
    }
    return diag;
}

bool walks_fit_u128(const ExplicitGraph& g, long K) {
    const long T = (K + 1) / 2;
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(),
                  static_cast<unsigned long>(g.degree < 1 ? 1 : g.degree),
                  static_cast<unsigned long>(T));
    return bound < (BigInt(1) << 126);
}

}  // namespace

std::size_t ExplicitGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return twice / 2;
}

ExplicitGraph build_graph(const GraphParams& p, BuildLimits limits) {
    GraphParams::checked(p.n, p.r, p.s);
    if (p.n > 128)
        throw std::invalid_argument("build_graph: n = " + std::to_string(p.n) +
                                    " exceeds the 128-bit mask width");
    const BigInt count = binom(p.n, p.r);
    if (count > static_cast<unsigned long>(limits.max_vertices))
        throw std::invalid_argument(
            "build_graph: C(" + std::to_string(p.n) + ", " +
            std::to_string(p.r) + ") = " + count.get_str() +
            " exceeds the vertex cap " + std::to_string(limits.max_vertices));
    const std::size_t N = count.get_ui();

    ExplicitGraph g;
    g.params = p;
    g.degree = static_cast<long>(degree(p).get_si());
    g.vertices.reserve(N);

    // Colex enumeration: bump the lowest position that can move, reset the
    // ones below it. Produces masks in ascending numeric order.
    std::vector<long> pos(static_cast<std::size_t>(p.r));
    std::iota(pos.begin(), pos.end(), 0L);
    for (;;) {
        VertexMask m = 0;
        for (long b : pos) m |= static_cast<VertexMask>(1) << b;
        g.vertices.push_back(m);
        long t = 0;
        while (t < p.r) {
            const long limit = (t + 1 < p.r) ? pos[static_cast<std::size_t>(t + 1)] : p.n;
            if (pos[static_cast<std::size_t>(t)] + 1 < limit) break;
            ++t;
        }
        if (t == p.r) break;
        ++pos[static_cast<std::size_t>(t)];
        for (long q = 0; q < t; ++q) pos[static_cast<std::size_t>(q)] = q;
    }
    if (g.vertices.size() != N)
        throw std::logic_error("build_graph: enumeration miscounted");

    g.adj.assign(N, {});
    for (std::size_t u = 0; u < N; ++u) {
        for (std::size_t v = u + 1; v < N; ++v) {
            if (popcount128(g.vertices[u] & g.vertices[v]) == p.s) {
                g.adj[u].push_back(static_cast<int32_t>(v));
                g.adj[v].push_back(static_cast<int32_t>(u));
            }
        }
    }
    return g;
}

std::vector<BigInt> trace_moments(const ExplicitGraph& g, long K,
                                  TraceMode mode) {
    if (K < 0) throw std::invalid_argument("trace_moments: K must be >= 0");
    const std::size_t N = g.vertex_count();
    if (N == 0) throw std::invalid_argument("trace_moments: empty graph");
    if (mode == TraceMode::automatic)
        mode = (N <= kFullDiagonalMaxVertices) ? TraceMode::full_diagonal
                                               : TraceMode::transitive;
    const bool fast = walks_fit_u128(g, K);

    if (mode == TraceMode::transitive) {
        std::vector<unsigned __int128> ws;
        std::vector<BigInt> diag = fast ? diagonal_walks_u128(g, K, 0, ws)
                                        : diagonal_walks_mpz(g, K, 0);
        for (auto& m : diag) m *= static_cast<unsigned long>(N);
        return diag;
    }

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned nthreads =
        std::max(1u, std::min(hw == 0 ? 1u : hw, static_cast<unsigned>(N)));
    std::vector<std::vector<BigInt>> partial(
        nthreads, std::vector<BigInt>(static_cast<std::size_t>(K) + 1));
    std::atomic<std::size_t> next{0};

    auto worker = [&](unsigned tid) {
        std::vector<unsigned __int128> ws;
        auto& acc = partial[tid];
        for (;;) {
            const std::size_t u = next.fetch_add(1);
            if (u >= N) break;
            std::vector<BigInt> diag =
                fast ? diagonal_walks_u128(g, K, static_cast<int32_t>(u), ws)
                     : diagonal_walks_mpz(g, K, static_cast<int32_t>(u));
            for (long k = 0; k <= K; ++k)
                acc[static_cast<std::size_t>(k)] +=
                    diag[static_cast<std::size_t>(k)];
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();

    std::vector<BigInt> moments(static_cast<std::size_t>(K) + 1);
    for (const auto& acc : partial)
        for (long k = 0; k <= K; ++k)
            moments[static_cast<std::size_t>(k)] +=
                acc[static_cast<std::size_t>(k)];
    return moments;
}

std::vector<BigInt> trace_moments_dense(const ExplicitGraph& g, long K) {
    if (K < 0 || K > 4)
        throw std::invalid_argument("trace_moments_dense: K must be in 0..4");
    const std::size_t N = g.vertex_count();
    if (N > 4096)
        throw std::invalid_argument(
            "trace_moments_dense: cross-check route capped at 4096 vertices");
    const std::size_t words = (N + 63) / 64;
    std::vector<std::uint64_t> rows(N * words, 0);
    for (std::size_t u = 0; u < N; ++u)
        for (int32_t v : g.adj[u])
            rows[u * words + static_cast<std::size_t>(v) / 64] |=
                std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);

    auto intersect = [&](std::size_t u, std::size_t v) -> std::uint64_t {
        std::uint64_t c = 0;
        const std::uint64_t* a = rows.data() + u * words;
        const std::uint64_t* b = rows.data() + v * words;
        for (std::size_t w = 0; w < words; ++w)
            c += static_cast<std::uint64_t>(__builtin_popcountll(a[w] & b[w]));
        return c;
    };

    std::vector<BigInt> m(static_cast<std::size_t>(K) + 1);
    m[0] = static_cast<unsigned long>(N);
    if (K >= 1) {
        std::uint64_t diag = 0;
        for (std::size_t u = 0; u < N; ++u)
            diag += (rows[u * words + u / 64] >> (u % 64)) & 1u;
        m[1] = diag;
    }
    if (K >= 2) {
        std::uint64_t total = 0;
        for (std::size_t u = 0; u < N; ++u) total += g.adj[u].size();
        m[2] = total;
    }
    if (K >= 3) {
        unsigned long long t3 = 0;
        for (std::size_t u = 0; u < N; ++u)
            for (int32_t v : g.adj[u])
                t3 += intersect(u, static_cast<std::size_t>(v));
        m[3] = static_cast<unsigned long>(t3);
    }
    if (K >= 4) {
        unsigned long long t4 = 0;
        for (std::size_t u = 0; u < N; ++u)
            for (std::size_t v = 0; v < N; ++v) {
                const std::uint64_t c = intersect(u, v);
                t4 += c * c;
            }
        m[4] = static_cast<unsigned long>(t4);
    }
    return m;
}

ConsistencyResult spectrum_consistency(const GraphParams& p, long K,
                                       BuildLimits limits, TraceMode mode) {
    const Spectrum sp = full_spectrum(p);
    const ExplicitGraph g = build_graph(p, limits);

    ConsistencyResult res;
    res.graph_moments = trace_moments(g, K, mode);
    res.formula_moments.resize(static_cast<std::size_t>(K) + 1);
    std::vector<BigInt> powers(sp.entries.size(), 1);
    for (long k = 0; k <= K; ++k) {
        BigInt sum = 0;
        for (std::size_t e = 0; e < sp.entries.size(); ++e) {
            sum += sp.entries[e].multiplicity * powers[e];
            powers[e] *= sp.entries[e].value;
        }
        res.formula_moments[static_cast<std::size_t>(k)] = std::move(sum);
    }
    for (long k = 0; k <= K; ++k) {
        if (res.formula_moments[static_cast<std::size_t>(k)] !=
            res.graph_moments[static_cast<std::size_t>(k)]) {
            res.ok = false;
            res.first_failing_k = k;
            break;
        }
    }
    return res;
}

std::vector<long> components(const ExplicitGraph& g, const EdgeKeep& keep) {
    DisjointSets dsu(g.vertex_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (int32_t v : g.adj[u])
            if (static_cast<std::size_t>(v) > u &&
                (!keep || keep(static_cast<int32_t>(u), v)))
                dsu.unite(static_cast<int32_t>(u), v);
    return dsu.component_sizes();
}

void write_edge_list(const ExplicitGraph& g, std::ostream& os) {
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (int32_t v : g.adj[u])
            if (static_cast<std::size_t>(v) > u) os << u << ' ' << v << '\n';
}

}  // namespace jg
