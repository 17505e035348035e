#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "jg/exactmath.hpp"
#include "jg/params.hpp"

namespace jg {

// Ground sets up to 128 elements; one bit per element.
using VertexMask = unsigned __int128;

inline int popcount128(VertexMask m) {
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
           __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

// A Johnson graph realized vertex by vertex: weight-r masks in colex
// (= ascending numeric) order, u ~ v iff popcount(mask_u & mask_v) == s.
struct ExplicitGraph {
    GraphParams params;
    std::vector<VertexMask> vertices;
    std::vector<std::vector<int32_t>> adj;  // sorted neighbor lists
    long degree = 0;                        // C(r,s) * C(n-r, r-s)

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const;
};

struct BuildLimits {
    std::size_t max_vertices = 20000;
};

// Throws when C(n,r) exceeds the cap or n > 128. Accepts any valid
// parameters, canonical or not (degenerate ones build an edgeless graph).
ExplicitGraph build_graph(const GraphParams& p, BuildLimits limits = {});

// tr(A^k), k = 0..K, exact.
//
// full_diagonal sums closed-walk counts over every start vertex.
// transitive counts from one start and multiplies by |V|; it leans on the
// vertex-transitivity of the construction (relabeling the ground set carries
// any r-set to any other and preserves intersection sizes).
// automatic picks full_diagonal up to 1024 vertices, transitive above.
enum class TraceMode { full_diagonal, transitive, automatic };

std::vector<BigInt> trace_moments(const ExplicitGraph& g, long K,
                                  TraceMode mode = TraceMode::automatic);

// Dense popcount route for k <= 4, used only to cross-check the walk route.
std::vector<BigInt> trace_moments_dense(const ExplicitGraph& g, long K);

struct ConsistencyResult {
    bool ok = true;
    long first_failing_k = -1;
    std::vector<BigInt> formula_moments;  // sum_i mult_i * E(i)^k
    std::vector<BigInt> graph_moments;    // tr(A^k)
};

// Moment matching between the closed-form spectrum and the explicit graph:
// sum_i mult_i E(i)^k == tr(A^k) for k = 0..K. With at most r+1 distinct
// claimed values, K >= 2r+1 pins the whole spectrum.
ConsistencyResult spectrum_consistency(const GraphParams& p, long K,
                                       BuildLimits limits = {},
                                       TraceMode mode = TraceMode::automatic);

using EdgeKeep = std::function<bool(int32_t u, int32_t v)>;

// Component sizes, largest first. The predicate filters edges (called once
// per unordered pair, u < v); an empty predicate keeps every edge.
std::vector<long> components(const ExplicitGraph& g,
                             const EdgeKeep& keep = {});

// One "u v" pair per line, 0-based, u < v.
void write_edge_list(const ExplicitGraph& g, std::ostream& os);

}  // namespace jg
