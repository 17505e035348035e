#pragma once

#include <string>

namespace jg {

// Parameter triple of a Johnson graph G(n, r, s): vertices are the r-subsets
// of an n-set, two of them adjacent exactly when they intersect in s elements.
struct GraphParams {
    long n = 0;
    long r = 0;
    long s = 0;

    // Throws std::invalid_argument unless n >= 1 and 0 <= s < r <= n.
    static GraphParams checked(long n, long r, long s);

    long k() const { return r - s; }

    // 2r - s > n: no two r-subsets can meet in exactly s elements, so the
    // graph has no edges.
    bool degenerate() const { return 2 * r - s > n; }

    bool canonical() const { return 2 * r <= n; }

    bool operator==(const GraphParams&) const = default;

    std::string str() const;
};

// Parameters with r <= n/2 describing an isomorphic graph, via the
// complement map (n, r, s) -> (n, n-r, n-2r+s). Identity when already
// canonical. Degenerate parameters have no canonical form and throw.
GraphParams canonicalize(const GraphParams& p);

}  // namespace jg
