#include "jg/params.hpp"

#include <stdexcept>

namespace jg {

GraphParams GraphParams::checked(long n, long r, long s) {
    GraphParams p{n, r, s};
    if (n < 1)
        throw std::invalid_argument("G" + p.str() + ": n must be positive");
    if (r < 1)
        throw std::invalid_argument("G" + p.str() + ": r must be positive");
    if (r > n)
        throw std::invalid_argument("G" + p.str() + ": r exceeds n");
    if (s < 0)
        throw std::invalid_argument("G" + p.str() + ": s must be nonnegative");
    if (s >= r)
        throw std::invalid_argument("G" + p.str() + ": s must be less than r");
    return p;
}

std::string GraphParams::str() const {
    return "(" + std::to_string(n) + ", " + std::to_string(r) + ", " +
           std::to_string(s) + ")";
}

GraphParams canonicalize(const GraphParams& p) {
    GraphParams::checked(p.n, p.r, p.s);
    if (p.canonical()) return p;
    if (p.degenerate())
        throw std::domain_error(
            "G" + p.str() +
            " is edgeless (2r - s > n) and has no canonical form");
    // 2r > n and 2r - s <= n, so the complement triple is valid and has
    // n - r < n/2.
    return GraphParams{p.n, p.n - p.r, p.n - 2 * p.r + p.s};
}

}  // namespace jg
