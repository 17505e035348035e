#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jg/exactmath.hpp"
#include "jg/params.hpp"

namespace jg {

struct SpectrumEntry {
    long index = 0;       // i in 0..r
    BigInt value;         // E_{r-s}(i)
    BigInt multiplicity;  // C(n,i) - C(n,i-1)
};

struct Spectrum {
    GraphParams params;
    std::vector<SpectrumEntry> entries;  // one per i = 0..r
    BigInt degree;                       // = entries[0].value
    BigInt lambda;                       // max_{i>=1} |E(i)|
    long argmax_index = 0;               // smallest i attaining lambda

    BigInt vertex_count() const;  // C(n,r) = sum of multiplicities

    // Distinct eigenvalues with summed multiplicities, descending by value.
    std::vector<std::pair<BigInt, BigInt>> merged() const;
};

// C(r,s) * C(n-r, r-s); zero exactly for degenerate (edgeless) parameters.
BigInt degree(const GraphParams& p);

// Eberlein eigenvalue E_{r-s}(i) of G(n,r,s), r <= n/2, by its two summation
// routes. Route B is the production evaluator (i+1 terms); route A is kept as
// an independent cross-check and shares nothing with B beyond binom().
BigInt eigenvalue_route_a(const GraphParams& p, long i);
BigInt eigenvalue_route_b(const GraphParams& p, long i);

// Requires canonical, non-degenerate parameters.
Spectrum full_spectrum(const GraphParams& p);

// The product C(i,j) C(r-i, r-s-j) C(n-r-i, r-s-j): the unsigned j-th term
// of the Eberlein sum at index i.
BigInt eberlein_term(const GraphParams& p, long i, long j);

// LHS - RHS of the two-term contiguous recurrence that expresses
// eberlein_term(i, j) through the terms at index i-1. Identically zero on
// the valid domain 1 <= i <= min(r, n-r), 0 <= j <= i.
BigRat eberlein_recurrence_residual(const GraphParams& p, long i, long j);

// The exact-lambda statements and bounds the verifier knows about. The short
// ids are also the CLI/report vocabulary:
//   lovasz     exact lambda for s = 0 (Kneser graphs)
//   brouwer    exact lambda when (r-s)(n-1) >= r(n-r)
//   t4         exact lambda for the family G(4s, 2s, s)
//   t5_1       fixed (r, s), growing n: lambda = |E(1)| ~ (s/r) d
//   main_bound lambda = O(d * max{1, |f_s - 2a f_r|, f_r^2/n} / n) near
//              r = a*n, s = a^2*n (requires alpha)
enum class Theorem { lovasz, brouwer, t4, t5_1, main_bound };

std::string theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(const std::string& name);

struct BoundReport {
    Theorem theorem = Theorem::lovasz;
    GraphParams params;  // as given
    GraphParams canon;   // canonical form actually evaluated
    bool degenerate = false;
    bool applicable = false;
    // Exact predicted lambda (lovasz, brouwer, t4) or the exact normalizer
    // lambda is divided by (t5_1: (s/r)d, main_bound: d*max{...}/n).
    // Absent whenever applicable is false.
    std::optional<BigRat> predicted;
    BigInt lambda;
    std::optional<BigRat> ratio;  // lambda / predicted
    long argmax_index = -1;
    // Exact pointwise claim of the theorem at these parameters; absent for
    // main_bound (asymptotic only) and for inapplicable/degenerate items.
    std::optional<bool> claim_holds;
    std::optional<BigRat> alpha;     // main_bound input, echoed
    std::optional<BigRat> f_r, f_s;  // r - alpha n, s - alpha^2 n
    std::string error;               // per-item failure in scans
};

// alpha is required for main_bound and ignored otherwise. Degenerate
// parameters come back flagged with lambda = 0 and applicable = false.
BoundReport verify_bound(const GraphParams& p, Theorem t,
                         std::optional<BigRat> alpha = std::nullopt);

struct ScanItem {
    GraphParams params;
    std::optional<BigRat> alpha;
};

struct ScanResult {
    std::vector<BoundReport> reports;
    std::optional<BigRat> max_ratio;  // over items that produced a ratio
    long max_ratio_index = -1;
    // Least input position from which claim_holds is true for every later
    // item; -1 when the suffix never stabilizes or the theorem carries no
    // pointwise claim.
    long threshold_index = -1;
    bool any_error = false;
};

// Per-item errors are recorded in the report and the scan continues.
ScanResult scan_bounds(const std::vector<ScanItem>& items, Theorem t);

}  // namespace jg
