#pragma once

#include <cstdint>
#include <vector>

#include "jg/exactmath.hpp"
#include "jg/oracle.hpp"
#include "jg/params.hpp"

namespace jg {

// Root of x e^{-x} = c e^{-c} in (0,1), for c > 1; bisection, residual
// below 1e-12. The predicted giant-component fraction is 1 - alpha_bar(c)/c.
double alpha_bar(double c);
double predicted_giant_fraction(double c);  // 0 for c <= 1

// Counter-style splittable stream: per-trial generators are seeded
// independently of execution order, so parallel runs reproduce exactly.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform01() {  // [0, 1), 53 random bits
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial);

struct PercolationConfig {
    GraphParams params;
    BigRat c;  // intensity; each edge is kept with probability p = c/d
    long trials = 1;
    std::uint64_t seed = 0;
};

struct TrialOutcome {
    long largest = 0;
    long second = 0;  // 0 when the subgraph is connected
};

struct PercolationSummary {
    GraphParams params;
    BigRat c;
    double p = 0;
    long vertex_count = 0;  // N = C(n,r)
    std::uint64_t seed = 0;
    std::vector<TrialOutcome> trials;
    double mean_largest_fraction = 0;
    double stddev_largest_fraction = 0;  // sample stddev; 0 for one trial
    double predicted_fraction = 0;       // 1 - alpha_bar(c)/c, or 0 for c <= 1
};

// One bond-percolation sample: every adjacent pair u < v (checked by the
// popcount test, in fixed row order) is kept with probability p using draws
// from the given stream. Returns component sizes, largest first.
std::vector<long> sample_subgraph(const ExplicitGraph& g, double p,
                                  SplitMix64& rng);

// Throws when c > d (p would exceed 1) or the config is malformed.
PercolationSummary run_percolation(const PercolationConfig& cfg,
                                   const ExplicitGraph& g);
PercolationSummary run_percolation(const PercolationConfig& cfg,
                                   BuildLimits limits = {});

// One summary per intensity, same graph and same per-trial streams for
// every row (coupled draws: the kept edge set grows with c trial by trial).
std::vector<PercolationSummary> threshold_scan(
    const GraphParams& params, const std::vector<BigRat>& c_values,
    long trials, std::uint64_t seed, BuildLimits limits = {});

}  // namespace jg
