#include "jg/percolation.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "jg/dsu.hpp"
#include "jg/spectrum.hpp"

namespace jg {

double alpha_bar(double c) {
    if (!(c > 1.0))
        throw std::domain_error(
            "alpha_bar: needs c > 1 (x e^{-x} = c e^{-c} has no second root "
            "in (0,1) otherwise)");
    const double target = c * std::exp(-c);
    double lo = 0.0, hi = 1.0;
    // x e^{-x} increases on (0,1), f(0) = 0 < target < f(1) = 1/e.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid * std::exp(-mid) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-16) break;
    }
    const double root = 0.5 * (lo + hi);
    if (std::fabs(root * std::exp(-root) - target) > 1e-12)
        throw std::runtime_error("alpha_bar: bisection failed to converge");
    return root;
}

double predicted_giant_fraction(double c) {
    if (c <= 1.0) return 0.0;
    return 1.0 - alpha_bar(c) / c;
}

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial) {
    // Decorrelate the per-trial progressions; a plain (seed + trial) would
    // make neighbouring trials shifted copies of one stream.
    SplitMix64 h(seed ^ (0xA0761D6478BD642Full + trial));
    h.next();
    return h.next();
}

std::vector<long> sample_subgraph(const ExplicitGraph& g, double p,
                                  SplitMix64& rng) {
    const std::size_t N = g.vertex_count();
    DisjointSets dsu(N);
    const int s = static_cast<int>(g.params.s);
    for (std::size_t u = 0; u < N; ++u) {
        const VertexMask mu = g.vertices[u];
        for (std::size_t v = u + 1; v < N; ++v) {
            if (popcount128(mu & g.vertices[v]) != s) continue;
            if (rng.uniform01() < p)
                dsu.unite(static_cast<int32_t>(u), static_cast<int32_t>(v));
        }
    }
    return dsu.component_sizes();
}

PercolationSummary run_percolation(const PercolationConfig& cfg,
                                   const ExplicitGraph& g) {
    if (cfg.trials < 1)
        throw std::invalid_argument("run_percolation: trials must be >= 1");
    if (cfg.c <= 0)
        throw std::invalid_argument("run_percolation: c must be positive");
    if (!(g.params == cfg.params))
        throw std::invalid_argument(
            "run_percolation: graph was built for different parameters");
    const BigInt d = degree(cfg.params);
    if (BigRat(cfg.c) > BigRat(d))
        throw std::invalid_argument("run_percolation: c = " +
                                    cfg.c.get_str() + " exceeds the degree " +
                                    d.get_str() + " (p = c/d would be > 1)");

    PercolationSummary out;
    out.params = cfg.params;
    out.c = cfg.c;
    out.seed = cfg.seed;
    out.vertex_count = static_cast<long>(g.vertex_count());
    out.p = BigRat(cfg.c / BigRat(d)).get_d();
    out.predicted_fraction = predicted_giant_fraction(cfg.c.get_d());
    out.trials.assign(static_cast<std::size_t>(cfg.trials), {});

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned nthreads = std::max(
        1u, std::min(hw == 0 ? 1u : hw, static_cast<unsigned>(cfg.trials)));
    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            const long t = next.fetch_add(1);
            if (t >= cfg.trials) break;
            SplitMix64 rng(trial_stream_seed(cfg.seed,
                                             static_cast<std::uint64_t>(t)));
            const auto sizes = sample_subgraph(g, out.p, rng);
            auto& res = out.trials[static_cast<std::size_t>(t)];
            res.largest = sizes.empty() ? 0 : sizes[0];
            res.second = sizes.size() > 1 ? sizes[1] : 0;
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    const double N = static_cast<double>(out.vertex_count);
    double mean = 0;
    for (const auto& t : out.trials) mean += static_cast<double>(t.largest) / N;
    mean /= static_cast<double>(cfg.trials);
    out.mean_largest_fraction = mean;
    if (cfg.trials > 1) {
        double ss = 0;
        for (const auto& t : out.trials) {
            const double dev = static_cast<double>(t.largest) / N - mean;
            ss += dev * dev;
        }
        out.stddev_largest_fraction =
            std::sqrt(ss / static_cast<double>(cfg.trials - 1));
    }
    return out;
}

PercolationSummary run_percolation(const PercolationConfig& cfg,
                                   BuildLimits limits) {
    const ExplicitGraph g = build_graph(cfg.params, limits);
    return run_percolation(cfg, g);
}

std::vector<PercolationSummary> threshold_scan(
    const GraphParams& params, const std::vector<BigRat>& c_values,
    long trials, std::uint64_t seed, BuildLimits limits) {
    const ExplicitGraph g = build_graph(params, limits);
    std::vector<PercolationSummary> rows;
    rows.reserve(c_values.size());
    for (const auto& c : c_values)
        rows.push_back(run_percolation({params, c, trials, seed}, g));
    return rows;
}

}  // namespace jg
