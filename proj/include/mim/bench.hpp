#ifndef MIM_BENCH_HPP
#define MIM_BENCH_HPP

#include <mim/decomposition.hpp>
#include <mim/generator.hpp>
#include <mim/solver.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <ostream>

namespace mim
{

// Instances for timing: parallel nodes above 48 vertices keep the edge
// count near-linear in n, and shallow trees keep decomposition fast.
inline gen_config bench_config(std::size_t n, std::uint64_t seed)
{
    gen_config cfg;
    cfg.seed = seed;
    cfg.target_n = n;
    cfg.class_max = 2;
    cfg.k_max = 10;
    cfg.max_depth = 6;
    cfg.dense_limit = 48;
    return cfg;
}

struct bench_row
{
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t nodes = 0;
    std::size_t matching = 0;
    double decompose_ms = 0;
    double solve_ms = 0;
    solve_stats stats; // from one solve

    double solve_ns_per_node() const
    {
        return nodes ? solve_ms * 1e6 / static_cast<double>(nodes) : 0.0;
    }
};

/**
 * Generates one instance of order n, then times decomposition and solving
 * separately on a monotonic clock, keeping the best of `repeats` runs each.
 */
inline bench_row run_bench(std::size_t n, std::uint64_t seed,
                           std::size_t repeats)
{
    using clock = std::chrono::steady_clock;
    auto inst = gen_tree(bench_config(n, seed));
    const auto& g = inst.graph;
    bench_row row;
    row.n = g.order();
    row.edges = g.size();
    row.decompose_ms = std::numeric_limits<double>::infinity();
    row.solve_ms = std::numeric_limits<double>::infinity();
    decomp_tree tree;
    for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
        auto t0 = clock::now();
        tree = decompose(g);
        auto t1 = clock::now();
        row.decompose_ms = std::min(
            row.decompose_ms,
            std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    row.nodes = tree.size();
    for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
        solve_stats stats;
        auto t0 = clock::now();
        auto m = solve(tree, g, &stats);
        auto t1 = clock::now();
        row.solve_ms = std::min(
            row.solve_ms,
            std::chrono::duration<double, std::milli>(t1 - t0).count());
        row.matching = m.size();
        row.stats = stats;
    }
    return row;
}

inline void write_bench_header(std::ostream& out)
{
    out << "# n edges nodes matching decompose_ms solve_ms "
           "solve_ns_per_node\n";
}

inline void write_bench_row(std::ostream& out, const bench_row& r)
{
    out << r.n << ' ' << r.edges << ' ' << r.nodes << ' ' << r.matching << ' '
        << r.decompose_ms << ' ' << r.solve_ms << ' ' << r.solve_ns_per_node()
        << '\n';
}

} // namespace mim

#endif // MIM_BENCH_HPP
