#ifndef MIM_ORACLE_HPP
#define MIM_ORACLE_HPP

// Exponential-time ground truth. Every routine refuses inputs beyond a fixed
// size guard instead of running unbounded.

#include <mim/errors.hpp>
#include <mim/graph.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mim
{

inline constexpr std::size_t oracle_max_edges = 64;
inline constexpr std::size_t star_detector_max_order = 14;
inline constexpr std::size_t ks_oracle_max_order = 8;

namespace detail
{

class mim_search
{
public:
    explicit mim_search(const bipartite_graph& g)
        : g_(g), edges_(g.edges().begin(), g.edges().end()),
          blocked_(g.order(), 0)
    {
    }

    induced_matching run()
    {
        descend(0);
        return best_;
    }

private:
    bool free(const edge& e) const
    {
        return blocked_[e.black] == 0 && blocked_[e.white] == 0;
    }

    void block(const edge& e, int delta)
    {
        blocked_[e.black] += delta;
        blocked_[e.white] += delta;
        for (auto v : {e.black, e.white})
            for (auto w : g_.neighbors(v))
                blocked_[w] += delta;
    }

    void descend(std::size_t i)
    {
        if (current_.size() > best_.size())
            best_ = current_;
        if (i == edges_.size())
            return;
        std::size_t available = 0;
        seen_.assign(g_.order(), false);
        std::size_t endpoints = 0;
        for (auto j = i; j < edges_.size(); ++j)
            if (free(edges_[j])) {
                ++available;
                for (auto v : {edges_[j].black, edges_[j].white})
                    if (!seen_[v]) {
                        seen_[v] = true;
                        ++endpoints;
                    }
            }
        if (current_.size() + std::min(available, endpoints / 2) <=
            best_.size())
            return;
        const auto e = edges_[i];
        if (free(e)) {
            block(e, +1);
            current_.push_back(e);
            descend(i + 1);
            current_.pop_back();
            block(e, -1);
        }
        descend(i + 1);
    }

    const bipartite_graph& g_;
    std::vector<edge> edges_;
    std::vector<int> blocked_;
    std::vector<bool> seen_;
    induced_matching current_, best_;
};

} // namespace detail

/**
 * Exact maximum induced matching by include-first depth-first search over
 * the sorted edge list. The witness is the first maximum met in that order.
 */
inline induced_matching brute_force_mim(const bipartite_graph& g)
{
    if (g.size() > oracle_max_edges)
        throw too_large("brute_force_mim: " + std::to_string(g.size()) +
                        " edges exceeds the guard of " +
                        std::to_string(oracle_max_edges));
    return detail::mim_search(g).run();
}

/**
 * The skew star: a center with pendant paths of lengths 1, 2, and 3.
 * Vertex 0 is the center (black); 1 ends the short leg; 2-3 and 4-5-6 are
 * the other legs.
 */
inline bipartite_graph star123_graph()
{
    using C = color;
    return new_graph(7,
                     {C::black, C::white, C::white, C::black, C::white,
                      C::black, C::white},
                     {{0, 1}, {0, 2}, {3, 2}, {0, 4}, {5, 4}, {5, 6}});
}

namespace detail
{

// Does the induced subgraph on `s` (7 vertices) form the skew star?
inline bool induces_star123(const bipartite_graph& g,
                            const std::array<vertex_id, 7>& s)
{
    std::array<std::array<bool, 7>, 7> adj{};
    std::array<int, 7> deg{};
    int edges = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (g.adjacent(s[i], s[j])) {
                adj[i][j] = adj[j][i] = true;
                ++deg[i];
                ++deg[j];
                ++edges;
            }
    if (edges != 6)
        return false;
    auto sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 7>{1, 1, 1, 2, 2, 2, 3})
        return false;
    const auto center =
        static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    // Map the legs: follow each neighbor of the center to a leaf.
    std::vector<int> legs;
    int covered = 1;
    for (int start = 0; start < 7; ++start) {
        if (!adj[center][start])
            continue;
        int prev = center, cur = start, len = 1;
        while (deg[cur] == 2) {
            int next = -1;
            for (int w = 0; w < 7; ++w)
                if (adj[cur][w] && w != prev)
                    next = w;
            if (next < 0 || next == center)
                return false;
            prev = cur;
            cur = next;
            ++len;
        }
        if (deg[cur] != 1)
            return false;
        legs.push_back(len);
        covered += len;
    }
    std::sort(legs.begin(), legs.end());
    return covered == 7 && legs == std::vector<int>{1, 2, 3};
}

} // namespace detail

/**
 * A 7-vertex set inducing the skew star, or nothing. Enumerates all
 * 7-subsets, filters on edge count and degree sequence, then maps the three
 * legs explicitly.
 */
inline std::optional<vertex_set> contains_star123(const bipartite_graph& g)
{
    const auto n = g.order();
    if (n > star_detector_max_order)
        throw too_large("contains_star123: order " + std::to_string(n) +
                        " exceeds the guard of " +
                        std::to_string(star_detector_max_order));
    if (n < 7)
        return std::nullopt;
    std::array<vertex_id, 7> s{};
    for (vertex_id i = 0; i < 7; ++i)
        s[i] = i;
    while (true) {
        if (detail::induces_star123(g, s))
            return vertex_set(s.begin(), s.end());
        int i = 6;
        while (i >= 0 && s[i] == n - 7 + static_cast<std::size_t>(i))
            --i;
        if (i < 0)
            return std::nullopt;
        ++s[i];
        for (int j = i + 1; j < 7; ++j)
            s[j] = s[j - 1] + 1;
    }
}

/**
 * Some associated partition (V1, V2) found by enumerating every vertex
 * subset, checked pair by pair against the definition.
 */
inline std::optional<std::pair<vertex_set, vertex_set>>
brute_force_ks_split(const bipartite_graph& g)
{
    const auto n = g.order();
    if (n > ks_oracle_max_order)
        throw too_large("brute_force_ks_split: order " + std::to_string(n) +
                        " exceeds the guard of " +
                        std::to_string(ks_oracle_max_order));
    if (n < 2)
        throw too_small("brute_force_ks_split needs at least 2 vertices");
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        auto first = [&](vertex_id v) { return (mask >> v) & 1u; };
        bool ok = true;
        for (vertex_id u = 0; u < n && ok; ++u)
            for (vertex_id v = 0; v < n && ok; ++v) {
                if (!first(u) || first(v))
                    continue;
                const auto cu = g.color_of(u), cv = g.color_of(v);
                if (cu == color::black && cv == color::white &&
                    !g.adjacent(u, v))
                    ok = false;
                if (cu == color::white && cv == color::black &&
                    g.adjacent(u, v))
                    ok = false;
            }
        if (!ok)
            continue;
        std::pair<vertex_set, vertex_set> split;
        for (vertex_id v = 0; v < n; ++v)
            (first(v) ? split.first : split.second).push_back(v);
        return split;
    }
    return std::nullopt;
}

} // namespace mim

#endif // MIM_ORACLE_HPP
