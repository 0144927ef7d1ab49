#ifndef MIM_GRAPH_HPP
#define MIM_GRAPH_HPP

#include <mim/errors.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mim
{

using vertex_id = std::uint32_t;

enum class color : std::uint8_t
{
    black,
    white
};

constexpr color opposite(color c) noexcept
{
    return c == color::black ? color::white : color::black;
}

constexpr char color_token(color c) noexcept
{
    return c == color::black ? 'B' : 'W';
}

// Sorted, duplicate-free list of vertex ids.
using vertex_set = std::vector<vertex_id>;

// An edge is always stored black endpoint first.
struct edge
{
    vertex_id black;
    vertex_id white;

    friend auto operator<=>(const edge&, const edge&) = default;
};

using induced_matching = std::vector<edge>;

/**
 * Immutable bipartite graph on vertices 0..n-1.
 *
 * Adjacency is kept in compressed sparse rows with each row sorted, next to
 * the sorted (black, white) edge list. Both views always describe the same
 * edge set.
 */
class bipartite_graph
{
public:
    bipartite_graph() { offsets_.push_back(0); }

    bipartite_graph(std::vector<color> colors,
                    std::span<const std::pair<vertex_id, vertex_id>> edge_list)
        : colors_(std::move(colors))
    {
        const auto n = colors_.size();
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u >= n || v >= n)
                throw bad_index("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") has an endpoint >= " +
                                std::to_string(n));
            if (colors_[u] == colors_[v])
                throw monochromatic_edge(u, v);
            if (colors_[u] == color::white)
                std::swap(u, v);
            edges_.push_back({u, v});
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw duplicate_edge(dup->black, dup->white);
        build_rows();
    }

    std::size_t order() const noexcept { return colors_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    color color_of(vertex_id v) const { return colors_[v]; }
    const std::vector<color>& colors() const noexcept { return colors_; }

    std::span<const vertex_id> neighbors(vertex_id v) const
    {
        return {targets_.data() + offsets_[v],
                targets_.data() + offsets_[v + 1]};
    }

    std::size_t degree(vertex_id v) const
    {
        return offsets_[v + 1] - offsets_[v];
    }

    bool adjacent(vertex_id u, vertex_id v) const
    {
        if (degree(u) > degree(v))
            std::swap(u, v);
        auto row = neighbors(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    std::span<const edge> edges() const noexcept { return edges_; }

    std::size_t count(color c) const
    {
        return static_cast<std::size_t>(
            std::count(colors_.begin(), colors_.end(), c));
    }

    friend bool operator==(const bipartite_graph& a, const bipartite_graph& b)
    {
        return a.colors_ == b.colors_ && a.edges_ == b.edges_;
    }

private:
    void build_rows()
    {
        const auto n = colors_.size();
        offsets_.assign(n + 1, 0);
        for (const auto& e : edges_) {
            ++offsets_[e.black + 1];
            ++offsets_[e.white + 1];
        }
        for (std::size_t v = 0; v < n; ++v)
            offsets_[v + 1] += offsets_[v];
        targets_.resize(2 * edges_.size());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        // edges_ is sorted by (black, white), so black rows come out sorted;
        // white rows receive blacks in increasing order as well.
        for (const auto& e : edges_) {
            targets_[fill[e.black]++] = e.white;
            targets_[fill[e.white]++] = e.black;
        }
    }

    std::vector<color> colors_;
    std::vector<edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<vertex_id> targets_;
};

// Checked construction from a vertex count, colors, and an edge list in
// any endpoint order.
inline bipartite_graph
new_graph(std::size_t n, std::vector<color> colors,
          std::span<const std::pair<vertex_id, vertex_id>> edge_list)
{
    if (colors.size() != n)
        throw bad_index("expected " + std::to_string(n) + " colors, got " +
                        std::to_string(colors.size()));
    return bipartite_graph(std::move(colors), edge_list);
}

inline bipartite_graph
new_graph(std::size_t n, std::vector<color> colors,
          std::initializer_list<std::pair<vertex_id, vertex_id>> edge_list)
{
    return new_graph(n, std::move(colors),
                     std::span<const std::pair<vertex_id, vertex_id>>(
                         edge_list.begin(), edge_list.size()));
}

inline std::vector<std::pair<vertex_id, vertex_id>>
edge_pairs(const bipartite_graph& g)
{
    std::vector<std::pair<vertex_id, vertex_id>> out;
    out.reserve(g.size());
    for (const auto& e : g.edges())
        out.emplace_back(e.black, e.white);
    return out;
}

// Same vertices and colors; every black-white pair flips adjacency.
inline bipartite_graph bicomplement(const bipartite_graph& g)
{
    const auto n = static_cast<vertex_id>(g.order());
    std::vector<vertex_id> whites;
    for (vertex_id v = 0; v < n; ++v)
        if (g.color_of(v) == color::white)
            whites.push_back(v);
    std::vector<std::pair<vertex_id, vertex_id>> out;
    out.reserve(g.count(color::black) * whites.size() - g.size());
    for (vertex_id b = 0; b < n; ++b) {
        if (g.color_of(b) != color::black)
            continue;
        auto row = g.neighbors(b);
        auto it = row.begin();
        for (auto w : whites) {
            while (it != row.end() && *it < w)
                ++it;
            if (it == row.end() || *it != w)
                out.emplace_back(b, w);
        }
    }
    return bipartite_graph(g.colors(), out);
}

// Components ordered by their smallest vertex; each component sorted.
inline std::vector<vertex_set> connected_components(const bipartite_graph& g)
{
    const auto n = static_cast<vertex_id>(g.order());
    std::vector<bool> seen(n, false);
    std::vector<vertex_set> comps;
    std::vector<vertex_id> queue;
    for (vertex_id s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        queue.assign(1, s);
        seen[s] = true;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (auto w : g.neighbors(queue[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        std::sort(queue.begin(), queue.end());
        comps.push_back(queue);
    }
    return comps;
}

struct subgraph
{
    bipartite_graph graph;
    // to_parent[i] is the id in the source graph of local vertex i.
    std::vector<vertex_id> to_parent;
};

/**
 * Induced subgraphs on every part of a partial partition at once, in
 * O(n + m) total. Parts must be disjoint; each is sorted on output so local
 * ids preserve the parent's id order.
 */
inline std::vector<subgraph>
induced_subgraphs(const bipartite_graph& g, std::span<const vertex_set> parts)
{
    constexpr auto none = static_cast<std::uint32_t>(-1);
    const auto n = g.order();
    std::vector<std::uint32_t> part_of(n, none);
    std::vector<vertex_id> local(n, 0);
    std::vector<subgraph> out(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        auto ids = parts[p];
        std::sort(ids.begin(), ids.end());
        std::vector<color> colors;
        colors.reserve(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            auto v = ids[i];
            if (v >= n)
                throw bad_index("vertex " + std::to_string(v) +
                                " out of range");
            if (part_of[v] != none)
                throw bad_index("vertex " + std::to_string(v) +
                                " listed twice");
            part_of[v] = static_cast<std::uint32_t>(p);
            local[v] = static_cast<vertex_id>(i);
            colors.push_back(g.color_of(v));
        }
        out[p].graph = bipartite_graph(std::move(colors), {});
        out[p].to_parent = std::move(ids);
    }
    std::vector<std::vector<std::pair<vertex_id, vertex_id>>> edges(
        parts.size());
    for (const auto& e : g.edges()) {
        auto p = part_of[e.black];
        if (p != none && p == part_of[e.white])
            edges[p].emplace_back(local[e.black], local[e.white]);
    }
    for (std::size_t p = 0; p < parts.size(); ++p)
        out[p].graph =
            bipartite_graph(out[p].graph.colors(), std::span(edges[p]));
    return out;
}

inline subgraph induced_subgraph(const bipartite_graph& g, vertex_set s)
{
    std::vector<vertex_set> parts{std::move(s)};
    return std::move(induced_subgraphs(g, parts).front());
}

/**
 * Maximal classes of same-colored vertices with identical neighborhoods,
 * ordered by smallest member. In a bipartite graph two same-colored vertices
 * are never adjacent, so N(u) \ {v} = N(v) \ {u} reduces to N(u) = N(v).
 */
inline std::vector<vertex_set> twin_classes(const bipartite_graph& g)
{
    const auto n = static_cast<vertex_id>(g.order());
    std::vector<vertex_id> order(n);
    for (vertex_id v = 0; v < n; ++v)
        order[v] = v;
    auto key_less = [&](vertex_id a, vertex_id b) {
        if (g.color_of(a) != g.color_of(b))
            return g.color_of(a) < g.color_of(b);
        auto ra = g.neighbors(a), rb = g.neighbors(b);
        if (ra.size() != rb.size())
            return ra.size() < rb.size();
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(),
                                            rb.end());
    };
    std::stable_sort(order.begin(), order.end(), key_less);
    std::vector<vertex_set> classes;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || key_less(order[i - 1], order[i]))
            classes.emplace_back();
        classes.back().push_back(order[i]);
    }
    // stable_sort kept ids increasing inside each class
    std::sort(classes.begin(), classes.end(),
              [](const vertex_set& a, const vertex_set& b) {
                  return a.front() < b.front();
              });
    return classes;
}

struct matching_violation
{
    enum class kind
    {
        not_an_edge,
        shared_vertex,
        connected
    };
    kind what;
    edge first;
    edge second{};  // unused for not_an_edge
    edge link{};    // the connecting edge, for connected

    std::string describe() const
    {
        auto str = [](const edge& e) {
            return std::to_string(e.black) + " " + std::to_string(e.white);
        };
        switch (what) {
        case kind::not_an_edge:
            return "pair (" + str(first) + ") is not an edge";
        case kind::shared_vertex:
            return "pairs (" + str(first) + ") and (" + str(second) +
                   ") share a vertex";
        case kind::connected:
            break;
        }
        return "pairs (" + str(first) + ") and (" + str(second) +
               ") are connected by edge (" + str(link) + ")";
    }
};

/**
 * First violation of the induced-matching conditions, or nothing when `m`
 * is an induced matching of `g`. Runs in O(n + sum of matched degrees).
 * Pairs may be given in either endpoint order.
 */
inline std::optional<matching_violation>
find_matching_violation(const bipartite_graph& g, const induced_matching& m)
{
    using kind = matching_violation::kind;
    constexpr auto none = static_cast<std::uint32_t>(-1);
    const auto n = g.order();
    std::vector<std::uint32_t> owner(n, none);
    std::vector<edge> norm;
    norm.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        auto e = m[i];
        if (e.black >= n || e.white >= n || !g.adjacent(e.black, e.white))
            return matching_violation{kind::not_an_edge, e};
        if (g.color_of(e.black) == color::white)
            std::swap(e.black, e.white);
        for (auto v : {e.black, e.white}) {
            if (owner[v] != none)
                return matching_violation{kind::shared_vertex, norm[owner[v]],
                                          e};
            owner[v] = static_cast<std::uint32_t>(i);
        }
        norm.push_back(e);
    }
    for (std::size_t i = 0; i < norm.size(); ++i)
        for (auto v : {norm[i].black, norm[i].white})
            for (auto w : g.neighbors(v))
                if (owner[w] != none && owner[w] != i) {
                    edge link = g.color_of(v) == color::black ? edge{v, w}
                                                              : edge{w, v};
                    return matching_violation{kind::connected, norm[i],
                                              norm[owner[w]], link};
                }
    return std::nullopt;
}

inline bool is_induced_matching(const bipartite_graph& g,
                                const induced_matching& m)
{
    return !find_matching_violation(g, m).has_value();
}

} // namespace mim

#endif // MIM_GRAPH_HPP
