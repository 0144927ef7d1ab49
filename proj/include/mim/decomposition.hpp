#ifndef MIM_DECOMPOSITION_HPP
#define MIM_DECOMPOSITION_HPP

#include <mim/errors.hpp>
#include <mim/graph.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mim
{

enum class node_kind : std::uint8_t
{
    leaf,
    parallel,
    series,
    ks,
    prime,
    pprime
};

// The four admissible prime pieces: extended path, extended cycle, and the
// bicomplements of each.
enum class prime_form : std::uint8_t
{
    ep,
    ec,
    epbip,
    ecbip
};

constexpr const char* form_name(prime_form f) noexcept
{
    switch (f) {
    case prime_form::ep:
        return "EP";
    case prime_form::ec:
        return "EC";
    case prime_form::epbip:
        return "EPBIP";
    case prime_form::ecbip:
        return "ECBIP";
    }
    return "?";
}

constexpr bool is_cyclic(prime_form f) noexcept
{
    return f == prime_form::ec || f == prime_form::ecbip;
}

constexpr bool is_bicomplemented(prime_form f) noexcept
{
    return f == prime_form::epbip || f == prime_form::ecbip;
}

inline constexpr std::size_t min_prime_classes = 7;

struct prime_shape
{
    prime_form form = prime_form::ep;
    // Monochromatic classes in path/cycle order.
    std::vector<vertex_set> classes;

    std::size_t k() const noexcept { return classes.size(); }
};

using node_id = std::uint32_t;

struct decomp_node
{
    node_kind kind = node_kind::leaf;
    prime_form form = prime_form::ep; // prime nodes only
    vertex_id vertex = 0;             // leaves only
    std::uint32_t first_leaf = 0;
    std::uint32_t leaf_count = 0;
    std::vector<node_id> children;
};

/**
 * Rooted ordered decomposition tree stored as a pre-order arena: node 0 is
 * the root and every child has a larger id than its parent, so a reverse
 * scan of the ids is a post-order. The leaves below any node occupy one
 * contiguous range of leaf_order().
 */
class decomp_tree
{
public:
    bool empty() const noexcept { return nodes_.empty(); }
    std::size_t size() const noexcept { return nodes_.size(); }
    node_id root() const noexcept { return 0; }

    const decomp_node& node(node_id id) const { return nodes_[id]; }
    std::span<const decomp_node> nodes() const noexcept { return nodes_; }
    std::span<const vertex_id> leaf_order() const noexcept
    {
        return leaf_order_;
    }

    std::span<const vertex_id> vertices(node_id id) const
    {
        const auto& n = nodes_[id];
        return {leaf_order_.data() + n.first_leaf, n.leaf_count};
    }

    prime_shape shape(node_id id) const
    {
        const auto& n = nodes_[id];
        prime_shape s{n.form, {}};
        s.classes.reserve(n.children.size());
        for (auto c : n.children) {
            auto vs = vertices(c);
            vertex_set cls(vs.begin(), vs.end());
            std::sort(cls.begin(), cls.end());
            s.classes.push_back(std::move(cls));
        }
        return s;
    }

    // Top-down construction. Children must be opened after their parent and
    // a node closed after all of its children.
    node_id open(node_kind kind, std::optional<node_id> parent,
                 prime_form form = prime_form::ep)
    {
        const auto id = static_cast<node_id>(nodes_.size());
        decomp_node n;
        n.kind = kind;
        n.form = form;
        n.first_leaf = static_cast<std::uint32_t>(leaf_order_.size());
        nodes_.push_back(std::move(n));
        if (parent)
            nodes_[*parent].children.push_back(id);
        return id;
    }

    void close(node_id id)
    {
        auto& n = nodes_[id];
        n.leaf_count =
            static_cast<std::uint32_t>(leaf_order_.size()) - n.first_leaf;
    }

    node_id add_leaf(std::optional<node_id> parent, vertex_id v)
    {
        auto id = open(node_kind::leaf, parent);
        nodes_[id].vertex = v;
        leaf_order_.push_back(v);
        close(id);
        return id;
    }

    // Renames every leaf v to perm[v].
    void relabel(std::span<const vertex_id> perm)
    {
        for (auto& v : leaf_order_)
            v = perm[v];
        for (auto& n : nodes_)
            if (n.kind == node_kind::leaf)
                n.vertex = perm[n.vertex];
    }

private:
    std::vector<decomp_node> nodes_;
    std::vector<vertex_id> leaf_order_;
};

/**
 * Structural check of a tree against a coloring: arity, leaf ranges, leaf
 * coverage of 0..n-1, P' placement, and class coloring of prime nodes.
 * Throws malformed_tree.
 */
inline void validate_tree(const decomp_tree& t, std::span<const color> colors)
{
    auto fail = [](node_id id, const std::string& why) {
        throw malformed_tree("node " + std::to_string(id) + ": " + why);
    };
    if (t.empty())
        throw malformed_tree("empty tree");
    const auto n = colors.size();
    if (t.leaf_order().size() != n)
        throw malformed_tree("tree has " +
                             std::to_string(t.leaf_order().size()) +
                             " leaves for " + std::to_string(n) + " vertices");
    std::vector<bool> seen(n, false);
    for (auto v : t.leaf_order()) {
        if (v >= n || seen[v])
            throw malformed_tree("leaf " + std::to_string(v) +
                                 " out of range or repeated");
        seen[v] = true;
    }
    std::vector<std::uint8_t> parents(t.size(), 0);
    if (t.node(0).first_leaf != 0 || t.node(0).leaf_count != n)
        fail(0, "root does not span all leaves");
    for (node_id id = 0; id < t.size(); ++id) {
        const auto& nd = t.node(id);
        if (nd.kind == node_kind::leaf) {
            if (!nd.children.empty())
                fail(id, "leaf with children");
            if (nd.leaf_count != 1 || t.leaf_order()[nd.first_leaf] != nd.vertex)
                fail(id, "leaf range mismatch");
            continue;
        }
        if (nd.children.size() < 2)
            fail(id, "internal node with fewer than 2 children");
        auto next = nd.first_leaf;
        for (auto c : nd.children) {
            if (c <= id || c >= t.size())
                fail(id, "child ids must follow the parent in pre-order");
            if (++parents[c] > 1)
                fail(c, "node has several parents");
            const auto& ch = t.node(c);
            if (ch.first_leaf != next)
                fail(id, "children leaf ranges are not contiguous");
            next += ch.leaf_count;
            if (ch.kind == node_kind::pprime && nd.kind != node_kind::prime)
                fail(c, "P' node outside a prime node");
            if (nd.kind == node_kind::pprime && ch.kind != node_kind::leaf)
                fail(id, "P' node with a non-leaf child");
            if (nd.kind == node_kind::prime && ch.kind != node_kind::leaf &&
                ch.kind != node_kind::pprime)
                fail(id, "prime node child is neither a leaf nor P'");
        }
        if (next != nd.first_leaf + nd.leaf_count)
            fail(id, "children do not cover the node's leaves");
        auto class_color = [&](node_id c) {
            auto vs = t.vertices(c);
            auto col = colors[vs.front()];
            for (auto v : vs)
                if (colors[v] != col)
                    fail(c, "class is not monochromatic");
            return col;
        };
        if (nd.kind == node_kind::pprime)
            class_color(id);
        if (nd.kind == node_kind::prime) {
            const auto k = nd.children.size();
            if (k < min_prime_classes)
                fail(id, "prime node with fewer than 7 classes");
            for (std::size_t i = 0; i + 1 < k; ++i)
                if (class_color(nd.children[i]) ==
                    class_color(nd.children[i + 1]))
                    fail(id, "consecutive classes share a color");
            if (is_cyclic(nd.form) &&
                class_color(nd.children.front()) ==
                    class_color(nd.children.back()))
                fail(id, "cycle closes between two classes of one color");
        }
    }
    for (node_id id = 1; id < t.size(); ++id)
        if (parents[id] != 1)
            fail(id, "unreachable node");
}

// Shape rule on a valid tree: no leaf directly under P or S. Returns a
// description of the first violation.
inline std::optional<std::string> shape_rule_violation(const decomp_tree& t)
{
    for (node_id id = 0; id < t.size(); ++id) {
        const auto& nd = t.node(id);
        if (nd.kind != node_kind::parallel && nd.kind != node_kind::series)
            continue;
        for (auto c : nd.children)
            if (t.node(c).kind == node_kind::leaf)
                return "leaf " + std::to_string(t.node(c).vertex) +
                       " is a child of " +
                       (nd.kind == node_kind::parallel ? "P" : "S") +
                       " node " + std::to_string(id);
    }
    return std::nullopt;
}

/**
 * True iff (V1, V2) with V1 = {v : in_first[v]} is an associated partition:
 * both sides non-empty, every black of V1 adjacent to every white of V2, no
 * white of V1 adjacent to a black of V2.
 */
inline bool is_associated_partition(const bipartite_graph& g,
                                    const std::vector<bool>& in_first)
{
    const auto n = static_cast<vertex_id>(g.order());
    std::size_t first = 0, whites_second = 0;
    for (vertex_id v = 0; v < n; ++v) {
        first += in_first[v];
        whites_second += !in_first[v] && g.color_of(v) == color::white;
    }
    if (first == 0 || first == n)
        return false;
    for (vertex_id v = 0; v < n; ++v) {
        if (!in_first[v])
            continue;
        std::size_t across = 0;
        for (auto w : g.neighbors(v))
            across += !in_first[w];
        if (g.color_of(v) == color::black ? across != whites_second
                                          : across != 0)
            return false;
    }
    return true;
}

namespace detail
{

/**
 * Depth-first search over the implication digraph of a bipartite graph
 * without materializing it. Vertices of color `cross` have arcs to every
 * opposite-colored non-neighbor; the other color has arcs to its neighbors.
 * With cross = black this is the K+S implication digraph (b -> w for a
 * non-edge, w -> b for an edge); cross = white gives its transpose.
 *
 * Unvisited vertices of each color sit in a next-alive union-find over the
 * sorted color list, and every cross-colored frame keeps a cursor into that
 * list plus a cursor into its own sorted adjacency row, so each skipped
 * neighbor is paid for once. Total cost is O((n + m) * alpha(n)).
 */
class implication_search
{
public:
    explicit implication_search(const bipartite_graph& g)
        : g_(g), pos_(g.order()), visited_(g.order(), false)
    {
        for (vertex_id v = 0; v < g.order(); ++v) {
            auto c = index(g.color_of(v));
            pos_[v] = static_cast<std::uint32_t>(list_[c].size());
            list_[c].push_back(v);
        }
        reset();
    }

    void reset()
    {
        std::fill(visited_.begin(), visited_.end(), false);
        for (int c = 0; c < 2; ++c) {
            next_[c].resize(list_[c].size() + 1);
            for (std::uint32_t i = 0; i < next_[c].size(); ++i)
                next_[c][i] = i;
        }
    }

    bool visited(vertex_id v) const { return visited_[v]; }

    // Visits everything reachable from s; on_finish(v) fires in post-order.
    template <typename OnFinish>
    void run(vertex_id s, color cross, OnFinish&& on_finish)
    {
        struct frame
        {
            vertex_id v;
            std::uint32_t a; // list or adjacency cursor
            std::uint32_t b; // adjacency cursor for the merge walk
        };
        std::vector<frame> stack;
        mark(s);
        stack.push_back({s, 0, 0});
        while (!stack.empty()) {
            auto& f = stack.back();
            const auto row = g_.neighbors(f.v);
            std::optional<vertex_id> step;
            if (g_.color_of(f.v) == cross) {
                const auto oc = index(opposite(cross));
                const auto& other = list_[oc];
                while (true) {
                    auto j = find(oc, f.a);
                    if (j == other.size())
                        break;
                    auto w = other[j];
                    f.a = j + 1;
                    while (f.b < row.size() && row[f.b] < w)
                        ++f.b;
                    if (f.b < row.size() && row[f.b] == w)
                        continue;
                    step = w;
                    break;
                }
            }
            else {
                while (f.a < row.size()) {
                    auto w = row[f.a++];
                    if (!visited_[w]) {
                        step = w;
                        break;
                    }
                }
            }
            if (step) {
                mark(*step);
                stack.push_back({*step, 0, 0});
            }
            else {
                on_finish(f.v);
                stack.pop_back();
            }
        }
    }

private:
    static int index(color c) { return c == color::black ? 0 : 1; }

    std::uint32_t find(int c, std::uint32_t i)
    {
        auto& nx = next_[c];
        while (nx[i] != i) {
            nx[i] = nx[nx[i]];
            i = nx[i];
        }
        return i;
    }

    void mark(vertex_id v)
    {
        visited_[v] = true;
        auto c = index(g_.color_of(v));
        next_[c][pos_[v]] = pos_[v] + 1;
    }

    const bipartite_graph& g_;
    std::array<std::vector<vertex_id>, 2> list_;
    std::array<std::vector<std::uint32_t>, 2> next_;
    std::vector<std::uint32_t> pos_;
    std::vector<bool> visited_;
};

inline bool same_neighborhood(const bipartite_graph& g, vertex_id u,
                              vertex_id v)
{
    auto a = g.neighbors(u), b = g.neighbors(v);
    return g.color_of(u) == g.color_of(v) &&
           std::equal(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace detail

/**
 * K+S decomposition (V1, ..., Vk), or nothing when the graph admits no
 * associated partition.
 *
 * A prefix V1 is valid exactly when it is closed under the implication
 * digraph D (b -> w for every non-edge, w -> b for every edge), so the parts
 * are the strongly connected components of D listed sinks first. Two
 * components are incomparable only when both are single same-colored
 * vertices with equal neighborhoods; such runs are contiguous in any
 * topological order and are sorted by id.
 */
inline std::optional<std::vector<vertex_set>>
ks_split(const bipartite_graph& g)
{
    const auto n = static_cast<vertex_id>(g.order());
    if (n < 2)
        throw too_small("K+S split needs at least 2 vertices");

    detail::implication_search search(g);
    std::vector<vertex_id> finish;
    finish.reserve(n);
    for (vertex_id s = 0; s < n; ++s)
        if (!search.visited(s))
            search.run(s, color::black,
                       [&](vertex_id v) { finish.push_back(v); });

    // Second pass on the transpose yields components sources-first.
    search.reset();
    std::vector<vertex_set> parts;
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
        if (search.visited(*it))
            continue;
        vertex_set comp;
        search.run(*it, color::white,
                   [&](vertex_id v) { comp.push_back(v); });
        std::sort(comp.begin(), comp.end());
        parts.push_back(std::move(comp));
    }
    if (parts.size() == 1)
        return std::nullopt;
    std::reverse(parts.begin(), parts.end());

    for (std::size_t i = 0; i < parts.size();) {
        auto j = i + 1;
        if (parts[i].size() == 1)
            while (j < parts.size() && parts[j].size() == 1 &&
                   detail::same_neighborhood(g, parts[j - 1][0], parts[j][0]))
                ++j;
        std::sort(parts.begin() + static_cast<std::ptrdiff_t>(i),
                  parts.begin() + static_cast<std::ptrdiff_t>(j),
                  [](const vertex_set& a, const vertex_set& b) {
                      return a.front() < b.front();
                  });
        i = j;
    }
    return parts;
}

/**
 * Connected components of the bicomplement, computed on g directly in
 * O(n + m). Ordered by smallest vertex, each sorted.
 */
inline std::vector<vertex_set> co_components(const bipartite_graph& g)
{
    const auto n = static_cast<vertex_id>(g.order());
    std::array<std::vector<vertex_id>, 2> remaining;
    for (vertex_id v = 0; v < n; ++v)
        remaining[g.color_of(v) == color::black ? 0 : 1].push_back(v);
    std::vector<bool> visited(n, false);
    std::vector<vertex_id> stamp(n, n);
    std::vector<vertex_set> comps;
    std::vector<vertex_id> queue, keep;
    for (vertex_id s = 0; s < n; ++s) {
        if (visited[s])
            continue;
        visited[s] = true;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto u = queue[head];
            for (auto w : g.neighbors(u))
                stamp[w] = u;
            auto& pool =
                remaining[g.color_of(u) == color::black ? 1 : 0];
            keep.clear();
            for (auto w : pool) {
                if (visited[w])
                    continue;
                if (stamp[w] == u) {
                    keep.push_back(w);
                }
                else {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
            pool.swap(keep);
        }
        std::sort(queue.begin(), queue.end());
        comps.push_back(queue);
    }
    return comps;
}

namespace detail
{

// Orders the vertices of `adj` along a chordless path or cycle on all of
// them, or returns nothing. Paths start at the end with the smaller index;
// cycles start at 0 and head toward the smaller-indexed neighbor. Indices
// are class indices sorted by smallest member, so index order is id order.
inline std::optional<std::pair<std::vector<std::uint32_t>, bool>>
trace_path_or_cycle(const std::vector<std::vector<std::uint32_t>>& adj)
{
    const auto k = static_cast<std::uint32_t>(adj.size());
    std::size_t deg_sum = 0;
    std::vector<std::uint32_t> ends;
    for (std::uint32_t v = 0; v < k; ++v) {
        const auto d = adj[v].size();
        if (d == 0 || d > 2)
            return std::nullopt;
        if (d == 1)
            ends.push_back(v);
        deg_sum += d;
    }
    bool cycle;
    std::uint32_t start, toward;
    if (ends.empty() && deg_sum == 2 * std::size_t{k}) {
        cycle = true;
        start = 0;
        toward = std::min(adj[0][0], adj[0][1]);
    }
    else if (ends.size() == 2 && deg_sum == 2 * std::size_t{k} - 2) {
        cycle = false;
        start = ends[0]; // ends are discovered in index order
        toward = adj[start][0];
    }
    else {
        return std::nullopt;
    }
    std::vector<std::uint32_t> order{start};
    std::vector<bool> seen(k, false);
    seen[start] = true;
    auto prev = start, cur = toward;
    while (!seen[cur]) {
        seen[cur] = true;
        order.push_back(cur);
        auto next = std::find_if(adj[cur].begin(), adj[cur].end(),
                                 [&](std::uint32_t w) { return w != prev; });
        if (next == adj[cur].end())
            break;
        prev = cur;
        cur = *next;
    }
    if (order.size() != k)
        return std::nullopt;
    return std::make_pair(std::move(order), cycle);
}

} // namespace detail

/**
 * Identifies a prime piece as EP, EC, EPBIP, or ECBIP through its quotient
 * by twin classes. Throws not_star123_free with every vertex of g when the
 * quotient, or its bicomplement, is not a chordless path or cycle on at
 * least 7 classes.
 */
inline prime_shape classify_prime(const bipartite_graph& g)
{
    const auto n = static_cast<vertex_id>(g.order());
    auto reject = [&]() -> not_star123_free {
        std::vector<vertex_id> all(n);
        for (vertex_id v = 0; v < n; ++v)
            all[v] = v;
        return not_star123_free(std::move(all));
    };

    auto classes = twin_classes(g);
    const auto k = static_cast<std::uint32_t>(classes.size());
    if (k < min_prime_classes)
        throw reject();

    std::vector<std::uint32_t> class_of(n);
    for (std::uint32_t c = 0; c < k; ++c)
        for (auto v : classes[c])
            class_of[v] = c;
    std::vector<std::vector<std::uint32_t>> quotient(k);
    std::size_t quotient_edges = 0, blacks = 0;
    for (std::uint32_t c = 0; c < k; ++c) {
        const auto rep = classes[c].front();
        blacks += g.color_of(rep) == color::black;
        for (auto w : g.neighbors(rep))
            quotient[c].push_back(class_of[w]);
        std::sort(quotient[c].begin(), quotient[c].end());
        quotient[c].erase(std::unique(quotient[c].begin(), quotient[c].end()),
                          quotient[c].end());
        quotient_edges += quotient[c].size();
    }
    quotient_edges /= 2;

    auto build = [&](prime_form form,
                     const std::vector<std::uint32_t>& order) {
        prime_shape s{form, {}};
        s.classes.reserve(k);
        for (auto c : order)
            s.classes.push_back(std::move(classes[c]));
        return s;
    };

    if (auto traced = detail::trace_path_or_cycle(quotient))
        return build(traced->second ? prime_form::ec : prime_form::ep,
                     traced->first);

    const auto pairs = blacks * (k - blacks);
    if (pairs - quotient_edges > k)
        throw reject();
    std::vector<std::vector<std::uint32_t>> co(k);
    for (std::uint32_t c = 0; c < k; ++c) {
        const auto col = g.color_of(classes[c].front());
        auto it = quotient[c].begin();
        for (std::uint32_t d = 0; d < k; ++d) {
            if (g.color_of(classes[d].front()) == col)
                continue;
            while (it != quotient[c].end() && *it < d)
                ++it;
            if (it == quotient[c].end() || *it != d)
                co[c].push_back(d);
        }
    }
    if (auto traced = detail::trace_path_or_cycle(co))
        return build(traced->second ? prime_form::ecbip : prime_form::epbip,
                     traced->first);
    throw reject();
}

namespace detail
{

class decomposer
{
public:
    explicit decomposer(decomp_tree& tree) : tree_(tree) {}

    void build(const bipartite_graph& h, std::span<const vertex_id> ids,
               std::optional<node_id> parent, bool ks_checked)
    {
        if (h.order() == 1) {
            tree_.add_leaf(parent, ids[0]);
            return;
        }
        if (!ks_checked)
            if (auto parts = ks_split(h)) {
                auto node = tree_.open(node_kind::ks, parent);
                recurse(h, ids, *parts, node, true);
                tree_.close(node);
                return;
            }
        if (auto comps = connected_components(h); comps.size() > 1) {
            auto node = tree_.open(node_kind::parallel, parent);
            recurse(h, ids, comps, node, false);
            tree_.close(node);
            return;
        }
        if (auto comps = co_components(h); comps.size() > 1) {
            auto node = tree_.open(node_kind::series, parent);
            recurse(h, ids, comps, node, false);
            tree_.close(node);
            return;
        }
        prime_shape shape;
        try {
            shape = classify_prime(h);
        }
        catch (const not_star123_free&) {
            throw not_star123_free(
                std::vector<vertex_id>(ids.begin(), ids.end()));
        }
        auto node = tree_.open(node_kind::prime, parent, shape.form);
        for (const auto& cls : shape.classes) {
            if (cls.size() == 1) {
                tree_.add_leaf(node, ids[cls[0]]);
                continue;
            }
            auto pp = tree_.open(node_kind::pprime, node);
            for (auto v : cls)
                tree_.add_leaf(pp, ids[v]);
            tree_.close(pp);
        }
        tree_.close(node);
    }

private:
    void recurse(const bipartite_graph& h, std::span<const vertex_id> ids,
                 std::span<const vertex_set> parts, node_id node,
                 bool ks_checked)
    {
        auto subs = induced_subgraphs(h, parts);
        for (const auto& sub : subs) {
            if (sub.to_parent.size() == 1) {
                tree_.add_leaf(node, ids[sub.to_parent[0]]);
                continue;
            }
            std::vector<vertex_id> sub_ids(sub.to_parent.size());
            for (std::size_t i = 0; i < sub_ids.size(); ++i)
                sub_ids[i] = ids[sub.to_parent[i]];
            build(sub.graph, sub_ids, node, ks_checked);
        }
    }

    decomp_tree& tree_;
};

} // namespace detail

/**
 * Canonical decomposition tree. Splits are tried in the order K+S, parallel,
 * series; what remains is classified as a prime piece. Parts of a K+S split
 * are K+S-indecomposable, so their recursion starts at the parallel test.
 * Throws not_star123_free carrying the vertices of the first inadmissible
 * prime piece.
 */
inline decomp_tree decompose(const bipartite_graph& g)
{
    decomp_tree tree;
    if (g.order() == 0)
        return tree;
    std::vector<vertex_id> ids(g.order());
    for (vertex_id v = 0; v < ids.size(); ++v)
        ids[v] = v;
    detail::decomposer(tree).build(g, ids, std::nullopt, false);
    return tree;
}

/**
 * The graph a tree encodes. P is a disjoint union; S adds every black-white
 * pair across distinct children; K+S with parts V1..Vk adds black(Vi) x
 * white(Vj) for i < j; prime nodes join consecutive classes (and the ends
 * of a cycle), or every other bichromatic class pair for the bicomplemented
 * forms.
 */
inline bipartite_graph reconstruct(const decomp_tree& t,
                                   std::span<const color> colors)
{
    validate_tree(t, colors);
    std::vector<std::pair<vertex_id, vertex_id>> out;
    auto split = [&](node_id c, std::vector<vertex_id>& b,
                     std::vector<vertex_id>& w) {
        b.clear();
        w.clear();
        for (auto v : t.vertices(c))
            (colors[v] == color::black ? b : w).push_back(v);
    };
    auto join = [&](std::span<const vertex_id> bs,
                    std::span<const vertex_id> ws) {
        for (auto b : bs)
            for (auto w : ws)
                out.emplace_back(b, w);
    };
    std::vector<std::vector<vertex_id>> blacks, whites;
    for (node_id id = 0; id < t.size(); ++id) {
        const auto& nd = t.node(id);
        if (nd.kind == node_kind::leaf || nd.kind == node_kind::parallel ||
            nd.kind == node_kind::pprime)
            continue;
        const auto k = nd.children.size();
        blacks.resize(k);
        whites.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            split(nd.children[i], blacks[i], whites[i]);
        switch (nd.kind) {
        case node_kind::series:
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (i != j)
                        join(blacks[i], whites[j]);
            break;
        case node_kind::ks:
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    join(blacks[i], whites[j]);
            break;
        case node_kind::prime: {
            auto consecutive = [&](std::size_t i, std::size_t j) {
                return j == i + 1 || (is_cyclic(nd.form) && i == 0 &&
                                      j == k - 1);
            };
            const bool bip = is_bicomplemented(nd.form);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    if (consecutive(i, j) != bip) {
                        join(blacks[i], whites[j]);
                        join(blacks[j], whites[i]);
                    }
            break;
        }
        default:
            break;
        }
    }
    return bipartite_graph(std::vector<color>(colors.begin(), colors.end()),
                           out);
}

} // namespace mim

#endif // MIM_DECOMPOSITION_HPP
