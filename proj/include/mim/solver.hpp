#ifndef MIM_SOLVER_HPP
#define MIM_SOLVER_HPP

#include <mim/decomposition.hpp>
#include <mim/errors.hpp>
#include <mim/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace mim
{

/**
 * Per-node state of the bottom-up pass.
 *
 * The matching itself is kept symbolically so a node never copies its
 * children's edges: it is either a short explicit list, the union of all
 * children, or the matching of one adopted child. materialize() expands it.
 * `aux_pair` is a non-adjacent black/white pair, kept for nodes whose
 * matching has at most one edge. `black_rep` / `white_rep` are some vertex
 * of each color below the node.
 */
struct node_annotation
{
    enum class witness : std::uint8_t
    {
        empty,
        pairs,
        children,
        child
    };

    std::size_t size = 0;
    witness source = witness::empty;
    std::vector<edge> pairs;
    std::size_t adopted = 0;
    std::optional<edge> aux_pair;
    std::optional<vertex_id> black_rep;
    std::optional<vertex_id> white_rep;
};

using annotation_refs = std::span<const node_annotation* const>;

struct solve_stats
{
    std::size_t nodes = 0;
    std::size_t child_steps = 0; // children visited across all combines
    std::size_t emitted = 0;     // matching edges written by materialize
};

namespace detail
{

inline void inherit_reps(node_annotation& out, annotation_refs children)
{
    for (const auto* c : children) {
        if (!out.black_rep)
            out.black_rep = c->black_rep;
        if (!out.white_rep)
            out.white_rep = c->white_rep;
    }
}

inline std::size_t best_child(annotation_refs children,
                              std::span<const bool> skip = {})
{
    std::size_t best = children.size();
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (!skip.empty() && skip[i])
            continue;
        if (best == children.size() || children[i]->size > children[best]->size)
            best = i;
    }
    return best;
}

inline void adopt(node_annotation& out, annotation_refs children,
                  std::size_t i)
{
    out.size = children[i]->size;
    out.source = out.size == 0 ? node_annotation::witness::empty
                               : node_annotation::witness::child;
    out.adopted = i;
}

inline std::vector<const node_annotation*>
refs(std::span<const node_annotation> children)
{
    std::vector<const node_annotation*> r;
    r.reserve(children.size());
    for (const auto& c : children)
        r.push_back(&c);
    return r;
}

} // namespace detail

inline node_annotation annotate_vertex(vertex_id v, color c)
{
    node_annotation a;
    (c == color::black ? a.black_rep : a.white_rep) = v;
    return a;
}

// P' node: a monochromatic class, no edges.
inline node_annotation annotate_class(std::span<const vertex_id> members,
                                      color c)
{
    return annotate_vertex(*std::min_element(members.begin(), members.end()),
                           c);
}

// Disjoint union: the children's matchings side by side.
inline node_annotation combine_P(annotation_refs children)
{
    node_annotation out;
    for (const auto* c : children)
        out.size += c->size;
    if (out.size > 0)
        out.source = node_annotation::witness::children;
    detail::inherit_reps(out, children);
    if (out.size > 1)
        return out;
    for (const auto* c : children)
        if (c->aux_pair) {
            out.aux_pair = c->aux_pair;
            return out;
        }
    // Any black and white taken from different children are non-adjacent.
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (!children[i]->black_rep)
            continue;
        for (std::size_t j = 0; j < children.size(); ++j)
            if (j != i && children[j]->white_rep) {
                out.aux_pair = edge{*children[i]->black_rep,
                                    *children[j]->white_rep};
                return out;
            }
    }
    return out;
}

/**
 * Series node. Every black-white pair across distinct children is an edge,
 * so two aux pairs (b1, w1), (b2, w2) from different children give the
 * induced matching {b1 w2, b2 w1}; no induced matching using two children
 * can be larger. Result size is max(2, best child).
 */
inline node_annotation combine_S(annotation_refs children)
{
    node_annotation out;
    detail::inherit_reps(out, children);
    const auto best = detail::best_child(children);
    if (children[best]->size >= 2) {
        detail::adopt(out, children, best);
        return out;
    }
    if (children.size() < 2 || !children[0]->aux_pair ||
        !children[1]->aux_pair)
        throw missing_aux_pair(
            "series node child with at most one matching edge has no "
            "non-adjacent black/white pair");
    const auto first = *children[0]->aux_pair;
    const auto second = *children[1]->aux_pair;
    out.size = 2;
    out.source = node_annotation::witness::pairs;
    out.pairs = {edge{first.black, second.white},
                 edge{second.black, first.white}};
    return out;
}

/**
 * K+S node with children in K+S order. For i < j every black of part i is
 * adjacent to every white of part j and no white of part i is adjacent to a
 * black of part j. With only single-vertex parts the node has at most one
 * matching edge; otherwise the best non-vertex child wins.
 */
inline node_annotation combine_KS(annotation_refs children,
                                  std::span<const bool> is_vertex)
{
    node_annotation out;
    detail::inherit_reps(out, children);
    const bool all_vertices =
        std::all_of(is_vertex.begin(), is_vertex.end(),
                    [](bool b) { return b; });
    if (all_vertices) {
        for (std::size_t i = 0; i < children.size() && out.size == 0; ++i) {
            if (!children[i]->black_rep)
                continue;
            for (std::size_t j = i + 1; j < children.size(); ++j)
                if (children[j]->white_rep) {
                    out.size = 1;
                    out.source = node_annotation::witness::pairs;
                    out.pairs = {edge{*children[i]->black_rep,
                                      *children[j]->white_rep}};
                    break;
                }
        }
    }
    else {
        detail::adopt(out, children,
                      detail::best_child(children, is_vertex));
    }
    if (out.size > 1)
        return out;
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (!children[i]->white_rep)
            continue;
        for (std::size_t j = i + 1; j < children.size(); ++j)
            if (children[j]->black_rep) {
                out.aux_pair =
                    edge{*children[j]->black_rep, *children[i]->white_rep};
                return out;
            }
        break;
    }
    for (const auto* c : children)
        if (c->aux_pair) {
            out.aux_pair = c->aux_pair;
            break;
        }
    return out;
}

/**
 * Prime node given one representative per class, in path/cycle order.
 * Paths take v(3i-2) v(3i-1) for i <= (k+1)/3, cycles for i <= k/3; the
 * bicomplemented forms take {v1 v4, v2 v5}.
 */
inline node_annotation combine_N(prime_form form,
                                 std::span<const vertex_id> reps,
                                 const bipartite_graph& g)
{
    const auto k = reps.size();
    if (k < min_prime_classes)
        throw malformed_tree("prime node with fewer than 7 classes");
    node_annotation out;
    out.source = node_annotation::witness::pairs;
    auto emit = [&](std::size_t i, std::size_t j) {
        auto u = reps[i], v = reps[j];
        out.pairs.push_back(g.color_of(u) == color::black ? edge{u, v}
                                                          : edge{v, u});
    };
    switch (form) {
    case prime_form::ep:
    case prime_form::ec: {
        const auto count = form == prime_form::ep ? (k + 1) / 3 : k / 3;
        out.pairs.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            emit(3 * i, 3 * i + 1);
        break;
    }
    case prime_form::epbip:
    case prime_form::ecbip:
        emit(0, 3);
        emit(1, 4);
        break;
    }
    out.size = out.pairs.size();
    for (auto v : reps) {
        auto& rep = g.color_of(v) == color::black ? out.black_rep
                                                  : out.white_rep;
        if (!rep)
            rep = v;
    }
    return out;
}

inline node_annotation combine_N(const prime_shape& shape,
                                 const bipartite_graph& g)
{
    std::vector<vertex_id> reps;
    reps.reserve(shape.k());
    for (const auto& cls : shape.classes)
        reps.push_back(*std::min_element(cls.begin(), cls.end()));
    return combine_N(shape.form, reps, g);
}

inline node_annotation combine_P(std::span<const node_annotation> children)
{
    return combine_P(detail::refs(children));
}

inline node_annotation combine_S(std::span<const node_annotation> children)
{
    return combine_S(detail::refs(children));
}

inline node_annotation combine_KS(std::span<const node_annotation> children,
                                  std::span<const bool> is_vertex)
{
    return combine_KS(detail::refs(children), is_vertex);
}

/**
 * Bottom-up annotations for every node of `t`, indexed by node id. Each
 * node costs time proportional to its number of children.
 */
inline std::vector<node_annotation>
annotate(const decomp_tree& t, const bipartite_graph& g,
         solve_stats* stats = nullptr)
{
    validate_tree(t, g.colors());
    std::vector<node_annotation> ann(t.size());
    std::vector<const node_annotation*> kids;
    std::vector<vertex_id> reps;
    std::unique_ptr<bool[]> vertex_flags;
    std::size_t flag_capacity = 0;
    std::size_t steps = 0;
    for (auto id = static_cast<std::int64_t>(t.size()) - 1; id >= 0; --id) {
        const auto& nd = t.node(static_cast<node_id>(id));
        steps += nd.children.size();
        switch (nd.kind) {
        case node_kind::leaf:
            ann[id] = annotate_vertex(nd.vertex, g.color_of(nd.vertex));
            continue;
        case node_kind::pprime: {
            const auto& first = t.node(nd.children.front());
            ann[id] = annotate_class(t.vertices(static_cast<node_id>(id)),
                                     g.color_of(first.vertex));
            continue;
        }
        case node_kind::prime:
            reps.clear();
            for (auto c : nd.children)
                reps.push_back(t.node(c).kind == node_kind::leaf
                                   ? t.node(c).vertex
                                   : *(ann[c].black_rep ? ann[c].black_rep
                                                        : ann[c].white_rep));
            ann[id] = combine_N(nd.form, reps, g);
            continue;
        default:
            break;
        }
        kids.clear();
        for (auto c : nd.children)
            kids.push_back(&ann[c]);
        if (nd.kind == node_kind::parallel) {
            ann[id] = combine_P(kids);
        }
        else if (nd.kind == node_kind::series) {
            ann[id] = combine_S(kids);
        }
        else {
            const auto k = nd.children.size();
            if (k > flag_capacity) {
                flag_capacity = 2 * k;
                vertex_flags = std::make_unique<bool[]>(flag_capacity);
            }
            for (std::size_t i = 0; i < k; ++i)
                vertex_flags[i] =
                    t.node(nd.children[i]).kind == node_kind::leaf;
            ann[id] = combine_KS(
                kids, std::span<const bool>(vertex_flags.get(), k));
        }
    }
    if (stats) {
        stats->nodes += t.size();
        stats->child_steps += steps;
    }
    return ann;
}

// Expands the symbolic matching of node `from` into explicit edges.
inline induced_matching materialize(const decomp_tree& t,
                                    std::span<const node_annotation> ann,
                                    node_id from, solve_stats* stats = nullptr)
{
    induced_matching out;
    out.reserve(ann[from].size);
    std::vector<node_id> stack{from};
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        const auto& a = ann[id];
        switch (a.source) {
        case node_annotation::witness::empty:
            break;
        case node_annotation::witness::pairs:
            out.insert(out.end(), a.pairs.begin(), a.pairs.end());
            break;
        case node_annotation::witness::children: {
            const auto& ch = t.node(id).children;
            for (auto it = ch.rbegin(); it != ch.rend(); ++it)
                if (ann[*it].size > 0)
                    stack.push_back(*it);
            break;
        }
        case node_annotation::witness::child:
            stack.push_back(t.node(id).children[a.adopted]);
            break;
        }
    }
    if (stats)
        stats->emitted += out.size();
    return out;
}

/**
 * Maximum induced matching of g from its decomposition tree, in time linear
 * in the size of the tree.
 */
inline induced_matching solve(const decomp_tree& t, const bipartite_graph& g,
                              solve_stats* stats = nullptr)
{
    if (t.empty()) {
        if (g.order() != 0)
            throw malformed_tree("empty tree for a non-empty graph");
        return {};
    }
    auto ann = annotate(t, g, stats);
    return materialize(t, ann, t.root(), stats);
}

inline induced_matching max_induced_matching(const bipartite_graph& g)
{
    auto tree = decompose(g);
    auto m = solve(tree, g);
    if (auto bad = find_matching_violation(g, m))
        throw internal_invariant("solver produced an invalid matching: " +
                                 bad->describe());
    return m;
}

} // namespace mim

#endif // MIM_SOLVER_HPP
