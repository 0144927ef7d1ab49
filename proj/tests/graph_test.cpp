#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace mim;
using namespace mim::testing;

namespace
{

constexpr auto B = color::black;
constexpr auto W = color::white;

void expect_partition(const std::vector<vertex_set>& parts, std::size_t n)
{
    std::vector<int> hits(n, 0);
    for (const auto& p : parts) {
        EXPECT_FALSE(p.empty());
        EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
        for (auto v : p)
            ++hits[v];
    }
    for (auto h : hits)
        EXPECT_EQ(h, 1);
}

} // namespace

TEST(NewGraph, SmallestEdge)
{
    auto g = new_graph(2, {B, W}, {{0, 1}});
    EXPECT_EQ(g.order(), 2u);
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g.edges()[0], (edge{0, 1}));
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(NewGraph, SingleVertex)
{
    auto g = new_graph(1, {B}, {});
    EXPECT_EQ(g.order(), 1u);
    EXPECT_EQ(g.size(), 0u);
}

TEST(NewGraph, EdgesNormalizedBlackFirst)
{
    auto g = new_graph(3, {W, B, W}, {{0, 1}, {1, 2}});
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g.edges()[0], (edge{1, 0}));
    EXPECT_EQ(g.edges()[1], (edge{1, 2}));
}

TEST(NewGraph, Errors)
{
    EXPECT_THROW(new_graph(2, {B, B}, {{0, 1}}), monochromatic_edge);
    EXPECT_THROW(new_graph(2, {B, W}, {{0, 0}}), monochromatic_edge);
    EXPECT_THROW(new_graph(2, {B, W}, {{0, 1}, {1, 0}}), duplicate_edge);
    EXPECT_THROW(new_graph(2, {B, W}, {{0, 2}}), bad_index);
    EXPECT_THROW(new_graph(3, {B, W}, {}), bad_index);
}

TEST(Bicomplement, K2BecomesEdgeless)
{
    auto g = bicomplement(new_graph(2, {B, W}, {{0, 1}}));
    EXPECT_EQ(g.size(), 0u);
    EXPECT_EQ(g.colors(), (std::vector<color>{B, W}));
}

TEST(Bicomplement, PathOnSeven)
{
    auto p7 = path(7);
    // Count black-white pairs directly: the expected edge count is those
    // pairs minus the 6 path edges.
    std::size_t pairs = 0;
    for (vertex_id u = 0; u < 7; ++u)
        for (vertex_id v = 0; v < 7; ++v)
            pairs += p7.color_of(u) == B && p7.color_of(v) == W;
    ASSERT_EQ(pairs, 12u);
    auto co = bicomplement(p7);
    EXPECT_EQ(co.size(), 6u);
    for (vertex_id u = 0; u < 7; ++u)
        for (vertex_id v = 0; v < 7; ++v)
            if (p7.color_of(u) != p7.color_of(v)) {
                EXPECT_NE(p7.adjacent(u, v), co.adjacent(u, v));
            }
}

TEST(Bicomplement, InvolutionAndPairCount)
{
    rng r(7);
    for (int t = 0; t < 200; ++t) {
        auto g = random_bipartite(r, r.between(0, 14), 0.4);
        auto co = bicomplement(g);
        EXPECT_EQ(bicomplement(co), g);
        EXPECT_EQ(g.size() + co.size(), g.count(B) * g.count(W));
    }
}

TEST(ConnectedComponents, Examples)
{
    EXPECT_EQ(connected_components(two_k2()),
              (std::vector<vertex_set>{{0, 1}, {2, 3}}));
    auto p7 = connected_components(path(7));
    ASSERT_EQ(p7.size(), 1u);
    EXPECT_EQ(p7[0].size(), 7u);
    EXPECT_EQ(connected_components(new_graph(3, {B, W, B}, {})),
              (std::vector<vertex_set>{{0}, {1}, {2}}));
}

TEST(ConnectedComponents, PartitionOrderedBySmallestId)
{
    rng r(11);
    for (int t = 0; t < 100; ++t) {
        auto g = random_bipartite(r, r.between(1, 20), 0.15);
        auto comps = connected_components(g);
        expect_partition(comps, g.order());
        for (std::size_t i = 1; i < comps.size(); ++i)
            EXPECT_LT(comps[i - 1].front(), comps[i].front());
        // no edge leaves a component
        std::vector<std::size_t> comp_of(g.order());
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (auto v : comps[c])
                comp_of[v] = c;
        for (const auto& e : g.edges())
            EXPECT_EQ(comp_of[e.black], comp_of[e.white]);
    }
}

TEST(InducedSubgraph, Examples)
{
    auto k2 = new_graph(2, {B, W}, {{0, 1}});
    auto one = induced_subgraph(k2, {0});
    EXPECT_EQ(one.graph, new_graph(1, {B}, {}));
    EXPECT_EQ(one.to_parent, (std::vector<vertex_id>{0}));

    auto p7 = path(7);
    auto all = induced_subgraph(p7, {0, 1, 2, 3, 4, 5, 6});
    EXPECT_EQ(all.graph, p7);

    // v1, v2, v4, v5 in path order: edges v1v2 and v4v5 only.
    auto sub = induced_subgraph(p7, {0, 1, 3, 4});
    EXPECT_EQ(sub.graph.size(), 2u);
    EXPECT_EQ(connected_components(sub.graph).size(), 2u);
    EXPECT_EQ(sub.to_parent, (std::vector<vertex_id>{0, 1, 3, 4}));
    EXPECT_TRUE(sub.graph.adjacent(0, 1));
    EXPECT_TRUE(sub.graph.adjacent(2, 3));

    EXPECT_THROW(induced_subgraph(p7, {0, 7}), bad_index);
    EXPECT_THROW(induced_subgraph(p7, {2, 2}), bad_index);
}

TEST(TwinClasses, CompleteBipartite)
{
    EXPECT_EQ(twin_classes(complete(2, 2)),
              (std::vector<vertex_set>{{0, 1}, {2, 3}}));
}

TEST(TwinClasses, PathHasSingletons)
{
    auto classes = twin_classes(path(7));
    EXPECT_EQ(classes.size(), 7u);
    for (vertex_id v = 0; v < 7; ++v)
        EXPECT_EQ(classes[v], vertex_set{v});
}

TEST(TwinClasses, ExtendedPathRecoversClasses)
{
    const std::vector<std::size_t> sizes{2, 1, 1, 1, 1, 1, 2};
    auto g = gen_shape(prime_form::ep, 7, sizes);
    EXPECT_EQ(twin_classes(g),
              (std::vector<vertex_set>{{0, 1}, {2}, {3}, {4}, {5}, {6}, {7, 8}}));
}

TEST(TwinClasses, MatchesPairwiseNeighborhoodComparison)
{
    rng r(3);
    for (int t = 0; t < 100; ++t) {
        auto g = random_bipartite(r, r.between(1, 12), 0.3);
        auto classes = twin_classes(g);
        expect_partition(classes, g.order());
        std::vector<std::size_t> cls(g.order());
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto v : classes[c])
                cls[v] = c;
        for (vertex_id u = 0; u < g.order(); ++u)
            for (vertex_id v = 0; v < g.order(); ++v) {
                bool twins = g.color_of(u) == g.color_of(v);
                for (vertex_id w = 0; w < g.order() && twins; ++w)
                    if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w))
                        twins = false;
                EXPECT_EQ(twins, cls[u] == cls[v]) << u << " " << v;
            }
    }
}

TEST(IsInducedMatching, PathExamples)
{
    auto p7 = path(7);
    EXPECT_TRUE(is_induced_matching(p7, {{0, 1}, {4, 3}}));
    EXPECT_FALSE(is_induced_matching(p7, {{0, 1}, {2, 3}}));
    EXPECT_TRUE(is_induced_matching(p7, {}));
    EXPECT_TRUE(is_induced_matching(complete(3, 3), {}));
}

TEST(IsInducedMatching, ReportsViolation)
{
    auto p7 = path(7);
    auto bad = find_matching_violation(p7, {{0, 1}, {2, 3}});
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->what, matching_violation::kind::connected);
    EXPECT_EQ(bad->link, (edge{2, 1}));

    bad = find_matching_violation(p7, {{0, 3}});
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->what, matching_violation::kind::not_an_edge);

    bad = find_matching_violation(p7, {{0, 1}, {2, 1}});
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->what, matching_violation::kind::shared_vertex);
}

TEST(IsInducedMatching, AgreesWithPairwiseCheck)
{
    rng r(5);
    for (int t = 0; t < 500; ++t) {
        auto g = random_bipartite(r, r.between(2, 12), 0.35);
        if (g.size() == 0)
            continue;
        induced_matching m;
        const auto tries = r.between(1, 4);
        for (std::size_t i = 0; i < tries; ++i) {
            auto e = g.edges()[r.below(g.size())];
            if (r.chance(0.5))
                std::swap(e.black, e.white);
            m.push_back(e);
        }
        // Reversed pairs are accepted as long as the pair is an edge.
        induced_matching norm = m;
        for (auto& e : norm)
            if (g.color_of(e.black) == W)
                std::swap(e.black, e.white);
        EXPECT_EQ(is_induced_matching(g, m), induced_by_pairs(g, norm));
    }
}
