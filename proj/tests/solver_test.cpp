#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace mim;
using namespace mim::testing;

namespace
{

constexpr auto B = color::black;
constexpr auto W = color::white;

node_annotation with_aux(vertex_id b, vertex_id w)
{
    node_annotation a;
    a.size = 1;
    a.source = node_annotation::witness::pairs;
    a.black_rep = b;
    a.white_rep = w;
    a.aux_pair = edge{b, w};
    return a;
}

std::size_t expected_prime_size(prime_form f, std::size_t k)
{
    switch (f) {
    case prime_form::ep:
        return (k + 1) / 3;
    case prime_form::ec:
        return k / 3;
    default:
        return 2;
    }
}

} // namespace

TEST(CombineP, SumsChildSizes)
{
    std::vector<node_annotation> kids(3);
    kids[0].size = 2;
    kids[1].size = 0;
    kids[2].size = 3;
    EXPECT_EQ(combine_P(kids).size, 5u);
}

TEST(CombineP, AuxFromDifferentChildren)
{
    std::vector<node_annotation> kids{annotate_vertex(0, B),
                                      annotate_vertex(1, W)};
    auto a = combine_P(kids);
    EXPECT_EQ(a.size, 0u);
    ASSERT_TRUE(a.aux_pair);
    EXPECT_EQ(*a.aux_pair, (edge{0, 1}));
}

TEST(CombineS, CrossOfTwoAuxPairs)
{
    std::vector<node_annotation> kids{with_aux(0, 1), with_aux(2, 3)};
    auto a = combine_S(kids);
    EXPECT_EQ(a.size, 2u);
    EXPECT_EQ(a.pairs, (std::vector<edge>{{0, 3}, {2, 1}}));
}

TEST(CombineS, AdoptsLargeChild)
{
    std::vector<node_annotation> kids{with_aux(0, 1), with_aux(2, 3)};
    kids[1].size = 4;
    kids[1].aux_pair.reset();
    auto a = combine_S(kids);
    EXPECT_EQ(a.size, 4u);
    EXPECT_EQ(a.source, node_annotation::witness::child);
    EXPECT_EQ(a.adopted, 1u);
}

TEST(CombineS, MissingAuxPair)
{
    std::vector<node_annotation> kids{with_aux(0, 1), annotate_vertex(2, B)};
    EXPECT_THROW(combine_S(kids), missing_aux_pair);
}

TEST(CombineKS, ChainOfSingleVertices)
{
    // b, w, b', w' in K+S order.
    std::vector<node_annotation> kids{
        annotate_vertex(0, B), annotate_vertex(1, W), annotate_vertex(2, B),
        annotate_vertex(3, W)};
    const bool flags[] = {true, true, true, true};
    auto a = combine_KS(kids, flags);
    EXPECT_EQ(a.size, 1u);
    EXPECT_EQ(a.pairs, (std::vector<edge>{{0, 1}}));
    ASSERT_TRUE(a.aux_pair);
    EXPECT_EQ(*a.aux_pair, (edge{2, 1}));
}

TEST(CombineKS, WhitesBeforeBlacksHaveNoEdge)
{
    std::vector<node_annotation> kids{annotate_vertex(0, W),
                                      annotate_vertex(1, B)};
    const bool flags[] = {true, true};
    auto a = combine_KS(kids, flags);
    EXPECT_EQ(a.size, 0u);
    EXPECT_EQ(*a.aux_pair, (edge{1, 0}));
}

TEST(CombineKS, BestNonVertexChild)
{
    std::vector<node_annotation> kids{annotate_vertex(0, B), with_aux(1, 2),
                                      with_aux(3, 4)};
    kids[2].size = 3;
    const bool flags[] = {true, false, false};
    auto a = combine_KS(kids, flags);
    EXPECT_EQ(a.size, 3u);
    EXPECT_EQ(a.adopted, 2u);
}

TEST(CombineN, PathAndCycleRules)
{
    auto p7 = path(7);
    auto a = combine_N(classify_prime(p7), p7);
    EXPECT_EQ(a.pairs, (std::vector<edge>{{0, 1}, {4, 3}}));
    EXPECT_TRUE(is_induced_matching(p7, a.pairs));

    auto c12 = cycle(12);
    auto c = combine_N(classify_prime(c12), c12);
    EXPECT_EQ(c.size, 4u);
    EXPECT_TRUE(is_induced_matching(c12, c.pairs));
}

TEST(CombineN, BicomplementRule)
{
    auto g = bicomplement(path(8));
    auto a = combine_N(classify_prime(g), g);
    EXPECT_EQ(a.pairs, (std::vector<edge>{{0, 3}, {4, 1}}));
    EXPECT_TRUE(is_induced_matching(g, a.pairs));
}

TEST(CombineN, TooFewClasses)
{
    auto p7 = path(7);
    const vertex_id reps[] = {0, 1, 2, 3, 4, 5};
    EXPECT_THROW(combine_N(prime_form::ep, reps, p7), malformed_tree);
}

TEST(Solve, Examples)
{
    EXPECT_EQ(max_induced_matching(path(7)).size(), 2u);
    EXPECT_EQ(max_induced_matching(two_k2()).size(), 2u);
    EXPECT_EQ(max_induced_matching(complete(3, 4)).size(), 1u);
    EXPECT_EQ(max_induced_matching(new_graph(3, {B, W, B}, {})).size(), 0u);
    EXPECT_EQ(max_induced_matching(new_graph(1, {B}, {})).size(), 0u);
    EXPECT_EQ(max_induced_matching(new_graph(0, {}, {})).size(), 0u);
    EXPECT_EQ(max_induced_matching(cycle(12)).size(), 4u);
    EXPECT_THROW(max_induced_matching(star123_graph()), not_star123_free);
}

TEST(Solve, ExtendedCycleWithLargeClass)
{
    std::vector<std::size_t> sizes(10, 1);
    sizes[0] = 2;
    auto g = gen_shape(prime_form::ec, 10, sizes);
    EXPECT_EQ(g.order(), 11u);
    auto m = max_induced_matching(g);
    EXPECT_EQ(m.size(), 3u);
    EXPECT_EQ(brute_force_mim(g).size(), 3u);
}

TEST(Solve, PrimeClosedForms)
{
    rng r(17);
    for (std::size_t k = 7; k <= 22; ++k)
        for (int f = 0; f < 4; ++f) {
            const auto form = static_cast<prime_form>(f);
            if (is_cyclic(form) && k % 2)
                continue;
            std::vector<std::size_t> sizes(k);
            for (auto& s : sizes)
                s = r.between(1, 3);
            auto g = gen_shape(form, k, sizes, k);
            EXPECT_EQ(max_induced_matching(g).size(),
                      expected_prime_size(form, k))
                << form_name(form) << " k=" << k;
        }
}

TEST(Solve, MatchesOracleOnGeneratedGraphs)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        gen_config cfg;
        cfg.seed = seed;
        cfg.target_n = 2 + seed % 15;
        auto inst = gen_tree(cfg);
        if (inst.graph.size() > oracle_max_edges)
            continue;
        solve_stats stats;
        auto m = solve(decompose(inst.graph), inst.graph, &stats);
        ASSERT_TRUE(is_induced_matching(inst.graph, m)) << "seed " << seed;
        EXPECT_EQ(m.size(), brute_force_mim(inst.graph).size())
            << "seed " << seed;
        EXPECT_EQ(stats.emitted, m.size());
    }
}

TEST(Solve, MatchesOracleOnAllGraphsUpToSixVertices)
{
    for (std::size_t n = 1; n <= 6; ++n)
        for_each_labeled_graph(n, [](const bipartite_graph& g) {
            auto m = max_induced_matching(g);
            ASSERT_EQ(m.size(), brute_force_mim(g).size());
        });
}

TEST(Solve, TwinDuplicationKeepsSize)
{
    rng r(31);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        gen_config cfg;
        cfg.seed = seed;
        cfg.target_n = 4 + seed % 10;
        auto g = gen_tree(cfg).graph;
        auto h = with_twin(g, static_cast<vertex_id>(r.below(g.order())));
        EXPECT_EQ(max_induced_matching(g).size(),
                  max_induced_matching(h).size());
    }
}

TEST(Solve, AnnotationsAreConsistent)
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        gen_config cfg;
        cfg.seed = seed;
        cfg.target_n = 30;
        auto inst = gen_tree(cfg);
        const auto& g = inst.graph;
        auto t = decompose(g);
        solve_stats stats;
        auto ann = annotate(t, g, &stats);
        EXPECT_EQ(stats.child_steps, t.size() - 1);
        for (node_id id = 0; id < t.size(); ++id) {
            const auto& nd = t.node(id);
            const auto& a = ann[id];
            auto local = materialize(t, ann, id);
            EXPECT_EQ(local.size(), a.size);
            EXPECT_TRUE(is_induced_matching(g, local));
            if (a.size <= 1 && nd.kind != node_kind::leaf &&
                nd.kind != node_kind::pprime) {
                auto vs = t.vertices(id);
                const bool two_colors = std::any_of(
                    vs.begin(), vs.end(),
                    [&](vertex_id v) { return g.color_of(v) != g.color_of(vs[0]); });
                if (two_colors && nd.kind != node_kind::ks) {
                    ASSERT_TRUE(a.aux_pair) << "node " << id;
                }
            }
            if (a.aux_pair) {
                EXPECT_EQ(g.color_of(a.aux_pair->black), B);
                EXPECT_EQ(g.color_of(a.aux_pair->white), W);
                EXPECT_FALSE(g.adjacent(a.aux_pair->black, a.aux_pair->white));
            }
            if (nd.kind == node_kind::parallel) {
                std::size_t sum = 0;
                for (auto c : nd.children) {
                    EXPECT_GE(ann[c].size, 1u);
                    sum += ann[c].size;
                }
                EXPECT_EQ(a.size, sum);
            }
            if (nd.kind == node_kind::series) {
                std::size_t best = 0;
                for (auto c : nd.children)
                    best = std::max(best, ann[c].size);
                EXPECT_EQ(a.size, std::max<std::size_t>(2, best));
            }
            if (nd.kind == node_kind::ks) {
                std::size_t best = 0;
                bool inner = false;
                for (auto c : nd.children)
                    if (t.node(c).kind != node_kind::leaf) {
                        inner = true;
                        best = std::max(best, ann[c].size);
                    }
                if (inner) {
                    EXPECT_EQ(a.size, best);
                }
                else {
                    EXPECT_LE(a.size, 1u);
                }
            }
        }
    }
}
