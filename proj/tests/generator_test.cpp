#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace mim;
using namespace mim::testing;

TEST(Rng, BoundsAndDeterminism)
{
    rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.between(3, 9);
        EXPECT_EQ(x, b.between(3, 9));
        EXPECT_GE(x, 3u);
        EXPECT_LE(x, 9u);
    }
    const double w[] = {0, 1, 0};
    for (int i = 0; i < 50; ++i)
        EXPECT_EQ(a.weighted(w), 1u);
}

TEST(GenTree, DeterministicForSeed)
{
    gen_config cfg;
    cfg.seed = 7;
    cfg.target_n = 40;
    auto a = gen_tree(cfg);
    auto b = gen_tree(cfg);
    EXPECT_EQ(a.graph, b.graph);
    cfg.seed = 8;
    EXPECT_NE(gen_tree(cfg).graph, a.graph);
}

TEST(GenTree, ExactOrderAndValidTree)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        gen_config cfg;
        cfg.seed = seed;
        cfg.target_n = 1 + seed;
        auto inst = gen_tree(cfg);
        ASSERT_EQ(inst.graph.order(), cfg.target_n);
        EXPECT_NO_THROW(validate_tree(inst.tree, inst.graph.colors()));
        EXPECT_FALSE(shape_rule_violation(inst.tree));
        EXPECT_EQ(reconstruct(inst.tree, inst.graph.colors()), inst.graph);
    }
}

TEST(GenTree, SinglePrimeNode)
{
    gen_config cfg;
    cfg.target_n = 7;
    cfg.weights = {0, 0, 0, 1};
    cfg.class_max = 1;
    cfg.forms = {true, false, false, false};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        cfg.seed = seed;
        auto inst = gen_tree(cfg);
        ASSERT_EQ(inst.tree.size(), 8u);
        EXPECT_EQ(inst.tree.node(0).kind, node_kind::prime);
        auto shape = classify_prime(inst.graph);
        EXPECT_EQ(shape.form, prime_form::ep);
        EXPECT_EQ(shape.k(), 7u);
        EXPECT_EQ(max_induced_matching(inst.graph).size(), 2u);
    }
}

TEST(GenTree, ParallelOnlyCountsEdgeComponents)
{
    gen_config cfg;
    cfg.weights = {1, 0, 0, 0};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        cfg.seed = seed;
        cfg.target_n = 4 + seed;
        auto g = gen_tree(cfg).graph;
        std::size_t with_edge = 0;
        for (const auto& comp : connected_components(g))
            with_edge += induced_subgraph(g, comp).graph.size() > 0;
        EXPECT_EQ(max_induced_matching(g).size(), with_edge);
    }
}

TEST(GenTree, DenseLimitKeepsGraphsSparse)
{
    auto cfg = bench_config(5000, 3);
    auto g = gen_tree(cfg).graph;
    EXPECT_EQ(g.order(), 5000u);
    EXPECT_LT(g.size(), 5000u * 24);
}

TEST(GenTree, GeneratedGraphsAreSkewStarFree)
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        gen_config cfg;
        cfg.seed = seed;
        cfg.target_n = 7 + seed % 6;
        auto g = gen_tree(cfg).graph;
        EXPECT_FALSE(contains_star123(g)) << cfg.describe();
    }
}

TEST(GenTree, PipelineIsTotal)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        gen_config cfg;
        cfg.seed = seed;
        cfg.target_n = 50 + 7 * seed;
        cfg.class_max = 1 + seed % 4;
        cfg.k_max = 7 + seed % 9;
        auto g = gen_tree(cfg).graph;
        EXPECT_NO_THROW(max_induced_matching(g)) << cfg.describe();
    }
}

TEST(GenTree, ConfigErrors)
{
    gen_config cfg;
    cfg.target_n = 0;
    EXPECT_THROW(gen_tree(cfg), budget_too_small);
    cfg = {};
    cfg.weights = {0, 0, 0, 0};
    EXPECT_THROW(gen_tree(cfg), bad_config);
    cfg = {};
    cfg.weights.parallel = -1;
    EXPECT_THROW(gen_tree(cfg), bad_config);
    cfg = {};
    cfg.class_min = 3;
    cfg.class_max = 2;
    EXPECT_THROW(gen_tree(cfg), bad_config);
    cfg = {};
    cfg.k_max = 6;
    EXPECT_THROW(gen_tree(cfg), bad_config);
    cfg = {};
    cfg.dense_limit = 5;
    EXPECT_THROW(gen_tree(cfg), bad_config);
}

TEST(GenTree, Describe)
{
    gen_config cfg;
    cfg.seed = 3;
    cfg.forms = {true, false, true, false};
    EXPECT_EQ(cfg.describe(),
              "seed=3 n=16 weights=1,1,1,1 class=1..3 k_max=12 max_depth=8 "
              "dense_limit=0 forms=EP,EPBIP");
}

TEST(GenShape, PathWithSingletonClasses)
{
    const std::vector<std::size_t> ones(7, 1);
    EXPECT_EQ(gen_shape(prime_form::ep, 7, ones), path(7));
}

TEST(GenShape, CycleWithOneLargerClass)
{
    std::vector<std::size_t> sizes(10, 1);
    sizes[0] = 2;
    auto g = gen_shape(prime_form::ec, 10, sizes);
    EXPECT_EQ(g.order(), 11u);
    EXPECT_EQ(g.size(), 12u);
    EXPECT_EQ(max_induced_matching(g).size(), 3u);
}

TEST(GenShape, BicomplementedCycle)
{
    const std::vector<std::size_t> ones(8, 1);
    auto g = gen_shape(prime_form::ecbip, 8, ones);
    EXPECT_EQ(g, bicomplement(cycle(8)));
    EXPECT_EQ(max_induced_matching(g).size(), 2u);
}

TEST(GenShape, ShuffledIdsKeepTheShape)
{
    const std::vector<std::size_t> sizes{1, 2, 3, 1, 2, 1, 1, 2};
    auto plain = gen_shape(prime_form::ec, 8, sizes);
    auto shuffled = gen_shape(prime_form::ec, 8, sizes, 5);
    EXPECT_EQ(plain.order(), shuffled.order());
    EXPECT_EQ(plain.size(), shuffled.size());
    EXPECT_EQ(classify_prime(shuffled).form, prime_form::ec);
}

TEST(GenShape, Errors)
{
    const std::vector<std::size_t> six(6, 1), seven(7, 1), nine(9, 1);
    EXPECT_THROW(gen_shape(prime_form::ep, 6, six), bad_shape_params);
    EXPECT_THROW(gen_shape(prime_form::ep, 8, seven), bad_shape_params);
    std::vector<std::size_t> zero(7, 1);
    zero[3] = 0;
    EXPECT_THROW(gen_shape(prime_form::ep, 7, zero), bad_shape_params);
    EXPECT_THROW(gen_shape(prime_form::ec, 9, nine), bad_shape_params);
    EXPECT_THROW(gen_shape(prime_form::ecbip, 7, seven), bad_shape_params);
}

TEST(GenAdversarial, PlantOnly)
{
    adversarial_options opt;
    opt.max_extra = 0;
    auto g = gen_adversarial(1, opt);
    EXPECT_EQ(g.order(), 7u);
    EXPECT_EQ(g.size(), 6u);
    EXPECT_TRUE(contains_star123(g));
    EXPECT_THROW(decompose(g), not_star123_free);
}

TEST(GenAdversarial, PlantWithIsolatedVertices)
{
    adversarial_options opt;
    opt.min_extra = opt.max_extra = 3;
    opt.edge_probability = 0;
    auto g = gen_adversarial(2, opt);
    EXPECT_EQ(g.order(), 10u);
    EXPECT_EQ(g.size(), 6u);
    EXPECT_THROW(decompose(g), not_star123_free);
}

TEST(GenAdversarial, AlwaysRejected)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = gen_adversarial(seed);
        ASSERT_TRUE(contains_star123(g));
        EXPECT_THROW(decompose(g), not_star123_free) << "seed " << seed;
    }
}

TEST(GenAdversarial, BadRange)
{
    adversarial_options opt;
    opt.min_extra = 4;
    opt.max_extra = 2;
    EXPECT_THROW(gen_adversarial(0, opt), bad_config);
}
