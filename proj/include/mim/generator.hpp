#ifndef MIM_GENERATOR_HPP
#define MIM_GENERATOR_HPP

#include <mim/decomposition.hpp>
#include <mim/errors.hpp>
#include <mim/graph.hpp>
#include <mim/oracle.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mim
{

/**
 * Seeded source of bounded integers. Sampling is done here rather than with
 * the standard distributions, whose output is implementation-defined, so a
 * seed names the same instance on every platform.
 */
class rng
{
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const auto limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % bound;
    }

    std::size_t between(std::size_t lo, std::size_t hi)
    {
        return lo + static_cast<std::size_t>(below(hi - lo + 1));
    }

    // True with probability p, resolved to 2^-53.
    bool chance(double p)
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
    }

    std::size_t weighted(std::span<const double> weights)
    {
        double total = 0;
        for (auto w : weights)
            total += w;
        double x = static_cast<double>(engine_() >> 11) * 0x1.0p-53 * total;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] > 0 && x < weights[i])
                return i;
            x -= weights[i];
        }
        for (std::size_t i = weights.size(); i-- > 0;)
            if (weights[i] > 0)
                return i;
        return 0;
    }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

struct op_weights
{
    double parallel = 1;
    double series = 1;
    double ks = 1;
    double prime = 1;
};

struct gen_config
{
    std::uint64_t seed = 0;
    std::size_t target_n = 16;
    op_weights weights;
    std::size_t class_min = 1;
    std::size_t class_max = 3;
    std::size_t k_max = 12;
    std::size_t max_depth = 8;
    // Above this many vertices only parallel nodes are drawn, which bounds
    // the edge count of large instances. 0 disables the limit.
    std::size_t dense_limit = 0;
    // Prime forms that may be drawn, indexed by prime_form.
    std::array<bool, 4> forms{true, true, true, true};

    void validate() const
    {
        if (target_n < 1)
            throw budget_too_small("target_n must be at least 1");
        const auto& w = weights;
        if (w.parallel < 0 || w.series < 0 || w.ks < 0 || w.prime < 0 ||
            w.parallel + w.series + w.ks + w.prime <= 0)
            throw bad_config("op weights must be non-negative, not all zero");
        if (class_min < 1 || class_max < class_min)
            throw bad_config("class size range must satisfy 1 <= min <= max");
        if (k_max < min_prime_classes)
            throw bad_config("k_max must be at least 7");
        if (forms == std::array<bool, 4>{} &&
            w.parallel + w.series + w.ks <= 0)
            throw bad_config("prime nodes only, but no prime form allowed");
        if (dense_limit != 0 && dense_limit < 8)
            throw bad_config("dense_limit must be 0 or at least 8");
    }

    std::string describe() const
    {
        std::ostringstream os;
        os << "seed=" << seed << " n=" << target_n
           << " weights=" << weights.parallel << "," << weights.series << ","
           << weights.ks << "," << weights.prime << " class=" << class_min
           << ".." << class_max << " k_max=" << k_max
           << " max_depth=" << max_depth << " dense_limit=" << dense_limit
           << " forms=";
        const char* sep = "";
        for (int f = 0; f < 4; ++f)
            if (forms[f]) {
                os << sep << form_name(static_cast<prime_form>(f));
                sep = ",";
            }
        return os.str();
    }
};

struct generated_instance
{
    decomp_tree tree;
    bipartite_graph graph;
};

namespace detail
{

class tree_sampler
{
public:
    explicit tree_sampler(const gen_config& cfg) : cfg_(cfg), rng_(cfg.seed)
    {
    }

    generated_instance run()
    {
        build(cfg_.target_n, 0, std::nullopt);
        std::vector<vertex_id> perm(colors_.size());
        for (vertex_id v = 0; v < perm.size(); ++v)
            perm[v] = v;
        rng_.shuffle(perm);
        tree_.relabel(perm);
        std::vector<color> colors(colors_.size());
        for (vertex_id v = 0; v < perm.size(); ++v)
            colors[perm[v]] = colors_[v];
        auto graph = reconstruct(tree_, colors);
        return {std::move(tree_), std::move(graph)};
    }

private:
    enum choice
    {
        parallel,
        series,
        ks,
        prime
    };

    color random_color()
    {
        return rng_.chance(0.5) ? color::black : color::white;
    }

    void leaf(std::optional<node_id> parent, color c)
    {
        tree_.add_leaf(parent, static_cast<vertex_id>(colors_.size()));
        colors_.push_back(c);
    }

    // Splits `total` into `parts` sizes, each at least `lo`.
    std::vector<std::size_t> split(std::size_t total, std::size_t parts,
                                   std::size_t lo)
    {
        const auto spare = total - parts * lo;
        std::vector<std::size_t> cuts(parts - 1);
        for (auto& c : cuts)
            c = rng_.between(0, spare);
        std::sort(cuts.begin(), cuts.end());
        std::vector<std::size_t> sizes(parts);
        std::size_t prev = 0;
        for (std::size_t i = 0; i + 1 < parts; ++i) {
            sizes[i] = lo + cuts[i] - prev;
            prev = cuts[i];
        }
        sizes.back() = lo + spare - prev;
        return sizes;
    }

    // Feasible class counts for one prime form within `budget` vertices.
    std::vector<std::size_t> class_counts(prime_form f, std::size_t budget) const
    {
        std::vector<std::size_t> ks;
        for (auto k = min_prime_classes; k <= cfg_.k_max; ++k) {
            if (is_cyclic(f) && k % 2 != 0)
                continue;
            if (k * cfg_.class_min <= budget && budget <= k * cfg_.class_max)
                ks.push_back(k);
        }
        return ks;
    }

    void build(std::size_t budget, std::size_t depth,
               std::optional<node_id> parent)
    {
        if (budget == 1) {
            leaf(parent, random_color());
            return;
        }
        if (cfg_.dense_limit != 0 && budget > cfg_.dense_limit) {
            chunked(budget, cfg_.dense_limit - 1, depth, parent);
            return;
        }
        if (depth >= cfg_.max_depth) {
            if (budget <= 8)
                flat(budget, parent);
            else
                chunked(budget, 7, cfg_.max_depth, parent);
            return;
        }
        std::array<double, 4> w{};
        if (budget >= 4) {
            w[parallel] = cfg_.weights.parallel;
            w[series] = cfg_.weights.series;
        }
        w[ks] = cfg_.weights.ks;
        std::array<std::vector<std::size_t>, 4> counts;
        bool any_prime = false;
        for (auto f : {prime_form::ep, prime_form::ec, prime_form::epbip,
                       prime_form::ecbip}) {
            if (!cfg_.forms[static_cast<int>(f)])
                continue;
            counts[static_cast<int>(f)] = class_counts(f, budget);
            any_prime |= !counts[static_cast<int>(f)].empty();
        }
        if (any_prime)
            w[prime] = cfg_.weights.prime;
        if (w[0] + w[1] + w[2] + w[3] <= 0)
            w[ks] = 1;
        const auto pick = rng_.weighted(w);
        switch (pick) {
        case parallel:
        case series: {
            const auto c =
                rng_.between(2, std::min<std::size_t>(4, budget / 2));
            auto node = tree_.open(pick == parallel ? node_kind::parallel
                                                    : node_kind::series,
                                   parent);
            for (auto s : split(budget, c, 2))
                build(s, depth + 1, node);
            tree_.close(node);
            return;
        }
        case ks: {
            const auto c = rng_.between(2, std::min<std::size_t>(6, budget));
            auto node = tree_.open(node_kind::ks, parent);
            for (auto s : split(budget, c, 1))
                build(s, depth + 1, node);
            tree_.close(node);
            return;
        }
        default:
            break;
        }
        std::vector<prime_form> forms;
        for (int f = 0; f < 4; ++f)
            if (!counts[f].empty())
                forms.push_back(static_cast<prime_form>(f));
        const auto form = forms[rng_.below(forms.size())];
        const auto& options = counts[static_cast<int>(form)];
        const auto k = options[rng_.below(options.size())];
        std::vector<std::size_t> sizes(k, cfg_.class_min);
        for (auto spare = budget - k * cfg_.class_min; spare > 0; --spare) {
            std::size_t i;
            do
                i = rng_.below(k);
            while (sizes[i] == cfg_.class_max);
            ++sizes[i];
        }
        prime_node(form, sizes, random_color(), parent);
    }

    void prime_node(prime_form form, std::span<const std::size_t> sizes,
                    color first, std::optional<node_id> parent)
    {
        auto node = tree_.open(node_kind::prime, parent, form);
        auto c = first;
        for (auto s : sizes) {
            if (s == 1) {
                leaf(node, c);
            }
            else {
                auto pp = tree_.open(node_kind::pprime, node);
                for (std::size_t i = 0; i < s; ++i)
                    leaf(pp, c);
                tree_.close(pp);
            }
            c = opposite(c);
        }
        tree_.close(node);
    }

    // K+S node over single vertices.
    void flat(std::size_t budget, std::optional<node_id> parent)
    {
        auto node = tree_.open(node_kind::ks, parent);
        for (std::size_t i = 0; i < budget; ++i)
            leaf(node, random_color());
        tree_.close(node);
    }

    // Parallel node over pieces of at most `hi` vertices.
    void chunked(std::size_t budget, std::size_t hi, std::size_t depth,
                 std::optional<node_id> parent)
    {
        const auto lo = std::max<std::size_t>(2, hi / 2);
        std::vector<std::size_t> sizes;
        auto rest = budget;
        while (rest > hi) {
            auto s = rng_.between(lo, hi);
            sizes.push_back(s);
            rest -= s;
        }
        if (rest >= 2)
            sizes.push_back(rest);
        else
            sizes.back() += rest;
        auto node = tree_.open(node_kind::parallel, parent);
        for (auto s : sizes)
            build(s, depth + 1, node);
        tree_.close(node);
    }

    const gen_config& cfg_;
    rng rng_;
    decomp_tree tree_;
    std::vector<color> colors_;
};

} // namespace detail

/**
 * Random decomposition tree built from the four operations with admissible
 * prime pieces only, and the graph it encodes. The result is a pure
 * function of the config.
 */
inline generated_instance gen_tree(const gen_config& cfg)
{
    cfg.validate();
    return detail::tree_sampler(cfg).run();
}

/**
 * A single extended path/cycle (or bicomplement) with the given class
 * sizes; class 1 is black. A non-zero seed_offset shuffles vertex ids.
 * Cycles need an even class count to be bipartite.
 */
inline bipartite_graph gen_shape(prime_form form, std::size_t k,
                                 std::span<const std::size_t> class_sizes,
                                 std::uint64_t seed_offset = 0)
{
    if (k < min_prime_classes)
        throw bad_shape_params("prime shapes need k >= 7, got " +
                               std::to_string(k));
    if (class_sizes.size() != k)
        throw bad_shape_params("expected " + std::to_string(k) +
                               " class sizes, got " +
                               std::to_string(class_sizes.size()));
    if (std::find(class_sizes.begin(), class_sizes.end(), 0u) !=
        class_sizes.end())
        throw bad_shape_params("class sizes must be positive");
    if (is_cyclic(form) && k % 2 != 0)
        throw bad_shape_params(
            "an extended cycle with an odd number of classes is not "
            "bipartite: its first and last classes share a color");
    decomp_tree tree;
    std::vector<color> colors;
    auto root = tree.open(node_kind::prime, std::nullopt, form);
    auto c = color::black;
    for (auto s : class_sizes) {
        std::optional<node_id> parent = root;
        if (s > 1)
            parent = tree.open(node_kind::pprime, root);
        for (std::size_t i = 0; i < s; ++i) {
            tree.add_leaf(*parent, static_cast<vertex_id>(colors.size()));
            colors.push_back(c);
        }
        if (s > 1)
            tree.close(*parent);
        c = opposite(c);
    }
    tree.close(root);
    if (seed_offset != 0) {
        std::vector<vertex_id> perm(colors.size());
        for (vertex_id v = 0; v < perm.size(); ++v)
            perm[v] = v;
        rng(seed_offset).shuffle(perm);
        tree.relabel(perm);
        std::vector<color> shuffled(colors.size());
        for (vertex_id v = 0; v < perm.size(); ++v)
            shuffled[perm[v]] = colors[v];
        colors = std::move(shuffled);
    }
    return reconstruct(tree, colors);
}

struct adversarial_options
{
    std::size_t min_extra = 0;
    std::size_t max_extra = 5;
    double edge_probability = 0.4;
};

/**
 * A skew star planted as an induced subgraph, plus between min_extra and
 * max_extra random vertices. Extra edges always touch an extra vertex, so
 * the pattern stays induced. Vertex ids are shuffled.
 */
inline bipartite_graph gen_adversarial(std::uint64_t seed,
                                       adversarial_options opt = {})
{
    rng r(seed);
    auto star = star123_graph();
    auto colors = star.colors();
    auto edges = edge_pairs(star);
    if (opt.max_extra < opt.min_extra)
        throw bad_config("adversarial extra-vertex range is empty");
    const auto extra = r.between(opt.min_extra, opt.max_extra);
    for (std::size_t i = 0; i < extra; ++i) {
        const auto x = static_cast<vertex_id>(colors.size());
        const auto cx = r.chance(0.5) ? color::black : color::white;
        for (vertex_id y = 0; y < x; ++y)
            if (colors[y] != cx && r.chance(opt.edge_probability))
                edges.emplace_back(y, x);
        colors.push_back(cx);
    }
    std::vector<vertex_id> perm(colors.size());
    for (vertex_id v = 0; v < perm.size(); ++v)
        perm[v] = v;
    r.shuffle(perm);
    std::vector<color> shuffled(colors.size());
    for (vertex_id v = 0; v < perm.size(); ++v)
        shuffled[perm[v]] = colors[v];
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    return bipartite_graph(std::move(shuffled), edges);
}

} // namespace mim

#endif // MIM_GENERATOR_HPP
