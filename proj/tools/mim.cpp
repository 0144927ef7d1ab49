// mim: decompose, solve, check, oracle, gen, bench.
//
// Exit codes: 0 success, 1 usage/IO/format error, 2 graph is not
// Star123-free, 3 verification failure.

#include <mim/mim.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_not_member = 2;
constexpr int exit_verify = 3;

class input
{
public:
    explicit input(const std::string& path)
    {
        if (path == "-")
            return;
        file_ = std::make_unique<std::ifstream>(path);
        if (!*file_)
            throw mim::error("cannot open '" + path + "'");
    }
    std::istream& stream() { return file_ ? *file_ : std::cin; }

private:
    std::unique_ptr<std::ifstream> file_;
};

mim::bipartite_graph load_graph(const std::string& path)
{
    input in(path);
    try {
        return mim::read_graph(in.stream());
    }
    catch (const mim::parse_error& e) {
        throw mim::error(path + ":" + e.what());
    }
}

int cmd_decompose(const std::string& path, bool dot)
{
    auto g = load_graph(path);
    auto tree = mim::decompose(g);
    if (dot)
        mim::write_dot(std::cout, tree, g);
    else
        mim::write_tree(std::cout, tree, g);
    return exit_ok;
}

int cmd_solve(const std::string& path, bool verify)
{
    auto g = load_graph(path);
    auto tree = mim::decompose(g);
    auto m = mim::solve(tree, g);
    mim::write_matching(std::cout, m);
    if (!verify)
        return exit_ok;
    if (auto bad = mim::find_matching_violation(g, m)) {
        std::cerr << "verify: not an induced matching: " << bad->describe()
                  << '\n';
        return exit_verify;
    }
    if (g.size() > mim::oracle_max_edges) {
        std::cerr << "verify: oracle skipped (" << g.size()
                  << " edges exceeds the guard of " << mim::oracle_max_edges
                  << "); induced-matching check passed\n";
        return exit_ok;
    }
    auto best = mim::brute_force_mim(g);
    if (best.size() != m.size()) {
        std::cerr << "verify: solver found " << m.size()
                  << " edges, oracle found " << best.size() << '\n';
        return exit_verify;
    }
    std::cerr << "verify: ok (oracle agrees on size " << m.size() << ")\n";
    return exit_ok;
}

int cmd_check(const std::string& graph_path, const std::string& matching_path)
{
    auto g = load_graph(graph_path);
    input in(matching_path);
    mim::induced_matching m;
    try {
        m = mim::read_matching(in.stream());
    }
    catch (const mim::parse_error& e) {
        throw mim::error(matching_path + ":" + e.what());
    }
    if (auto bad = mim::find_matching_violation(g, m)) {
        std::cout << "invalid: " << bad->describe() << '\n';
        return exit_verify;
    }
    std::cout << "valid: induced matching of size " << m.size() << '\n';
    return exit_ok;
}

int cmd_oracle(const std::string& path)
{
    auto g = load_graph(path);
    mim::write_matching(std::cout, mim::brute_force_mim(g));
    return exit_ok;
}

struct gen_flags
{
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::string shape;
    std::size_t k = 7;
    std::size_t class_max = 1;
};

int cmd_gen(const gen_flags& f)
{
    if (f.shape.empty()) {
        mim::gen_config cfg;
        cfg.seed = f.seed;
        cfg.target_n = f.n;
        auto inst = mim::gen_tree(cfg);
        mim::write_graph(std::cout, inst.graph, "gen " + cfg.describe());
        return exit_ok;
    }
    mim::prime_form form;
    if (f.shape == "ep")
        form = mim::prime_form::ep;
    else if (f.shape == "ec")
        form = mim::prime_form::ec;
    else if (f.shape == "epbip")
        form = mim::prime_form::epbip;
    else
        form = mim::prime_form::ecbip;
    if (f.class_max < 1)
        throw mim::bad_shape_params("--class-max must be at least 1");
    mim::rng r(f.seed);
    std::vector<std::size_t> sizes(f.k);
    for (auto& s : sizes)
        s = r.between(1, f.class_max);
    auto g = mim::gen_shape(form, f.k, sizes, f.seed);
    mim::write_graph(std::cout, g,
                     "gen shape=" + f.shape + " k=" + std::to_string(f.k) +
                         " class-max=" + std::to_string(f.class_max) +
                         " seed=" + std::to_string(f.seed));
    return exit_ok;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
              std::size_t repeats)
{
    mim::write_bench_header(std::cout);
    for (auto n : sizes)
        mim::write_bench_row(std::cout, mim::run_bench(n, seed, repeats));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Maximum induced matching in bipartite Star123-free graphs"};
    app.require_subcommand(1);

    std::string path, matching_path;
    bool dot = false, verify = false;

    auto* decompose = app.add_subcommand(
        "decompose", "print the canonical decomposition tree");
    decompose->add_option("graph", path, "graph file, or - for stdin")
        ->required();
    decompose->add_flag("--dot", dot, "emit Graphviz DOT");

    auto* solve =
        app.add_subcommand("solve", "compute a maximum induced matching");
    solve->add_option("graph", path, "graph file, or - for stdin")->required();
    solve->add_flag("--verify", verify,
                    "re-check the result and compare with the oracle");

    auto* check = app.add_subcommand(
        "check", "check that a matching is an induced matching");
    check->add_option("graph", path, "graph file")->required();
    check->add_option("matching", matching_path, "matching file")->required();

    auto* oracle = app.add_subcommand(
        "oracle", "exact maximum induced matching by exhaustive search");
    oracle->add_option("graph", path, "graph file, or - for stdin")
        ->required();

    gen_flags gf;
    auto* gen = app.add_subcommand(
        "gen", "generate a random Star123-free bipartite graph");
    gen->add_option("--seed", gf.seed, "random seed");
    auto* n_opt = gen->add_option("--n", gf.n, "number of vertices")
                      ->check(CLI::PositiveNumber);
    auto* shape_opt =
        gen->add_option("--shape", gf.shape, "single prime shape")
            ->check(CLI::IsMember({"ep", "ec", "epbip", "ecbip"}));
    gen->add_option("--k", gf.k, "number of classes")->needs(shape_opt);
    gen->add_option("--class-max", gf.class_max, "largest class size")
        ->needs(shape_opt);

    std::vector<std::size_t> sizes{1000, 10000, 100000};
    std::uint64_t bench_seed = 1;
    std::size_t repeats = 5;
    auto* bench = app.add_subcommand(
        "bench", "time decomposition and solving on generated instances");
    bench->add_option("--sizes", sizes, "vertex counts")->delimiter(',');
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("--repeats", repeats, "keep the best of R runs")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*decompose)
            return cmd_decompose(path, dot);
        if (*solve)
            return cmd_solve(path, verify);
        if (*check)
            return cmd_check(path, matching_path);
        if (*oracle)
            return cmd_oracle(path);
        if (*gen) {
            if (gf.shape.empty() && !*n_opt) {
                std::cerr << "gen: --n is required without --shape\n";
                return exit_usage;
            }
            return cmd_gen(gf);
        }
        if (*bench)
            return cmd_bench(sizes, bench_seed, repeats);
    }
    catch (const mim::not_star123_free& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_not_member;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
