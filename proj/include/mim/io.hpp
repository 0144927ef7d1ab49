#ifndef MIM_IO_HPP
#define MIM_IO_HPP

// Text formats.
//
// Graph:     "<n> <m>", then one line of n tokens B/W, then m lines "<u> <v>".
// Matching:  "size <s>", then s lines "<black> <white>".
// In both, blank lines and lines starting with '#' are ignored.

#include <mim/decomposition.hpp>
#include <mim/errors.hpp>
#include <mim/graph.hpp>

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mim
{

namespace detail
{

class line_reader
{
public:
    explicit line_reader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line split into tokens.
    bool next(std::vector<std::string_view>& tokens)
    {
        while (std::getline(in_, text_)) {
            ++line_;
            tokens.clear();
            std::string_view s(text_);
            std::size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && is_space(s[i]))
                    ++i;
                auto j = i;
                while (j < s.size() && !is_space(s[j]))
                    ++j;
                if (j > i)
                    tokens.push_back(s.substr(i, j - i));
                i = j;
            }
            if (tokens.empty() || tokens.front().front() == '#')
                continue;
            return true;
        }
        ++line_;
        return false;
    }

    std::size_t line() const { return line_; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw parse_error(line_, what);
    }

    std::uint64_t number(std::string_view tok) const
    {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            fail("expected a non-negative integer, got '" + std::string(tok) +
                 "'");
        return v;
    }

private:
    static bool is_space(char c)
    {
        return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
    }

    std::istream& in_;
    std::string text_;
    std::size_t line_ = 0;
};

} // namespace detail

inline bipartite_graph read_graph(std::istream& in)
{
    detail::line_reader r(in);
    std::vector<std::string_view> tok;
    if (!r.next(tok))
        r.fail("missing header '<n> <m>'");
    if (tok.size() != 2)
        r.fail("header must be '<n> <m>'");
    const auto n = r.number(tok[0]);
    const auto m = r.number(tok[1]);
    if (n > std::uint64_t{1} << 31)
        r.fail("vertex count too large");

    std::vector<color> colors;
    colors.reserve(n);
    if (n > 0) {
        if (!r.next(tok))
            r.fail("missing color line");
        if (tok.size() != n)
            r.fail("expected " + std::to_string(n) + " color tokens, got " +
                   std::to_string(tok.size()));
        for (auto t : tok) {
            if (t == "B")
                colors.push_back(color::black);
            else if (t == "W")
                colors.push_back(color::white);
            else
                r.fail("color token must be B or W, got '" + std::string(t) +
                       "'");
        }
    }

    std::vector<std::pair<vertex_id, vertex_id>> edges;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!r.next(tok))
            r.fail("expected " + std::to_string(m) + " edges, found " +
                   std::to_string(i));
        if (tok.size() != 2)
            r.fail("edge line must be '<u> <v>'");
        auto u = r.number(tok[0]), v = r.number(tok[1]);
        if (u >= n || v >= n)
            r.fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") has an endpoint >= " + std::to_string(n));
        if (colors[u] == colors[v])
            r.fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") joins two " +
                   (colors[u] == color::black ? "black" : "white") +
                   " vertices");
        auto b = colors[u] == color::black ? u : v;
        auto w = colors[u] == color::black ? v : u;
        if (!seen.insert(b << 32 | w).second)
            r.fail("duplicate edge (" + std::to_string(u) + "," +
                   std::to_string(v) + ")");
        edges.emplace_back(static_cast<vertex_id>(u),
                           static_cast<vertex_id>(v));
    }
    if (r.next(tok))
        r.fail("unexpected content after the last edge");
    return bipartite_graph(std::move(colors), edges);
}

// `header` lines are written as '#' comments before the graph.
inline void write_graph(std::ostream& out, const bipartite_graph& g,
                        std::string_view header = {})
{
    std::size_t start = 0;
    while (start < header.size()) {
        auto end = header.find('\n', start);
        if (end == std::string_view::npos)
            end = header.size();
        out << "# " << header.substr(start, end - start) << '\n';
        start = end + 1;
    }
    out << g.order() << ' ' << g.size() << '\n';
    for (vertex_id v = 0; v < g.order(); ++v)
        out << (v ? " " : "") << color_token(g.color_of(v));
    if (g.order() > 0)
        out << '\n';
    for (const auto& e : g.edges())
        out << e.black << ' ' << e.white << '\n';
}

inline induced_matching read_matching(std::istream& in)
{
    detail::line_reader r(in);
    std::vector<std::string_view> tok;
    if (!r.next(tok))
        r.fail("missing 'size <s>' line");
    if (tok.size() != 2 || tok[0] != "size")
        r.fail("first line must be 'size <s>'");
    const auto s = r.number(tok[1]);
    induced_matching m;
    for (std::uint64_t i = 0; i < s; ++i) {
        if (!r.next(tok))
            r.fail("expected " + std::to_string(s) + " pairs, found " +
                   std::to_string(i));
        if (tok.size() != 2)
            r.fail("pair line must be '<black> <white>'");
        auto b = r.number(tok[0]), w = r.number(tok[1]);
        if (b > UINT32_MAX || w > UINT32_MAX)
            r.fail("vertex id out of range");
        m.push_back({static_cast<vertex_id>(b), static_cast<vertex_id>(w)});
    }
    if (r.next(tok))
        r.fail("unexpected content after the last pair");
    return m;
}

inline void write_matching(std::ostream& out, const induced_matching& m)
{
    out << "size " << m.size() << '\n';
    for (const auto& e : m)
        out << e.black << ' ' << e.white << '\n';
}

inline std::string node_label(const decomp_tree& t, node_id id,
                              const bipartite_graph& g)
{
    const auto& nd = t.node(id);
    const auto k = std::to_string(nd.children.size());
    switch (nd.kind) {
    case node_kind::leaf:
        return "leaf " + std::to_string(nd.vertex) + " " +
               color_token(g.color_of(nd.vertex));
    case node_kind::parallel:
        return "P(" + k + ")";
    case node_kind::series:
        return "S(" + k + ")";
    case node_kind::ks:
        return "KS(k=" + k + ")";
    case node_kind::prime:
        return std::string("N(") + form_name(nd.form) + ",k=" + k + ")";
    case node_kind::pprime:
        return "P'(|V|=" + k + ")";
    }
    return "?";
}

// One node per line, two spaces of indent per level, children in order.
inline void write_tree(std::ostream& out, const decomp_tree& t,
                       const bipartite_graph& g)
{
    if (t.empty())
        return;
    std::vector<std::pair<node_id, std::size_t>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto [id, depth] = stack.back();
        stack.pop_back();
        out << std::string(2 * depth, ' ') << node_label(t, id, g) << '\n';
        const auto& ch = t.node(id).children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it)
            stack.emplace_back(*it, depth + 1);
    }
}

inline void write_dot(std::ostream& out, const decomp_tree& t,
                      const bipartite_graph& g)
{
    out << "digraph decomposition {\n";
    for (node_id id = 0; id < t.size(); ++id)
        out << "  n" << id << " [label=\"" << node_label(t, id, g)
            << "\"];\n";
    for (node_id id = 0; id < t.size(); ++id)
        for (auto c : t.node(id).children)
            out << "  n" << id << " -> n" << c << ";\n";
    out << "}\n";
}

} // namespace mim

#endif // MIM_IO_HPP
