#ifndef MIM_ERRORS_HPP
#define MIM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mim
{

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class bad_index : public error
{
public:
    using error::error;
};

class monochromatic_edge : public error
{
public:
    monochromatic_edge(std::uint32_t u, std::uint32_t v)
        : error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") joins two vertices of the same color"),
          u_(u), v_(v)
    {
    }
    std::uint32_t u() const noexcept { return u_; }
    std::uint32_t v() const noexcept { return v_; }

private:
    std::uint32_t u_, v_;
};

class duplicate_edge : public error
{
public:
    duplicate_edge(std::uint32_t u, std::uint32_t v)
        : error("duplicate edge (" + std::to_string(u) + "," +
                std::to_string(v) + ")")
    {
    }
};

class too_small : public error
{
public:
    using error::error;
};

class too_large : public error
{
public:
    using error::error;
};

class malformed_tree : public error
{
public:
    using error::error;
};

class missing_aux_pair : public error
{
public:
    using error::error;
};

class internal_invariant : public error
{
public:
    using error::error;
};

class budget_too_small : public error
{
public:
    using error::error;
};

class bad_shape_params : public error
{
public:
    using error::error;
};

class bad_config : public error
{
public:
    using error::error;
};

// Raised when a prime piece of the decomposition is none of the four
// admissible shapes. vertices() holds the ids of the offending piece.
class not_star123_free : public error
{
public:
    explicit not_star123_free(std::vector<std::uint32_t> vertices)
        : error(describe(vertices)), vertices_(std::move(vertices))
    {
    }
    const std::vector<std::uint32_t>& vertices() const noexcept
    {
        return vertices_;
    }

private:
    static std::string describe(const std::vector<std::uint32_t>& vs)
    {
        std::string s = "graph is not Star123-free: prime piece {";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i != 0)
                s += ' ';
            s += std::to_string(vs[i]);
        }
        return s + "} is not an extended path/cycle or its bicomplement";
    }

    std::vector<std::uint32_t> vertices_;
};

class parse_error : public error
{
public:
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace mim

#endif // MIM_ERRORS_HPP
