#ifndef MIM_MIM_HPP
#define MIM_MIM_HPP

#include <mim/bench.hpp>
#include <mim/decomposition.hpp>
#include <mim/errors.hpp>
#include <mim/generator.hpp>
#include <mim/graph.hpp>
#include <mim/io.hpp>
#include <mim/oracle.hpp>
#include <mim/solver.hpp>

#endif // MIM_MIM_HPP
