#pragma once

#include "dke/kripke.hpp"

#include <optional>
#include <string>

namespace dke
{

// Graphviz rendering. One edge per pair of worlds and set of agent labels;
// a pair related both ways by the same agents becomes a single two-headed edge.
std::string to_dot( const model& m, std::optional< std::size_t > point = {} );

} // namespace dke
