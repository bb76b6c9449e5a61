#pragma once

#include "dke/formula.hpp"

#include <limits>
#include <string>
#include <vector>

namespace dke
{

struct trace_step
{
    static constexpr std::size_t root = std::numeric_limits< std::size_t >::max();

    std::size_t parent; // index of the calling step, or root
    std::size_t depth;
    formula input;
    std::string clause;
    formula output;
};

struct translation
{
    formula result;
    std::vector< trace_step > trace; // in call order
};

// Rewrites f into an equivalent static formula. `everyone` is the agent
// roster the [eee] update ranges over; when empty, the agents of f are used.
formula translate( const formula& f, const agent_set& everyone = {} );
translation translate_traced( const formula& f, const agent_set& everyone = {} );

// Dhat{G | chi} phi written with -> kept as a connective.
formula expand_dhat( const agent_set& g, const formula& chi, const formula& phi );

} // namespace dke
