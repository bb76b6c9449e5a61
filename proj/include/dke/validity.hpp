#pragma once

#include "dke/formula.hpp"
#include "dke/kripke.hpp"
#include "dke/semantics.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dke
{

struct sample_spec
{
    std::size_t count;
    std::uint64_t seed;
};

struct search_bounds
{
    std::size_t min_worlds = 1;
    std::size_t max_worlds = 2;
    agent_set agents;
    std::vector< std::string > atoms;
    std::size_t max_bits = 24;          // exhaustive search refuses larger spaces
    std::optional< sample_spec > sample; // random models instead of all of them
};

struct verdict
{
    bool valid = true;
    bool exhaustive = true;
    std::uint64_t models_checked = 0;
    std::optional< pointed_model > countermodel;
};

// 2^(n^2 |Ag|) * 2^(n |P|); nullopt once the exponent passes 63.
std::optional< std::uint64_t > model_count( std::size_t worlds, std::size_t agents, std::size_t atoms );

// Worlds are named w0..w{n-1}.
std::shared_ptr< const signature > search_signature( std::size_t worlds, const search_bounds& b );

// The index-th model with the given world count, in enumeration order:
// relation bits agent by agent in roster order, then valuation bits.
frame decode_model( std::uint64_t index, std::size_t worlds, std::size_t agents, std::size_t atoms );

// Visits every model within bounds (or the sampled ones) until the visitor
// returns false. Smaller world counts come first.
void enumerate_models( const search_bounds& b, const std::function< bool( const frame& ) >& visit );
std::vector< model > all_models( const search_bounds& b );

verdict check_validity( const formula& f, const search_bounds& b );
verdict check_equivalence( const formula& a, const formula& b, const search_bounds& bounds );

// Ground instances of the axiom and rule schemas.
struct schema_roster
{
    agent_set agents;
    std::vector< std::string > atoms;
};

const std::vector< std::string >& schema_names();
std::vector< formula > formula_pool( std::size_t depth, const schema_roster& r );
std::vector< formula > axiom_instances( const std::string& schema, std::size_t depth, const schema_roster& r,
                                        std::size_t limit = 200 );

} // namespace dke
