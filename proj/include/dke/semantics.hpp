#pragma once

#include "dke/formula.hpp"
#include "dke/kripke.hpp"

#include <cstdint>
#include <vector>

namespace dke
{

// Relations and valuation of a model with agents and atoms resolved to
// indices. This is the working form the evaluator and the model search use.
struct frame
{
    std::size_t n = 0;
    std::size_t agents = 0;
    std::vector< world_set > rows; // rows[a * n + w] = successors of w for agent a
    std::vector< world_set > val;  // per atom

    [[nodiscard]] world_set row( std::size_t a, std::size_t w ) const { return rows[ a * n + w ]; }
    [[nodiscard]] world_set everything() const { return all_worlds( n ); }

    static frame of( const model& m );
    [[nodiscard]] model to_model( const std::shared_ptr< const signature >& sig ) const;
};

using agent_mask = std::uint32_t;

// A formula with names resolved against a fixed agent and atom roster.
class compiled
{
public:
    struct cnode
    {
        op kind;
        std::uint32_t atom = 0;
        agent_mask mask = 0;
        std::int32_t left = -1, right = -1;
    };

private:
    std::vector< cnode > _nodes;
    std::int32_t _root = -1;
    agent_mask _everyone = 0;

    std::int32_t add( const formula& f, const signature& sig );
    world_set eval( std::int32_t i, const frame& fr ) const;

public:
    compiled( const formula& f, const signature& sig );

    [[nodiscard]] world_set truth_set( const frame& fr ) const { return eval( _root, fr ); }
};

// Relation-level updates on frames. An empty mask stands for W x W.
world_set distributed_row( const frame& fr, agent_mask g, std::size_t w );
frame frame_eee( const frame& fr, agent_mask everyone );
frame frame_see( const frame& fr, agent_mask s );
frame frame_sse( const frame& fr, agent_mask s, world_set chi );

world_set truth_set( const model& m, const formula& f );
bool satisfies( const pointed_model& pm, const formula& f );
bool satisfies( const model& m, std::size_t world, const formula& f );

} // namespace dke
