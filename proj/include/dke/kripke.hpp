#pragma once

#include "dke/error.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dke
{

// Sets of worlds are plain bitmasks, so models are capped at 64 worlds.
using world_set = std::uint64_t;
constexpr std::size_t max_worlds = 64;

inline world_set all_worlds( std::size_t n )
{
    return n >= 64 ? ~world_set{ 0 } : ( world_set{ 1 } << n ) - 1;
}

inline bool has_world( world_set s, std::size_t w ) { return ( s >> w ) & 1U; }

// Directed binary relation on {0..n-1}, one successor bitmask per world.
class relation
{
    std::vector< world_set > _rows;

public:
    relation() = default;
    explicit relation( std::size_t n ) : _rows( n, 0 ) {}

    static relation full( std::size_t n );
    static relation identity( std::size_t n );

    [[nodiscard]] std::size_t size() const { return _rows.size(); }
    [[nodiscard]] bool test( std::size_t w, std::size_t u ) const { return has_world( _rows[ w ], u ); }
    void set( std::size_t w, std::size_t u, bool on = true );

    [[nodiscard]] world_set image( std::size_t w ) const { return _rows[ w ]; }
    world_set& row( std::size_t w ) { return _rows[ w ]; }

    relation& operator&=( const relation& o );
    relation& operator|=( const relation& o );
    relation& operator-=( const relation& o );
    friend relation operator&( relation a, const relation& b ) { return a &= b; }
    friend relation operator|( relation a, const relation& b ) { return a |= b; }
    friend relation operator-( relation a, const relation& b ) { return a -= b; }
    relation operator~() const;
    bool operator==( const relation& o ) const = default;

    [[nodiscard]] bool subset_of( const relation& o ) const;
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] std::vector< std::pair< std::size_t, std::size_t > > pairs() const;

    [[nodiscard]] bool reflexive() const;
    [[nodiscard]] bool symmetric() const;
    [[nodiscard]] bool transitive() const;
    [[nodiscard]] bool euclidean() const;
    [[nodiscard]] bool serial() const;
    [[nodiscard]] bool equivalence() const { return reflexive() && symmetric() && transitive(); }
};

// Names of worlds, agents and atoms; shared between a model and its updates.
struct signature
{
    std::vector< std::string > worlds;
    std::vector< std::string > agents;
    std::vector< std::string > atoms;

    [[nodiscard]] std::optional< std::size_t > world_index( const std::string& name ) const;
    [[nodiscard]] std::optional< std::size_t > agent_index( const std::string& name ) const;
    [[nodiscard]] std::optional< std::size_t > atom_index( const std::string& name ) const;
    bool operator==( const signature& ) const = default;
};

struct relation_properties
{
    bool reflexive, symmetric, transitive, euclidean, serial, equivalence;
};

class model
{
    std::shared_ptr< const signature > _sig;
    std::vector< relation > _rel;  // per agent
    std::vector< world_set > _val; // per atom

public:
    model( std::shared_ptr< const signature > sig, std::vector< relation > rel, std::vector< world_set > val );

    [[nodiscard]] const signature& sig() const { return *_sig; }
    [[nodiscard]] const std::shared_ptr< const signature >& sig_ptr() const { return _sig; }
    [[nodiscard]] std::size_t world_count() const { return _sig->worlds.size(); }
    [[nodiscard]] std::size_t agent_count() const { return _sig->agents.size(); }
    [[nodiscard]] std::size_t atom_count() const { return _sig->atoms.size(); }

    [[nodiscard]] const relation& rel( std::size_t agent ) const { return _rel[ agent ]; }
    [[nodiscard]] const std::vector< relation >& relations() const { return _rel; }
    [[nodiscard]] const relation& rel( const std::string& agent ) const;
    [[nodiscard]] world_set val( std::size_t atom ) const { return _val[ atom ]; }
    [[nodiscard]] const std::vector< world_set >& valuation() const { return _val; }

    [[nodiscard]] std::size_t world( const std::string& name ) const;
    [[nodiscard]] std::size_t agent( const std::string& name ) const;

    // Intersection of the named agents' relations. Empty group is an error.
    [[nodiscard]] relation distributed( const std::vector< std::string >& group ) const;

    // Same worlds, names and valuation; new relations.
    [[nodiscard]] model with_relations( std::vector< relation > rel ) const;

    bool operator==( const model& o ) const;
};

struct pointed_model
{
    model m;
    std::size_t world;
};

[[nodiscard]] relation_properties properties( const relation& r );

inline relation distributed_relation( const model& m, const std::vector< std::string >& group )
{
    return m.distributed( group );
}
inline world_set image( const relation& r, std::size_t w ) { return r.image( w ); }

// Builds a model from names; unknown names raise the matching error code.
class model_builder
{
    signature _sig;
    std::vector< relation > _rel;
    std::vector< world_set > _val;

public:
    model_builder( std::vector< std::string > worlds, std::vector< std::string > agents,
                   std::vector< std::string > atoms );

    model_builder& edge( const std::string& agent, const std::string& from, const std::string& to );
    model_builder& both( const std::string& agent, const std::string& w, const std::string& u );
    model_builder& loops(); // every agent at every world
    model_builder& truth( const std::string& atom, const std::vector< std::string >& worlds );

    [[nodiscard]] model build() const;
};

struct parsed_model
{
    model m;
    std::optional< std::size_t > point;
};

parsed_model parse_model( const std::string& text );
std::string print_model( const model& m, std::optional< std::size_t > point = {} );

// Structural sanity: sizes agree and no names repeat.
void validate_model( const model& m );

} // namespace dke
