#pragma once

#include "dke/error.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dke
{

// Sorted, duplicate-free list of agent names.
using agent_set = std::vector< std::string >;

agent_set make_agents( std::vector< std::string > names );
agent_set unite( const agent_set& a, const agent_set& b );

enum class op
{
    atom, top, bot, neg, conj, disj, implies, iff,
    dist,  // D_G phi
    know,  // K_i phi
    eee,   // [eee] phi
    see,   // [see S] phi
    sse,   // [sse S | chi] phi
    dhat,  // Dhat{G | chi} phi
};

struct node;
using formula = std::shared_ptr< const node >;

struct node
{
    op kind;
    std::string name; // atom name, or the agent of K
    agent_set group;  // D, Dhat, see, sse
    formula left;     // sole child of unary nodes; chi of sse/dhat
    formula right;    // second child of binary nodes; body of sse/dhat
    std::size_t hash;

    [[nodiscard]] const formula& body() const { return right ? right : left; }
};

bool operator==( const node& a, const node& b );
bool same( const formula& a, const formula& b );

struct formula_hash
{
    std::size_t operator()( const formula& f ) const { return f->hash; }
};

struct formula_eq
{
    bool operator()( const formula& a, const formula& b ) const { return same( a, b ); }
};

namespace f
{

formula atom( const std::string& name );
formula top();
formula bot();
formula neg( formula a );
formula conj( formula a, formula b );
formula disj( formula a, formula b );
formula implies( formula a, formula b );
formula iff( formula a, formula b );
formula dist( agent_set g, formula a );
formula know( const std::string& agent, formula a );
formula eee( formula a );
formula see( agent_set s, formula a );
formula sse( agent_set s, formula chi, formula a );
formula dhat( agent_set g, formula chi, formula a );

// Right-nested conjunction; true for an empty list.
formula all( const std::vector< formula >& parts );
formula any( const std::vector< formula >& parts );

} // namespace f

formula parse_formula( const std::string& text );
std::string to_string( const formula& f );
inline formula parse( const std::string& text ) { return parse_formula( text ); }
inline std::string print( const formula& f ) { return to_string( f ); }

bool is_dynamic_op( op k );
bool is_static( const formula& f );
std::size_t depth( const formula& f );
std::size_t size( const formula& f );
agent_set agents_of( const formula& f );
std::vector< std::string > atoms_of( const formula& f );

// Rewrites into the core language: atoms, true, ~, &, D, [eee], [see], [sse].
formula desugar( const formula& f );

// Complexity measures. K and false are rewritten first; the other derived
// connectives are measured as primitives.
std::size_t nsc( const formula& f );
std::size_t ndc( const formula& f );
bool c_greater( const formula& a, const formula& b );

std::vector< formula > ssub( const formula& f );

} // namespace dke
