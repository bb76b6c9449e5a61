#include "dke/transforms.hpp"
#include "dke/semantics.hpp"

#include <algorithm>
#include <sstream>

namespace dke
{

relation fullig( const model& m, const formula& chi )
{
    auto n = m.world_count();
    auto yes = truth_set( m, chi ), no = all_worlds( n ) & ~yes;
    relation r( n );
    for ( std::size_t w = 0; w < n; ++w )
        r.row( w ) = has_world( yes, w ) ? no : yes;
    return r;
}

relation knonfu( const model& m, const formula& chi ) { return ~fullig( m, chi ); }

relation group_relation( const model& m, const agent_set& s )
{
    return s.empty() ? relation::full( m.world_count() ) : m.distributed( s );
}

model apply_eee( const model& m )
{
    auto all = m.sig().agents;
    auto d = group_relation( m, all );
    return m.with_relations( std::vector< relation >( m.agent_count(), d ) );
}

model apply_see( const model& m, const agent_set& s )
{
    auto d = group_relation( m, s );
    auto rel = m.relations();
    for ( auto& r : rel )
        r &= d;
    return m.with_relations( std::move( rel ) );
}

model apply_sse_intersection( const model& m, const agent_set& s, const formula& chi )
{
    auto keep = group_relation( m, s ) | knonfu( m, chi );
    auto rel = m.relations();
    for ( auto& r : rel )
        r &= keep;
    return m.with_relations( std::move( rel ) );
}

model apply_sse( const model& m, const agent_set& s, const formula& chi )
{
    auto split = fullig( m, chi );
    relation drop( m.world_count() );
    for ( const auto& j : s )
        drop |= ~m.rel( j ) & split;
    auto rel = m.relations();
    for ( auto& r : rel )
        r -= drop;
    auto out = m.with_relations( std::move( rel ) );
    if ( !( out == apply_sse_intersection( m, s, chi ) ) )
        throw error( "definition-mismatch", "subtractive and intersection forms of the update disagree" );
    return out;
}

reading parse_reading( const std::string& spec )
{
    reading out;
    std::istringstream in( spec );
    for ( std::string part; std::getline( in, part, ';' ); )
    {
        if ( part.empty() )
            continue;
        auto colon = part.find( ':' );
        if ( colon == std::string::npos || colon == 0 )
            throw error( "usage", "reading entry '" + part + "' is not of the form agent:a,b" );
        agent_set g;
        std::istringstream list( part.substr( colon + 1 ) );
        for ( std::string a; std::getline( list, a, ',' ); )
            if ( !a.empty() )
                g.push_back( a );
        auto who = part.substr( 0, colon );
        if ( out.count( who ) )
            throw error( "usage", "agent '" + who + "' appears twice in the reading" );
        out[ who ] = make_agents( g );
    }
    return out;
}

model apply_read( const model& m, const reading& alpha )
{
    for ( const auto& [ who, _ ] : alpha )
        (void)m.agent( who ); // throws unknown-agent
    std::vector< relation > rel;
    for ( const auto& i : m.sig().agents )
    {
        auto it = alpha.find( i );
        if ( it == alpha.end() )
            throw error( "alpha-incomplete", "no reading given for agent '" + i + "'" );
        const auto& g = it->second;
        if ( std::find( g.begin(), g.end(), i ) == g.end() )
            throw error( "alpha-not-reflexive", "agent '" + i + "' must read its own information" );
        rel.push_back( m.distributed( g ) );
    }
    return m.with_relations( std::move( rel ) );
}

pointed_model apply_eee( const pointed_model& pm ) { return { apply_eee( pm.m ), pm.world }; }
pointed_model apply_see( const pointed_model& pm, const agent_set& s ) { return { apply_see( pm.m, s ), pm.world }; }

pointed_model apply_sse( const pointed_model& pm, const agent_set& s, const formula& chi )
{
    return { apply_sse( pm.m, s, chi ), pm.world };
}

} // namespace dke
