#include "dke/semantics.hpp"

#include <bit>

namespace dke
{

frame frame::of( const model& m )
{
    frame fr;
    fr.n = m.world_count();
    fr.agents = m.agent_count();
    fr.rows.resize( fr.n * fr.agents );
    for ( std::size_t a = 0; a < fr.agents; ++a )
        for ( std::size_t w = 0; w < fr.n; ++w )
            fr.rows[ a * fr.n + w ] = m.rel( a ).image( w );
    fr.val = m.valuation();
    return fr;
}

model frame::to_model( const std::shared_ptr< const signature >& sig ) const
{
    std::vector< relation > rel( agents, relation( n ) );
    for ( std::size_t a = 0; a < agents; ++a )
        for ( std::size_t w = 0; w < n; ++w )
            rel[ a ].row( w ) = row( a, w );
    return model( sig, std::move( rel ), val );
}

world_set distributed_row( const frame& fr, agent_mask g, std::size_t w )
{
    world_set r = fr.everything();
    for ( ; g; g &= g - 1 )
        r &= fr.row( static_cast< std::size_t >( std::countr_zero( g ) ), w );
    return r;
}

frame frame_eee( const frame& fr, agent_mask everyone )
{
    frame out = fr;
    for ( std::size_t w = 0; w < fr.n; ++w )
    {
        auto d = distributed_row( fr, everyone, w );
        for ( std::size_t a = 0; a < fr.agents; ++a )
            out.rows[ a * fr.n + w ] = d;
    }
    return out;
}

frame frame_see( const frame& fr, agent_mask s )
{
    frame out = fr;
    for ( std::size_t w = 0; w < fr.n; ++w )
    {
        auto d = distributed_row( fr, s, w );
        for ( std::size_t a = 0; a < fr.agents; ++a )
            out.rows[ a * fr.n + w ] &= d;
    }
    return out;
}

frame frame_sse( const frame& fr, agent_mask s, world_set chi )
{
    frame out = fr;
    auto other = fr.everything() & ~chi;
    for ( std::size_t w = 0; w < fr.n; ++w )
    {
        auto keep = distributed_row( fr, s, w ) | ( has_world( chi, w ) ? chi : other );
        for ( std::size_t a = 0; a < fr.agents; ++a )
            out.rows[ a * fr.n + w ] &= keep;
    }
    return out;
}

namespace
{

agent_mask mask_of( const agent_set& g, const signature& sig )
{
    agent_mask m = 0;
    for ( const auto& a : g )
    {
        auto i = sig.agent_index( a );
        if ( !i )
            throw error( "unknown-agent", "agent '" + a + "' is not in the model" );
        m |= agent_mask{ 1 } << *i;
    }
    return m;
}

} // namespace

compiled::compiled( const formula& f, const signature& sig )
{
    if ( sig.agents.size() > 32 )
        throw error( "too-many-agents", "at most 32 agents are supported" );
    _everyone = sig.agents.size() == 32 ? ~agent_mask{ 0 } : ( agent_mask{ 1 } << sig.agents.size() ) - 1;
    _root = add( f, sig );
}

std::int32_t compiled::add( const formula& f, const signature& sig )
{
    cnode c{ f->kind };
    switch ( f->kind )
    {
    case op::atom:
    {
        auto i = sig.atom_index( f->name );
        if ( !i )
            throw error( "unknown-atom", "atom '" + f->name + "' is not in the model" );
        c.atom = static_cast< std::uint32_t >( *i );
        break;
    }
    case op::know:
        c.kind = op::dist;
        c.mask = mask_of( { f->name }, sig );
        break;
    case op::dist:
    case op::see:
    case op::sse:
    case op::dhat: c.mask = mask_of( f->group, sig ); break;
    default: break;
    }
    if ( f->left )
        c.left = add( f->left, sig );
    if ( f->right )
        c.right = add( f->right, sig );
    _nodes.push_back( c );
    return static_cast< std::int32_t >( _nodes.size() - 1 );
}

world_set compiled::eval( std::int32_t i, const frame& fr ) const
{
    const auto& c = _nodes[ static_cast< std::size_t >( i ) ];
    auto all = fr.everything();
    switch ( c.kind )
    {
    case op::atom: return fr.val[ c.atom ];
    case op::top: return all;
    case op::bot: return 0;
    case op::neg: return all & ~eval( c.left, fr );
    case op::conj: return eval( c.left, fr ) & eval( c.right, fr );
    case op::disj: return eval( c.left, fr ) | eval( c.right, fr );
    case op::implies: return all & ( ~eval( c.left, fr ) | eval( c.right, fr ) );
    case op::iff: return all & ~( eval( c.left, fr ) ^ eval( c.right, fr ) );
    case op::know:
    case op::dist:
    {
        auto s = eval( c.left, fr );
        world_set out = 0;
        for ( std::size_t w = 0; w < fr.n; ++w )
            if ( !( distributed_row( fr, c.mask, w ) & ~s ) )
                out |= world_set{ 1 } << w;
        return out;
    }
    case op::dhat:
    {
        auto chi = eval( c.left, fr ), phi = eval( c.right, fr );
        auto other = all & ~chi;
        world_set out = 0;
        for ( std::size_t w = 0; w < fr.n; ++w )
        {
            auto reach = distributed_row( fr, c.mask, w ) & ( has_world( chi, w ) ? chi : other );
            if ( !( reach & ~phi ) )
                out |= world_set{ 1 } << w;
        }
        return out;
    }
    case op::eee: return eval( c.left, frame_eee( fr, _everyone ) );
    case op::see: return eval( c.left, frame_see( fr, c.mask ) );
    case op::sse: return eval( c.right, frame_sse( fr, c.mask, eval( c.left, fr ) ) );
    }
    return 0;
}

world_set truth_set( const model& m, const formula& f ) { return compiled( f, m.sig() ).truth_set( frame::of( m ) ); }

bool satisfies( const model& m, std::size_t world, const formula& f )
{
    if ( world >= m.world_count() )
        throw error( "dangling-world", "world index out of range" );
    return has_world( truth_set( m, f ), world );
}

bool satisfies( const pointed_model& pm, const formula& f ) { return satisfies( pm.m, pm.world, f ); }

} // namespace dke
