#include "dke/translate.hpp"

#include <unordered_map>

namespace dke
{

formula expand_dhat( const agent_set& g, const formula& chi, const formula& phi )
{
    using namespace f;
    return conj( implies( chi, dist( g, implies( chi, phi ) ) ),
                 implies( neg( chi ), dist( g, implies( neg( chi ), phi ) ) ) );
}

namespace
{

const char* op_name( op k )
{
    switch ( k )
    {
    case op::eee: return "eee";
    case op::see: return "see";
    default: return "sse";
    }
}

// Same update as `u`, applied to a different body.
formula rewrap( const formula& u, formula body )
{
    switch ( u->kind )
    {
    case op::eee: return f::eee( std::move( body ) );
    case op::see: return f::see( u->group, std::move( body ) );
    default: return f::sse( u->group, u->left, std::move( body ) );
    }
}

class translator
{
    agent_set _everyone;
    bool _tracing;
    std::vector< trace_step > _steps;
    std::unordered_map< formula, formula, formula_hash, formula_eq > _memo;

public:
    translator( agent_set everyone, bool tracing ) : _everyone{ std::move( everyone ) }, _tracing{ tracing } {}

    std::vector< trace_step > steps() && { return std::move( _steps ); }

    formula run( const formula& x, const formula& caller, std::size_t parent, std::size_t depth )
    {
        if ( caller && !c_greater( caller, x ) )
            throw error( "measure-violation", "recursive call on '" + to_string( x ) +
                                                      "' is not smaller than '" + to_string( caller ) + "'" );
        std::size_t me = _steps.size();
        if ( _tracing )
            _steps.push_back( { parent, depth, x, "", nullptr } );

        std::string clause;
        formula out;
        if ( auto hit = _memo.find( x ); hit != _memo.end() )
        {
            clause = "memo";
            out = hit->second;
        }
        else
        {
            out = step( x, me, depth, clause );
            _memo.emplace( x, out );
        }
        if ( _tracing )
        {
            _steps[ me ].clause = clause;
            _steps[ me ].output = out;
        }
        return out;
    }

private:
    formula sub( const formula& x, const formula& caller, std::size_t me, std::size_t depth )
    {
        return run( x, caller, _tracing ? me : trace_step::root, depth + 1 );
    }

    formula step( const formula& x, std::size_t me, std::size_t depth, std::string& clause )
    {
        auto go = [ & ]( const formula& y ) { return sub( y, x, me, depth ); };
        switch ( x->kind )
        {
        case op::atom: clause = "atom"; return x;
        case op::top: clause = "top"; return x;
        case op::neg: clause = "neg"; return f::neg( go( x->left ) );
        case op::conj: clause = "conj"; return f::conj( go( x->left ), go( x->right ) );
        case op::implies: clause = "implies"; return f::implies( go( x->left ), go( x->right ) );
        case op::dist: clause = "dist"; return f::dist( x->group, go( x->left ) );
        case op::dhat: clause = "dhat-expand"; return go( expand_dhat( x->group, x->left, x->right ) );
        case op::eee:
        case op::see:
        case op::sse: return update( x, clause, go );
        default: break;
        }
        throw error( "untranslatable", "unexpected connective in '" + to_string( x ) + "'" );
    }

    template < typename Go >
    formula update( const formula& x, std::string& clause, Go&& go )
    {
        const auto& body = x->body();
        std::string name = op_name( x->kind );
        switch ( body->kind )
        {
        case op::atom:
        case op::top: clause = name + "-atom"; return body;
        case op::neg: clause = name + "-neg"; return go( f::neg( rewrap( x, body->left ) ) );
        case op::conj:
            clause = name + "-conj";
            return go( f::conj( rewrap( x, body->left ), rewrap( x, body->right ) ) );
        case op::implies:
            clause = name + "-implies";
            return go( f::implies( rewrap( x, body->left ), rewrap( x, body->right ) ) );
        case op::dist:
        {
            clause = name + "-dist";
            auto inner = rewrap( x, body->left );
            if ( x->kind == op::eee )
                return go( f::dist( _everyone, inner ) );
            auto wide = f::dist( unite( x->group, body->group ), inner );
            if ( x->kind == op::see )
                return go( wide );
            return go( f::conj( wide, f::dhat( body->group, x->left, inner ) ) );
        }
        case op::eee:
        case op::see:
        case op::sse:
        {
            clause = "nested";
            auto inner = go( body );
            return go( rewrap( x, inner ) );
        }
        default: break;
        }
        throw error( "untranslatable", "unexpected connective under an update in '" + to_string( x ) + "'" );
    }
};

translation run_translation( const formula& f, const agent_set& everyone, bool tracing )
{
    auto core = desugar( f );
    auto roster = everyone.empty() ? agents_of( core ) : make_agents( everyone );
    translator t( roster, tracing );
    auto out = desugar( t.run( core, nullptr, trace_step::root, 0 ) );
    if ( !is_static( out ) )
        throw error( "measure-violation", "translation left an update behind" );
    return { out, std::move( t ).steps() };
}

} // namespace

formula translate( const formula& f, const agent_set& everyone ) { return run_translation( f, everyone, false ).result; }

translation translate_traced( const formula& f, const agent_set& everyone )
{
    return run_translation( f, everyone, true );
}

} // namespace dke
