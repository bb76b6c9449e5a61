#include "dke/validity.hpp"
#include "dke/translate.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

namespace dke
{

std::optional< std::uint64_t > model_count( std::size_t worlds, std::size_t agents, std::size_t atoms )
{
    auto bits = worlds * worlds * agents + worlds * atoms;
    if ( bits > 63 )
        return std::nullopt;
    return std::uint64_t{ 1 } << bits;
}

std::shared_ptr< const signature > search_signature( std::size_t worlds, const search_bounds& b )
{
    auto sig = std::make_shared< signature >();
    for ( std::size_t w = 0; w < worlds; ++w )
        sig->worlds.push_back( "w" + std::to_string( w ) );
    sig->agents = b.agents;
    sig->atoms = b.atoms;
    return sig;
}

frame decode_model( std::uint64_t index, std::size_t worlds, std::size_t agents, std::size_t atoms )
{
    frame fr;
    fr.n = worlds;
    fr.agents = agents;
    fr.rows.resize( worlds * agents );
    fr.val.resize( atoms );
    auto row_mask = all_worlds( worlds );
    for ( std::size_t p = 0; p < atoms; ++p )
        fr.val[ p ] = ( index >> ( p * worlds ) ) & row_mask;
    auto base = worlds * atoms;
    for ( std::size_t a = 0; a < agents; ++a )
    {
        auto offset = base + ( agents - 1 - a ) * worlds * worlds;
        for ( std::size_t w = 0; w < worlds; ++w )
            fr.rows[ a * worlds + w ] = ( index >> ( offset + w * worlds ) ) & row_mask;
    }
    return fr;
}

namespace
{

void check_bounds( const search_bounds& b )
{
    if ( b.min_worlds == 0 || b.min_worlds > b.max_worlds )
        throw error( "usage", "world bounds must satisfy 1 <= min <= max" );
    if ( b.max_worlds > max_worlds )
        throw error( "bounds-too-large", "more than 64 worlds" );
    if ( b.agents.size() > 32 )
        throw error( "bounds-too-large", "more than 32 agents" );
    if ( b.sample )
        return;
    auto bits = b.max_worlds * b.max_worlds * b.agents.size() + b.max_worlds * b.atoms.size();
    if ( bits > b.max_bits )
        throw error( "bounds-too-large", std::to_string( bits ) + " bits per model exceed the exhaustive limit of " +
                                                 std::to_string( b.max_bits ) + "; use sampling" );
}

} // namespace

void enumerate_models( const search_bounds& b, const std::function< bool( const frame& ) >& visit )
{
    check_bounds( b );
    auto na = b.agents.size(), np = b.atoms.size();
    if ( b.sample )
    {
        std::mt19937_64 rng( b.sample->seed );
        std::uniform_int_distribution< std::size_t > size( b.min_worlds, b.max_worlds );
        for ( std::size_t i = 0; i < b.sample->count; ++i )
        {
            frame fr;
            fr.n = size( rng );
            fr.agents = na;
            auto mask = all_worlds( fr.n );
            fr.rows.resize( fr.n * na );
            for ( auto& r : fr.rows )
                r = rng() & mask;
            fr.val.resize( np );
            for ( auto& v : fr.val )
                v = rng() & mask;
            if ( !visit( fr ) )
                return;
        }
        return;
    }
    for ( auto n = b.min_worlds; n <= b.max_worlds; ++n )
    {
        auto total = *model_count( n, na, np );
        for ( std::uint64_t k = 0; k < total; ++k )
            if ( !visit( decode_model( k, n, na, np ) ) )
                return;
    }
}

std::vector< model > all_models( const search_bounds& b )
{
    std::vector< model > out;
    std::vector< std::shared_ptr< const signature > > sigs( b.max_worlds + 1 );
    enumerate_models( b, [ & ]( const frame& fr ) {
        if ( !sigs[ fr.n ] )
            sigs[ fr.n ] = search_signature( fr.n, b );
        out.push_back( fr.to_model( sigs[ fr.n ] ) );
        return true;
    } );
    return out;
}

verdict check_validity( const formula& f, const search_bounds& b )
{
    auto sig = search_signature( 1, b );
    compiled c( f, *sig );
    verdict v;
    v.exhaustive = !b.sample;
    enumerate_models( b, [ & ]( const frame& fr ) {
        ++v.models_checked;
        auto holds = c.truth_set( fr );
        if ( holds == fr.everything() )
            return true;
        auto w = static_cast< std::size_t >( std::countr_zero( ~holds & fr.everything() ) );
        auto m = fr.to_model( search_signature( fr.n, b ) );
        if ( satisfies( m, w, f ) )
            throw error( "reverify-failed", "countermodel does not re-verify" );
        v.valid = false;
        v.countermodel = pointed_model{ std::move( m ), w };
        return false;
    } );
    return v;
}

verdict check_equivalence( const formula& a, const formula& b, const search_bounds& bounds )
{
    return check_validity( f::iff( a, b ), bounds );
}

// ---------------------------------------------------------------- schemas

const std::vector< std::string >& schema_names()
{
    static const std::vector< std::string > names = {
        "K_D",   "M_D",     "G_D",     "EEE_p",   "EEE_not", "EEE_and", "EEE_D",   "RE_EEE",  "SEE_p",
        "SEE_not", "SEE_and", "SEE_D", "RE_SEE",  "SSE_p",   "SSE_not", "SSE_and", "SSE_D",   "RE_SSE",
    };
    return names;
}

namespace
{

std::vector< agent_set > subsets( const agent_set& agents, bool with_empty )
{
    std::vector< agent_set > out;
    for ( std::size_t m = with_empty ? 0 : 1; m < ( std::size_t{ 1 } << agents.size() ); ++m )
    {
        agent_set g;
        for ( std::size_t i = 0; i < agents.size(); ++i )
            if ( ( m >> i ) & 1U )
                g.push_back( agents[ i ] );
        out.push_back( g );
    }
    return out;
}

// levels[d] holds the formulas of depth exactly d.
std::vector< std::vector< formula > > pool_levels( std::size_t depth, const schema_roster& r )
{
    std::vector< std::vector< formula > > levels( 1 );
    std::unordered_set< formula, formula_hash, formula_eq > seen;
    for ( const auto& p : r.atoms )
    {
        levels[ 0 ].push_back( f::atom( p ) );
        seen.insert( levels[ 0 ].back() );
    }
    auto groups = subsets( r.agents, false );
    auto updaters = subsets( r.agents, true );
    for ( std::size_t d = 1; d <= depth; ++d )
    {
        std::vector< formula > below;
        for ( const auto& l : levels )
            below.insert( below.end(), l.begin(), l.end() );
        std::vector< formula > next;
        auto add = [ & ]( formula x ) {
            if ( seen.insert( x ).second )
                next.push_back( std::move( x ) );
        };
        for ( const auto& a : below )
        {
            add( f::neg( a ) );
            for ( const auto& g : groups )
                add( f::dist( g, a ) );
            add( f::eee( a ) );
            for ( const auto& s : updaters )
                add( f::see( s, a ) );
            for ( const auto& b : below )
            {
                add( f::conj( a, b ) );
                for ( const auto& s : updaters )
                    add( f::sse( s, b, a ) );
            }
        }
        levels.push_back( std::move( next ) );
    }
    return levels;
}

std::uint64_t name_seed( const std::string& s )
{
    std::uint64_t h = 1469598103934665603ULL;
    for ( unsigned char c : s )
        h = ( h ^ c ) * 1099511628211ULL;
    return h;
}

} // namespace

std::vector< formula > formula_pool( std::size_t depth, const schema_roster& r )
{
    std::vector< formula > out;
    for ( const auto& l : pool_levels( depth, r ) )
        out.insert( out.end(), l.begin(), l.end() );
    return out;
}

std::vector< formula > axiom_instances( const std::string& schema, std::size_t depth, const schema_roster& r,
                                        std::size_t limit )
{
    const auto& names = schema_names();
    if ( std::find( names.begin(), names.end(), schema ) == names.end() )
        throw error( "unknown-schema", "no schema named '" + schema + "'" );
    if ( r.atoms.empty() || r.agents.empty() )
        throw error( "usage", "schemas need at least one agent and one atom" );

    using namespace f;
    auto levels = pool_levels( depth, r );
    auto groups = subsets( r.agents, false );
    auto updaters = subsets( r.agents, true );
    std::mt19937_64 rng( name_seed( schema ) );

    auto pick_index = [ & ]( std::size_t n ) { return std::uniform_int_distribution< std::size_t >( 0, n - 1 )( rng ); };
    bool atoms_only = true; // the first round fills every slot with an atom
    auto any = [ & ] {
        if ( atoms_only )
            return levels[ 0 ][ pick_index( levels[ 0 ].size() ) ];
        const auto& l = levels[ pick_index( levels.size() ) ];
        return l[ pick_index( l.size() ) ];
    };
    auto atom_f = [ & ] { return levels[ 0 ][ pick_index( levels[ 0 ].size() ) ]; };
    auto group = [ & ] { return groups[ pick_index( groups.size() ) ]; };
    auto updater = [ & ] { return updaters[ pick_index( updaters.size() ) ]; };

    // A formula equivalent to x that differs from it syntactically.
    auto variant = [ & ]( const formula& x ) -> formula {
        switch ( pick_index( 4 ) )
        {
        case 0: return translate( x, r.agents );
        case 1: return neg( neg( x ) );
        case 2: return conj( x, x );
        default: return x->kind == op::conj ? conj( x->right, x->left ) : conj( top(), x );
        }
    };
    // A formula valid on every model.
    auto validity = [ & ]() -> formula {
        auto a = any(), b = any();
        auto g = group();
        switch ( pick_index( 4 ) )
        {
        case 0: return implies( a, a );
        case 1: return implies( conj( a, b ), b );
        case 2: return implies( dist( g, implies( a, b ) ), implies( dist( g, a ), dist( g, b ) ) );
        default: return iff( a, translate( a, r.agents ) );
        }
    };

    auto make = [ & ]() -> formula {
        if ( schema == "K_D" )
        {
            auto g = group();
            auto a = any(), b = any();
            return implies( dist( g, implies( a, b ) ), implies( dist( g, a ), dist( g, b ) ) );
        }
        if ( schema == "M_D" )
        {
            auto g = group(), h = group();
            auto a = any();
            return implies( dist( g, a ), dist( unite( g, h ), a ) );
        }
        if ( schema == "G_D" )
            return dist( group(), validity() );

        std::string kind = schema.substr( schema.find( '_' ) + 1 );
        std::string which = schema.rfind( "RE_", 0 ) == 0 ? schema.substr( 3 ) : schema.substr( 0, 3 );
        if ( schema.rfind( "RE_", 0 ) == 0 )
            kind = "RE";
        agent_set s = which == "EEE" ? agent_set{} : updater();
        formula chi = which == "SSE" ? any() : nullptr;
        auto u = [ & ]( formula x ) {
            if ( which == "EEE" )
                return eee( std::move( x ) );
            if ( which == "SEE" )
                return see( s, std::move( x ) );
            return sse( s, chi, std::move( x ) );
        };

        if ( kind == "p" )
        {
            auto p = atom_f();
            return iff( u( p ), p );
        }
        if ( kind == "not" )
        {
            auto a = any();
            return iff( u( neg( a ) ), neg( u( a ) ) );
        }
        if ( kind == "and" )
        {
            auto a = any(), b = any();
            return iff( u( conj( a, b ) ), conj( u( a ), u( b ) ) );
        }
        if ( kind == "D" )
        {
            auto g = group();
            auto a = any();
            if ( which == "EEE" )
                return iff( u( dist( g, a ) ), dist( r.agents, u( a ) ) );
            if ( which == "SEE" )
                return iff( u( dist( g, a ) ), dist( unite( s, g ), u( a ) ) );
            return iff( u( dist( g, a ) ), conj( dist( unite( s, g ), u( a ) ), dhat( g, chi, u( a ) ) ) );
        }
        auto a = any();
        return iff( u( a ), u( variant( a ) ) );
    };

    std::vector< formula > out;
    std::unordered_set< formula, formula_hash, formula_eq > seen;
    for ( std::size_t attempt = 0; attempt < limit * 50 && out.size() < limit; ++attempt )
    {
        atoms_only = attempt < 100;
        auto x = make();
        if ( seen.insert( x ).second )
            out.push_back( x );
    }
    return out;
}

} // namespace dke
