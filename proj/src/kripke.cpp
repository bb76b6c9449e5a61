#include "dke/kripke.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace dke
{

relation relation::full( std::size_t n )
{
    relation r( n );
    for ( auto& row : r._rows )
        row = all_worlds( n );
    return r;
}

relation relation::identity( std::size_t n )
{
    relation r( n );
    for ( std::size_t w = 0; w < n; ++w )
        r.set( w, w );
    return r;
}

void relation::set( std::size_t w, std::size_t u, bool on )
{
    if ( on )
        _rows[ w ] |= world_set{ 1 } << u;
    else
        _rows[ w ] &= ~( world_set{ 1 } << u );
}

relation& relation::operator&=( const relation& o )
{
    for ( std::size_t w = 0; w < _rows.size(); ++w )
        _rows[ w ] &= o._rows[ w ];
    return *this;
}

relation& relation::operator|=( const relation& o )
{
    for ( std::size_t w = 0; w < _rows.size(); ++w )
        _rows[ w ] |= o._rows[ w ];
    return *this;
}

relation& relation::operator-=( const relation& o )
{
    for ( std::size_t w = 0; w < _rows.size(); ++w )
        _rows[ w ] &= ~o._rows[ w ];
    return *this;
}

relation relation::operator~() const
{
    relation r( size() );
    for ( std::size_t w = 0; w < size(); ++w )
        r._rows[ w ] = ~_rows[ w ] & all_worlds( size() );
    return r;
}

bool relation::subset_of( const relation& o ) const
{
    for ( std::size_t w = 0; w < _rows.size(); ++w )
        if ( _rows[ w ] & ~o._rows[ w ] )
            return false;
    return true;
}

std::size_t relation::count() const
{
    std::size_t c = 0;
    for ( auto row : _rows )
        c += std::popcount( row );
    return c;
}

std::vector< std::pair< std::size_t, std::size_t > > relation::pairs() const
{
    std::vector< std::pair< std::size_t, std::size_t > > out;
    for ( std::size_t w = 0; w < size(); ++w )
        for ( std::size_t u = 0; u < size(); ++u )
            if ( test( w, u ) )
                out.emplace_back( w, u );
    return out;
}

bool relation::reflexive() const
{
    for ( std::size_t w = 0; w < size(); ++w )
        if ( !test( w, w ) )
            return false;
    return true;
}

bool relation::symmetric() const
{
    for ( auto [ w, u ] : pairs() )
        if ( !test( u, w ) )
            return false;
    return true;
}

bool relation::transitive() const
{
    for ( std::size_t w = 0; w < size(); ++w )
        for ( std::size_t u = 0; u < size(); ++u )
            if ( test( w, u ) && ( _rows[ u ] & ~_rows[ w ] ) )
                return false;
    return true;
}

bool relation::euclidean() const
{
    // wRu and wRv imply uRv
    for ( std::size_t w = 0; w < size(); ++w )
        for ( std::size_t u = 0; u < size(); ++u )
            if ( test( w, u ) && ( _rows[ w ] & ~_rows[ u ] ) )
                return false;
    return true;
}

bool relation::serial() const
{
    return std::all_of( _rows.begin(), _rows.end(), []( world_set r ) { return r != 0; } );
}

relation_properties properties( const relation& r )
{
    return { r.reflexive(), r.symmetric(), r.transitive(), r.euclidean(), r.serial(), r.equivalence() };
}

namespace
{

std::optional< std::size_t > find_name( const std::vector< std::string >& names, const std::string& n )
{
    auto it = std::find( names.begin(), names.end(), n );
    if ( it == names.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - names.begin() );
}

void check_unique( const std::vector< std::string >& names, const char* what )
{
    std::set< std::string > seen;
    for ( const auto& n : names )
        if ( !seen.insert( n ).second )
            throw error( "duplicate-name", std::string( what ) + " '" + n + "' declared twice" );
}

} // namespace

std::optional< std::size_t > signature::world_index( const std::string& name ) const { return find_name( worlds, name ); }
std::optional< std::size_t > signature::agent_index( const std::string& name ) const { return find_name( agents, name ); }
std::optional< std::size_t > signature::atom_index( const std::string& name ) const { return find_name( atoms, name ); }

model::model( std::shared_ptr< const signature > sig, std::vector< relation > rel, std::vector< world_set > val )
    : _sig{ std::move( sig ) }, _rel{ std::move( rel ) }, _val{ std::move( val ) }
{
    validate_model( *this );
}

const relation& model::rel( const std::string& agent ) const { return _rel[ this->agent( agent ) ]; }

std::size_t model::world( const std::string& name ) const
{
    if ( auto i = _sig->world_index( name ) )
        return *i;
    throw error( "dangling-world", "no world named '" + name + "'" );
}

std::size_t model::agent( const std::string& name ) const
{
    if ( auto i = _sig->agent_index( name ) )
        return *i;
    throw error( "unknown-agent", "no agent named '" + name + "'" );
}

relation model::distributed( const std::vector< std::string >& group ) const
{
    if ( group.empty() )
        throw error( "empty-group", "distributed knowledge needs at least one agent" );
    relation r = relation::full( world_count() );
    for ( const auto& a : group )
        r &= rel( a );
    return r;
}

model model::with_relations( std::vector< relation > rel ) const { return model( _sig, std::move( rel ), _val ); }

bool model::operator==( const model& o ) const
{
    return ( _sig == o._sig || *_sig == *o._sig ) && _rel == o._rel && _val == o._val;
}

void validate_model( const model& m )
{
    const auto& s = m.sig();
    std::size_t n = s.worlds.size();
    if ( n == 0 )
        throw error( "empty-model", "a model needs at least one world" );
    if ( n > max_worlds )
        throw error( "too-many-worlds", std::to_string( n ) + " worlds exceed the limit of 64" );
    check_unique( s.worlds, "world" );
    check_unique( s.agents, "agent" );
    check_unique( s.atoms, "atom" );
    if ( m.relations().size() != s.agents.size() )
        throw error( "missing-agent-relation", "relation count does not match the agent roster" );
    for ( const auto& r : m.relations() )
        if ( r.size() != n )
            throw error( "dangling-world", "relation is sized for a different world count" );
    if ( m.valuation().size() != s.atoms.size() )
        throw error( "unknown-atom", "valuation does not match the atom roster" );
    for ( auto v : m.valuation() )
        if ( v & ~all_worlds( n ) )
            throw error( "dangling-world", "valuation mentions a world outside the model" );
}

model_builder::model_builder( std::vector< std::string > worlds, std::vector< std::string > agents,
                              std::vector< std::string > atoms )
    : _sig{ std::move( worlds ), std::move( agents ), std::move( atoms ) }
{
    _rel.assign( _sig.agents.size(), relation( _sig.worlds.size() ) );
    _val.assign( _sig.atoms.size(), 0 );
}

namespace
{

std::size_t need( std::optional< std::size_t > i, const char* code, const std::string& name )
{
    if ( !i )
        throw error( code, "'" + name + "' is not declared" );
    return *i;
}

} // namespace

model_builder& model_builder::edge( const std::string& agent, const std::string& from, const std::string& to )
{
    auto a = need( _sig.agent_index( agent ), "unknown-agent", agent );
    _rel[ a ].set( need( _sig.world_index( from ), "dangling-world", from ),
                   need( _sig.world_index( to ), "dangling-world", to ) );
    return *this;
}

model_builder& model_builder::both( const std::string& agent, const std::string& w, const std::string& u )
{
    return edge( agent, w, u ).edge( agent, u, w );
}

model_builder& model_builder::loops()
{
    for ( auto& r : _rel )
        for ( std::size_t w = 0; w < r.size(); ++w )
            r.set( w, w );
    return *this;
}

model_builder& model_builder::truth( const std::string& atom, const std::vector< std::string >& worlds )
{
    auto p = need( _sig.atom_index( atom ), "unknown-atom", atom );
    for ( const auto& w : worlds )
        _val[ p ] |= world_set{ 1 } << need( _sig.world_index( w ), "dangling-world", w );
    return *this;
}

model model_builder::build() const
{
    return model( std::make_shared< signature >( _sig ), _rel, _val );
}

namespace
{

std::vector< std::string > words( const std::string& s )
{
    std::istringstream in( s );
    std::vector< std::string > out;
    for ( std::string w; in >> w; )
        out.push_back( w );
    return out;
}

std::string trim( const std::string& s )
{
    auto b = s.find_first_not_of( " \t\r" );
    if ( b == std::string::npos )
        return "";
    auto e = s.find_last_not_of( " \t\r" );
    return s.substr( b, e - b + 1 );
}

} // namespace

parsed_model parse_model( const std::string& text )
{
    std::optional< std::vector< std::string > > worlds, agents, atoms;
    std::map< std::string, std::vector< std::string > > rels, vals;
    std::optional< std::string > point;

    std::istringstream in( text );
    std::size_t lineno = 0;
    for ( std::string line; std::getline( in, line ); )
    {
        ++lineno;
        line = trim( line.substr( 0, line.find( '#' ) ) );
        if ( line.empty() )
            continue;
        auto colon = line.find( ':' );
        if ( colon == std::string::npos )
            throw error( "model-syntax", "line " + std::to_string( lineno ) + ": expected 'key: values'" );
        auto key = words( line.substr( 0, colon ) );
        auto rest = words( line.substr( colon + 1 ) );
        auto where = "line " + std::to_string( lineno );

        auto once = [ & ]( auto& slot ) {
            if ( key.size() != 1 )
                throw error( "model-syntax", where + ": malformed key" );
            if ( slot )
                throw error( "model-syntax", where + ": '" + key[ 0 ] + "' given twice" );
            slot = rest;
        };

        if ( key.empty() )
            throw error( "model-syntax", where + ": missing key" );
        if ( key[ 0 ] == "worlds" )
            once( worlds );
        else if ( key[ 0 ] == "agents" )
            once( agents );
        else if ( key[ 0 ] == "atoms" )
            once( atoms );
        else if ( key[ 0 ] == "point" )
        {
            if ( key.size() != 1 || rest.size() != 1 || point )
                throw error( "model-syntax", where + ": 'point' takes exactly one world" );
            point = rest[ 0 ];
        }
        else if ( key[ 0 ] == "rel" || key[ 0 ] == "val" )
        {
            if ( key.size() != 2 )
                throw error( "model-syntax", where + ": expected '" + key[ 0 ] + " NAME:'" );
            auto& dst = key[ 0 ] == "rel" ? rels : vals;
            if ( dst.count( key[ 1 ] ) )
                throw error( "model-syntax", where + ": '" + key[ 0 ] + " " + key[ 1 ] + "' given twice" );
            dst[ key[ 1 ] ] = rest;
        }
        else
            throw error( "unknown-key", where + ": unknown key '" + key[ 0 ] + "'" );
    }

    if ( !worlds )
        throw error( "model-syntax", "missing 'worlds:' line" );
    model_builder b( *worlds, agents.value_or( std::vector< std::string >{} ),
                     atoms.value_or( std::vector< std::string >{} ) );
    signature probe{ *worlds, agents.value_or( std::vector< std::string >{} ),
                     atoms.value_or( std::vector< std::string >{} ) };

    for ( const auto& [ agent, pairs ] : rels )
    {
        if ( !probe.agent_index( agent ) )
            throw error( "unknown-agent", "relation given for undeclared agent '" + agent + "'" );
        for ( const auto& p : pairs )
        {
            auto dash = p.find( '-' );
            if ( dash == std::string::npos )
                throw error( "model-syntax", "edge '" + p + "' is not of the form w-u" );
            b.edge( agent, p.substr( 0, dash ), p.substr( dash + 1 ) );
        }
    }
    for ( const auto& a : probe.agents )
        if ( !rels.count( a ) )
            throw error( "missing-agent-relation", "no 'rel " + a + ":' line" );
    for ( const auto& [ atom, ws ] : vals )
        b.truth( atom, ws );

    parsed_model out{ b.build(), std::nullopt };
    if ( point )
        out.point = out.m.world( *point );
    return out;
}

std::string print_model( const model& m, std::optional< std::size_t > point )
{
    const auto& s = m.sig();
    auto join = []( const std::vector< std::string >& v ) {
        std::string out;
        for ( const auto& x : v )
            out += " " + x;
        return out;
    };
    std::string out = "worlds:" + join( s.worlds ) + "\n";
    out += "agents:" + join( s.agents ) + "\n";
    out += "atoms:" + join( s.atoms ) + "\n";
    for ( std::size_t a = 0; a < s.agents.size(); ++a )
    {
        out += "rel " + s.agents[ a ] + ":";
        for ( auto [ w, u ] : m.rel( a ).pairs() )
            out += " " + s.worlds[ w ] + "-" + s.worlds[ u ];
        out += "\n";
    }
    for ( std::size_t p = 0; p < s.atoms.size(); ++p )
    {
        out += "val " + s.atoms[ p ] + ":";
        for ( std::size_t w = 0; w < s.worlds.size(); ++w )
            if ( has_world( m.val( p ), w ) )
                out += " " + s.worlds[ w ];
        out += "\n";
    }
    if ( point )
        out += "point: " + s.worlds[ *point ] + "\n";
    return out;
}

} // namespace dke
