#include "dke/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <unordered_set>

namespace dke
{

agent_set make_agents( std::vector< std::string > names )
{
    std::sort( names.begin(), names.end() );
    names.erase( std::unique( names.begin(), names.end() ), names.end() );
    return names;
}

agent_set unite( const agent_set& a, const agent_set& b )
{
    agent_set out;
    std::set_union( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
    return out;
}

namespace
{

std::size_t mix( std::size_t seed, std::size_t v )
{
    return seed ^ ( v + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 ) );
}

formula make( op kind, std::string name, agent_set group, formula left, formula right )
{
    std::size_t h = static_cast< std::size_t >( kind ) * 0x100000001b3ULL;
    h = mix( h, std::hash< std::string >{}( name ) );
    for ( const auto& a : group )
        h = mix( h, std::hash< std::string >{}( a ) );
    h = mix( h, left ? left->hash : 17 );
    h = mix( h, right ? right->hash : 31 );
    return std::make_shared< const node >(
            node{ kind, std::move( name ), std::move( group ), std::move( left ), std::move( right ), h } );
}

void need_group( const agent_set& g )
{
    if ( g.empty() )
        throw error( "empty-group", "D needs a nonempty group" );
}

} // namespace

bool operator==( const node& a, const node& b )
{
    return a.hash == b.hash && a.kind == b.kind && a.name == b.name && a.group == b.group &&
           same( a.left, b.left ) && same( a.right, b.right );
}

bool same( const formula& a, const formula& b )
{
    if ( a == b )
        return true;
    if ( !a || !b )
        return false;
    return *a == *b;
}

namespace f
{

formula atom( const std::string& name ) { return make( op::atom, name, {}, nullptr, nullptr ); }
formula top() { return make( op::top, "", {}, nullptr, nullptr ); }
formula bot() { return make( op::bot, "", {}, nullptr, nullptr ); }
formula neg( formula a ) { return make( op::neg, "", {}, std::move( a ), nullptr ); }
formula conj( formula a, formula b ) { return make( op::conj, "", {}, std::move( a ), std::move( b ) ); }
formula disj( formula a, formula b ) { return make( op::disj, "", {}, std::move( a ), std::move( b ) ); }
formula implies( formula a, formula b ) { return make( op::implies, "", {}, std::move( a ), std::move( b ) ); }
formula iff( formula a, formula b ) { return make( op::iff, "", {}, std::move( a ), std::move( b ) ); }

formula dist( agent_set g, formula a )
{
    g = make_agents( std::move( g ) );
    need_group( g );
    return make( op::dist, "", std::move( g ), std::move( a ), nullptr );
}

formula know( const std::string& agent, formula a )
{
    if ( agent.empty() )
        throw error( "empty-group", "K needs an agent" );
    return make( op::know, agent, {}, std::move( a ), nullptr );
}

formula eee( formula a ) { return make( op::eee, "", {}, std::move( a ), nullptr ); }
formula see( agent_set s, formula a ) { return make( op::see, "", make_agents( std::move( s ) ), std::move( a ), nullptr ); }

formula sse( agent_set s, formula chi, formula a )
{
    return make( op::sse, "", make_agents( std::move( s ) ), std::move( chi ), std::move( a ) );
}

formula dhat( agent_set g, formula chi, formula a )
{
    g = make_agents( std::move( g ) );
    need_group( g );
    return make( op::dhat, "", std::move( g ), std::move( chi ), std::move( a ) );
}

formula all( const std::vector< formula >& parts )
{
    if ( parts.empty() )
        return top();
    formula out = parts.back();
    for ( auto it = parts.rbegin() + 1; it != parts.rend(); ++it )
        out = conj( *it, out );
    return out;
}

formula any( const std::vector< formula >& parts )
{
    if ( parts.empty() )
        return bot();
    formula out = parts.back();
    for ( auto it = parts.rbegin() + 1; it != parts.rend(); ++it )
        out = disj( *it, out );
    return out;
}

} // namespace f

// ---------------------------------------------------------------- parsing

namespace
{

enum class tok
{
    ident, lpar, rpar, lbrace, rbrace, lbrack, rbrack, comma, tilde, amp, bar, arrow, darrow, end
};

struct token
{
    tok kind;
    std::string text;
    std::size_t pos;
};

std::vector< token > lex( const std::string& s )
{
    std::vector< token > out;
    std::size_t i = 0;
    while ( i < s.size() )
    {
        char c = s[ i ];
        if ( std::isspace( static_cast< unsigned char >( c ) ) )
        {
            ++i;
            continue;
        }
        if ( std::isalpha( static_cast< unsigned char >( c ) ) )
        {
            std::size_t j = i;
            while ( j < s.size() && ( std::isalnum( static_cast< unsigned char >( s[ j ] ) ) || s[ j ] == '_' ) )
                ++j;
            out.push_back( { tok::ident, s.substr( i, j - i ), i } );
            i = j;
            continue;
        }
        auto one = [ & ]( tok k ) {
            out.push_back( { k, std::string( 1, c ), i } );
            ++i;
        };
        switch ( c )
        {
        case '(': one( tok::lpar ); break;
        case ')': one( tok::rpar ); break;
        case '{': one( tok::lbrace ); break;
        case '}': one( tok::rbrace ); break;
        case '[': one( tok::lbrack ); break;
        case ']': one( tok::rbrack ); break;
        case ',': one( tok::comma ); break;
        case '~': one( tok::tilde ); break;
        case '&': one( tok::amp ); break;
        case '|': one( tok::bar ); break;
        case '-':
            if ( s.compare( i, 2, "->" ) != 0 )
                throw error( "syntax-error", "expected '->'", i );
            out.push_back( { tok::arrow, "->", i } );
            i += 2;
            break;
        case '<':
            if ( s.compare( i, 3, "<->" ) != 0 )
                throw error( "syntax-error", "expected '<->'", i );
            out.push_back( { tok::darrow, "<->", i } );
            i += 3;
            break;
        default:
            throw error( "syntax-error", std::string( "unexpected character '" ) + c + "'", i );
        }
    }
    out.push_back( { tok::end, "", s.size() } );
    return out;
}

bool lower_name( const std::string& s )
{
    if ( s.empty() || !std::islower( static_cast< unsigned char >( s[ 0 ] ) ) )
        return false;
    return std::all_of( s.begin(), s.end(), []( char c ) {
        return std::islower( static_cast< unsigned char >( c ) ) || std::isdigit( static_cast< unsigned char >( c ) ) ||
               c == '_';
    } );
}

const std::set< std::string > keywords = { "true", "false", "eee", "see", "sse" };

class parser
{
    std::vector< token > _t;
    std::size_t _i = 0;

    const token& peek() const { return _t[ _i ]; }

    [[noreturn]] void fail( const std::string& what ) const
    {
        const auto& t = peek();
        throw error( "syntax-error", what + ( t.kind == tok::end ? " at end of input" : ", found '" + t.text + "'" ),
                     t.pos );
    }

    bool eat( tok k )
    {
        if ( peek().kind != k )
            return false;
        ++_i;
        return true;
    }

    void expect( tok k, const char* what )
    {
        if ( !eat( k ) )
            fail( std::string( "expected " ) + what );
    }

    std::string agent_name()
    {
        if ( peek().kind != tok::ident || !lower_name( peek().text ) || keywords.count( peek().text ) )
            fail( "expected an agent name" );
        return _t[ _i++ ].text;
    }

    // Comma-separated agents up to (not including) one of the stop tokens.
    agent_set agents( tok stop1, tok stop2 )
    {
        agent_set out;
        if ( peek().kind == stop1 || peek().kind == stop2 )
            return out;
        out.push_back( agent_name() );
        while ( eat( tok::comma ) )
            out.push_back( agent_name() );
        return out;
    }

public:
    explicit parser( const std::string& s ) : _t( lex( s ) ) {}

    formula whole()
    {
        auto f = iff();
        if ( peek().kind != tok::end )
            fail( "expected end of formula" );
        return f;
    }

    formula iff()
    {
        auto a = imp();
        while ( eat( tok::darrow ) )
            a = f::iff( a, imp() );
        return a;
    }

    formula imp()
    {
        auto a = disj();
        if ( eat( tok::arrow ) )
            return f::implies( a, imp() );
        return a;
    }

    formula disj()
    {
        auto a = conj();
        while ( eat( tok::bar ) )
            a = f::disj( a, conj() );
        return a;
    }

    formula conj()
    {
        auto a = unary();
        while ( eat( tok::amp ) )
            a = f::conj( a, unary() );
        return a;
    }

    formula unary()
    {
        const auto& t = peek();
        if ( eat( tok::tilde ) )
            return f::neg( unary() );
        if ( t.kind == tok::lbrack )
        {
            ++_i;
            if ( peek().kind != tok::ident )
                fail( "expected eee, see or sse" );
            auto which = _t[ _i++ ].text;
            if ( which == "eee" )
            {
                expect( tok::rbrack, "']'" );
                return f::eee( unary() );
            }
            if ( which == "see" )
            {
                auto s = agents( tok::rbrack, tok::rbrack );
                expect( tok::rbrack, "']'" );
                return f::see( s, unary() );
            }
            if ( which == "sse" )
            {
                auto s = agents( tok::bar, tok::bar );
                expect( tok::bar, "'|'" );
                auto chi = iff();
                expect( tok::rbrack, "']'" );
                return f::sse( s, chi, unary() );
            }
            --_i;
            fail( "expected eee, see or sse" );
        }
        if ( t.kind == tok::ident && t.text.rfind( "K_", 0 ) == 0 )
        {
            auto pos = t.pos;
            auto agent = t.text.substr( 2 );
            if ( !lower_name( agent ) )
                throw error( "syntax-error", "malformed agent in '" + t.text + "'", pos );
            ++_i;
            return f::know( agent, unary() );
        }
        if ( t.kind == tok::ident && t.text == "D" )
        {
            auto pos = t.pos;
            ++_i;
            expect( tok::lbrace, "'{'" );
            auto g = agents( tok::rbrace, tok::rbrace );
            expect( tok::rbrace, "'}'" );
            if ( g.empty() )
                throw error( "empty-group", "D{} has no agents", pos );
            return f::dist( g, unary() );
        }
        if ( t.kind == tok::ident && t.text == "Dhat" )
        {
            auto pos = t.pos;
            ++_i;
            expect( tok::lbrace, "'{'" );
            auto g = agents( tok::bar, tok::bar );
            expect( tok::bar, "'|'" );
            auto chi = iff();
            expect( tok::rbrace, "'}'" );
            if ( g.empty() )
                throw error( "empty-group", "Dhat{} has no agents", pos );
            return f::dhat( g, chi, unary() );
        }
        return primary();
    }

    formula primary()
    {
        const auto& t = peek();
        if ( eat( tok::lpar ) )
        {
            auto a = iff();
            expect( tok::rpar, "')'" );
            return a;
        }
        if ( t.kind == tok::ident )
        {
            if ( t.text == "true" || t.text == "false" )
            {
                ++_i;
                return t.text == "true" ? f::top() : f::bot();
            }
            if ( lower_name( t.text ) && !keywords.count( t.text ) )
                return f::atom( _t[ _i++ ].text );
        }
        fail( "expected a formula" );
    }
};

// ---------------------------------------------------------------- printing

int prec( op k )
{
    switch ( k )
    {
    case op::iff: return 1;
    case op::implies: return 2;
    case op::disj: return 3;
    case op::conj: return 4;
    default: return 5;
    }
}

std::string group_text( const agent_set& g )
{
    std::string out;
    for ( std::size_t i = 0; i < g.size(); ++i )
        out += ( i ? "," : "" ) + g[ i ];
    return out;
}

std::string show( const formula& x, int need )
{
    auto wrap = [ & ]( std::string s ) { return prec( x->kind ) < need ? "(" + s + ")" : s; };
    auto bin = [ & ]( const char* sym, int l, int r ) {
        return wrap( show( x->left, l ) + " " + sym + " " + show( x->right, r ) );
    };
    switch ( x->kind )
    {
    case op::atom: return x->name;
    case op::top: return "true";
    case op::bot: return "false";
    case op::neg: return "~" + show( x->left, 5 );
    case op::conj: return bin( "&", 4, 5 );
    case op::disj: return bin( "|", 3, 4 );
    case op::implies: return bin( "->", 3, 2 );
    case op::iff: return bin( "<->", 1, 2 );
    case op::dist: return "D{" + group_text( x->group ) + "} " + show( x->left, 5 );
    case op::know: return "K_" + x->name + " " + show( x->left, 5 );
    case op::eee: return "[eee] " + show( x->left, 5 );
    case op::see:
        return "[see" + ( x->group.empty() ? "" : " " + group_text( x->group ) ) + "] " + show( x->left, 5 );
    case op::sse:
        return "[sse " + ( x->group.empty() ? "" : group_text( x->group ) + " " ) + "| " + show( x->left, 0 ) +
               "] " + show( x->right, 5 );
    case op::dhat:
        return "Dhat{" + group_text( x->group ) + " | " + show( x->left, 0 ) + "} " + show( x->right, 5 );
    }
    return "?";
}

} // namespace

formula parse_formula( const std::string& text ) { return parser( text ).whole(); }
std::string to_string( const formula& x ) { return show( x, 0 ); }

// ---------------------------------------------------------------- queries

bool is_dynamic_op( op k ) { return k == op::eee || k == op::see || k == op::sse; }

bool is_static( const formula& x )
{
    if ( !x )
        return true;
    return !is_dynamic_op( x->kind ) && is_static( x->left ) && is_static( x->right );
}

std::size_t depth( const formula& x )
{
    if ( !x )
        return 0;
    if ( x->kind == op::atom || x->kind == op::top || x->kind == op::bot )
        return 0;
    return 1 + std::max( depth( x->left ), depth( x->right ) );
}

std::size_t size( const formula& x )
{
    if ( !x )
        return 0;
    return 1 + size( x->left ) + size( x->right );
}

namespace
{

void collect( const formula& x, std::set< std::string >& agents, std::set< std::string >& atoms )
{
    if ( !x )
        return;
    if ( x->kind == op::atom )
        atoms.insert( x->name );
    if ( x->kind == op::know )
        agents.insert( x->name );
    agents.insert( x->group.begin(), x->group.end() );
    collect( x->left, agents, atoms );
    collect( x->right, agents, atoms );
}

} // namespace

agent_set agents_of( const formula& x )
{
    std::set< std::string > ag, at;
    collect( x, ag, at );
    return { ag.begin(), ag.end() };
}

std::vector< std::string > atoms_of( const formula& x )
{
    std::set< std::string > ag, at;
    collect( x, ag, at );
    return { at.begin(), at.end() };
}

formula desugar( const formula& x )
{
    using namespace f;
    switch ( x->kind )
    {
    case op::atom:
    case op::top: return x;
    case op::bot: return neg( top() );
    case op::neg: return neg( desugar( x->left ) );
    case op::conj: return conj( desugar( x->left ), desugar( x->right ) );
    case op::disj: return neg( conj( neg( desugar( x->left ) ), neg( desugar( x->right ) ) ) );
    case op::implies: return neg( conj( desugar( x->left ), neg( desugar( x->right ) ) ) );
    case op::iff:
    {
        auto a = desugar( x->left ), b = desugar( x->right );
        return conj( neg( conj( a, neg( b ) ) ), neg( conj( b, neg( a ) ) ) );
    }
    case op::dist: return dist( x->group, desugar( x->left ) );
    case op::know: return dist( { x->name }, desugar( x->left ) );
    case op::eee: return eee( desugar( x->left ) );
    case op::see: return see( x->group, desugar( x->left ) );
    case op::sse: return sse( x->group, desugar( x->left ), desugar( x->right ) );
    case op::dhat:
    {
        auto chi = x->left, phi = x->right;
        return desugar( conj( implies( chi, dist( x->group, implies( chi, phi ) ) ),
                              implies( neg( chi ), dist( x->group, implies( neg( chi ), phi ) ) ) ) );
    }
    }
    return x;
}

std::size_t nsc( const formula& x )
{
    switch ( x->kind )
    {
    case op::atom:
    case op::top: return 1;
    case op::bot: return 2; // ~true
    case op::neg:
    case op::dist:
    case op::know: return 1 + nsc( x->left );
    case op::conj:
    case op::disj:
    case op::implies:
    case op::iff: return 1 + std::max( nsc( x->left ), nsc( x->right ) );
    case op::eee:
    case op::see: return 2 * nsc( x->left );
    case op::sse: return ( 8 + nsc( x->left ) ) * nsc( x->right );
    case op::dhat: return 7 + nsc( x->right );
    }
    return 0;
}

std::size_t ndc( const formula& x )
{
    switch ( x->kind )
    {
    case op::atom:
    case op::top:
    case op::bot: return 0;
    case op::neg:
    case op::dist:
    case op::know: return ndc( x->left );
    case op::conj:
    case op::disj:
    case op::implies:
    case op::iff:
    case op::dhat: return std::max( ndc( x->left ), ndc( x->right ) );
    case op::eee:
    case op::see: return 1 + ndc( x->left );
    case op::sse: return 1 + ndc( x->left ) + ndc( x->right );
    }
    return 0;
}

bool c_greater( const formula& a, const formula& b )
{
    auto da = ndc( a ), db = ndc( b );
    return da > db || ( da == db && nsc( a ) > nsc( b ) );
}

std::vector< formula > ssub( const formula& x )
{
    std::vector< formula > out;
    std::unordered_set< formula, formula_hash, formula_eq > seen;
    std::function< void( const formula& ) > walk = [ & ]( const formula& y ) {
        for ( const auto& c : { y->left, y->right } )
        {
            if ( !c )
                continue;
            if ( seen.insert( c ).second )
                out.push_back( c );
            walk( c );
        }
    };
    walk( x );
    return out;
}

} // namespace dke
