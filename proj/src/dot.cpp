#include "dke/dot.hpp"

namespace dke
{

namespace
{

std::string escape( const std::string& s )
{
    std::string out;
    for ( char c : s )
    {
        if ( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out;
}

std::string quote( const std::string& s ) { return "\"" + escape( s ) + "\""; }

} // namespace

std::string to_dot( const model& m, std::optional< std::size_t > point )
{
    const auto& s = m.sig();
    auto n = m.world_count();
    auto labels = [ & ]( std::size_t w, std::size_t u, bool need_back ) {
        std::string out;
        for ( std::size_t a = 0; a < m.agent_count(); ++a )
            if ( m.rel( a ).test( w, u ) && m.rel( a ).test( u, w ) == need_back )
                out += ( out.empty() ? "" : "," ) + s.agents[ a ];
        return out;
    };

    std::string out = "digraph model {\n  node [shape=circle];\n";
    for ( std::size_t w = 0; w < n; ++w )
    {
        std::string atoms;
        for ( std::size_t p = 0; p < m.atom_count(); ++p )
            if ( has_world( m.val( p ), w ) )
                atoms += ( atoms.empty() ? "" : "," ) + s.atoms[ p ];
        out += "  " + quote( s.worlds[ w ] ) + " [label=\"" + escape( s.worlds[ w ] ) + "\\n" + escape( atoms ) + "\"";
        if ( point && *point == w )
            out += ", shape=doublecircle";
        out += "];\n";
    }
    for ( std::size_t w = 0; w < n; ++w )
    {
        auto loop = labels( w, w, true );
        if ( !loop.empty() )
            out += "  " + quote( s.worlds[ w ] ) + " -> " + quote( s.worlds[ w ] ) + " [label=" + quote( loop ) + "];\n";
    }
    auto line = [ & ]( std::size_t w, std::size_t u, const std::string& l, bool both ) {
        if ( l.empty() )
            return;
        out += "  " + quote( s.worlds[ w ] ) + " -> " + quote( s.worlds[ u ] ) + " [label=" + quote( l ) +
               ( both ? ", dir=both" : "" ) + "];\n";
    };
    for ( std::size_t w = 0; w < n; ++w )
        for ( std::size_t u = w + 1; u < n; ++u )
        {
            line( w, u, labels( w, u, true ), true );
            line( w, u, labels( w, u, false ), false );
            line( u, w, labels( u, w, false ), false );
        }
    return out + "}\n";
}

} // namespace dke
