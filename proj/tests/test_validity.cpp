#include "dke/corpus.hpp"
#include "dke/semantics.hpp"
#include "dke/translate.hpp"
#include "dke/validity.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace dke;

namespace
{

search_bounds bounds( std::size_t max_worlds, agent_set agents, std::vector< std::string > atoms )
{
    search_bounds b;
    b.max_worlds = max_worlds;
    b.agents = std::move( agents );
    b.atoms = std::move( atoms );
    return b;
}

std::string code_of( const std::function< void() >& f )
{
    try
    {
        f();
    }
    catch ( const error& e )
    {
        return e.code();
    }
    return "none";
}

} // namespace

TEST_CASE( "exhaustive enumeration counts" )
{
    auto count = []( const search_bounds& b ) {
        std::uint64_t n = 0;
        enumerate_models( b, [ & ]( const frame& ) {
            ++n;
            return true;
        } );
        return n;
    };
    auto one = bounds( 1, { "a" }, { "p" } );
    CHECK( count( one ) == 4 );
    auto two = bounds( 2, { "a" }, { "p" } );
    two.min_worlds = 2;
    CHECK( count( two ) == 64 );
    two.min_worlds = 1;
    CHECK( count( two ) == 68 );

    for ( std::size_t n = 1; n <= 2; ++n )
        for ( std::size_t a = 1; a <= 2; ++a )
            for ( std::size_t p = 1; p <= 2; ++p )
            {
                search_bounds b = bounds( n, {}, {} );
                b.min_worlds = n;
                for ( std::size_t i = 0; i < a; ++i )
                    b.agents.push_back( std::string( 1, char( 'a' + i ) ) );
                for ( std::size_t i = 0; i < p; ++i )
                    b.atoms.push_back( "p" + std::to_string( i ) );
                CHECK( count( b ) == ( std::uint64_t{ 1 } << ( n * n * a + n * p ) ) );
                CHECK( *model_count( n, a, p ) == count( b ) );
            }
}

TEST_CASE( "every labelled model appears exactly once" )
{
    auto b = bounds( 2, { "a" }, { "p" } );
    std::set< std::string > seen;
    for ( const auto& m : all_models( b ) )
        CHECK( seen.insert( print_model( m ) ).second );
    CHECK( seen.size() == 68 );
    // the first agent's relation bits are the most significant
    auto low = decode_model( std::uint64_t{ 1 } << 2, 2, 2, 1 );
    CHECK( low.row( 1, 0 ) == 0b01 );
    CHECK( low.row( 0, 0 ) == 0 );
    auto high = decode_model( std::uint64_t{ 1 } << ( 2 + 4 ), 2, 2, 1 );
    CHECK( high.row( 0, 0 ) == 0b01 );
    CHECK( high.row( 1, 0 ) == 0 );
    CHECK( decode_model( 1, 2, 2, 1 ).val[ 0 ] == 0b01 );
}

TEST_CASE( "sampling is reproducible" )
{
    auto b = bounds( 5, { "a", "b", "c" }, { "p", "q" } );
    CHECK( code_of( [ & ] { enumerate_models( b, []( const frame& ) { return true; } ); } ) == "bounds-too-large" );
    b.sample = sample_spec{ 50, 123 };
    std::vector< std::string > first, second;
    for ( auto* out : { &first, &second } )
        enumerate_models( b, [ & ]( const frame& fr ) {
            out->push_back( print_model( fr.to_model( search_signature( fr.n, b ) ) ) );
            return true;
        } );
    CHECK( first.size() == 50 );
    CHECK( first == second );
    b.sample = sample_spec{ 50, 124 };
    std::vector< std::string > third;
    enumerate_models( b, [ & ]( const frame& fr ) {
        third.push_back( print_model( fr.to_model( search_signature( fr.n, b ) ) ) );
        return true;
    } );
    CHECK( first != third );
}

TEST_CASE( "validity verdicts" )
{
    auto b = bounds( 2, { "a", "b", "c" }, { "p" } );
    CHECK( check_validity( parse( "[eee][eee]p <-> [eee]p" ), b ).valid );
    CHECK( check_validity( parse( "[eee]p <-> [see a,b,c]p" ), b ).valid );
    auto moore = parse( "D{a,b,c}(~K_b p) -> [eee]K_a ~K_b p" );
    CHECK_FALSE( satisfies( corpus::model_m1(), 0, moore ) );
    auto v = check_validity( moore, b );
    REQUIRE_FALSE( v.valid );
    CHECK_FALSE( satisfies( *v.countermodel, moore ) );

    auto ab = bounds( 2, { "a", "b" }, { "p", "q" } );
    CHECK( check_equivalence( parse( "[sse a | p] q" ), parse( "[sse a | ~p] q" ), ab ).valid );
    CHECK( check_equivalence( parse( "[see a][see b]p" ), parse( "[see b][see a]p" ), ab ).valid );
    CHECK( check_validity( parse( "[eee]p <-> p" ), bounds( 2, { "a" }, { "p" } ) ).valid );
    CHECK( code_of( [ & ] { check_validity( parse( "p" ), bounds( 3, { "a", "b" }, { "p", "q", "r" } ) ); } ) ==
           "bounds-too-large" );
}

TEST_CASE( "the reported countermodel is the first in enumeration order" )
{
    std::mt19937_64 rng( 21 );
    oracle::gen_options o;
    o.derived = true;
    auto b = bounds( 2, { "a", "b" }, { "p", "q" } );
    auto sig1 = search_signature( 1, b ), sig2 = search_signature( 2, b );
    int invalid = 0;
    for ( int i = 0; i < 30; ++i )
    {
        auto x = oracle::random_formula( rng, 3, o );
        auto v = check_validity( x, b );
        // walk the same order with the reference evaluator
        std::optional< std::pair< std::string, std::size_t > > first;
        std::uint64_t seen = 0;
        enumerate_models( b, [ & ]( const frame& fr ) {
            ++seen;
            auto m = fr.to_model( fr.n == 1 ? sig1 : sig2 );
            auto k = oracle::from( m );
            for ( std::size_t w = 0; w < fr.n; ++w )
                if ( !oracle::sat( k, w, x ) )
                {
                    first = { print_model( m ), w };
                    return false;
                }
            return true;
        } );
        INFO( print( x ) );
        CHECK( v.valid == !first.has_value() );
        CHECK( v.models_checked == seen );
        if ( first )
        {
            ++invalid;
            CHECK( print_model( v.countermodel->m ) == first->first );
            CHECK( v.countermodel->world == first->second );
        }
    }
    CHECK( invalid > 0 );
}

TEST_CASE( "schema instances" )
{
    schema_roster r{ { "a", "b" }, { "p", "q" } };
    auto has = []( const std::vector< formula >& v, const std::string& text ) {
        auto want = parse( text );
        for ( const auto& x : v )
            if ( same( x, want ) )
                return true;
        return false;
    };
    CHECK( has( axiom_instances( "K_D", 1, r ), "D{a}(p->q) -> (D{a}p -> D{a}q)" ) );
    CHECK( has( axiom_instances( "M_D", 1, r ), "D{a}p -> D{a,b}p" ) );
    CHECK( has( axiom_instances( "SSE_D", 1, r ), "[sse a|p]D{b}q <-> (D{a,b}[sse a|p]q & Dhat{b|p}[sse a|p]q)" ) );
    CHECK( axiom_instances( "EEE_p", 2, r ).size() == 2 );
    CHECK( axiom_instances( "SEE_p", 2, r ).size() == 8 );
    CHECK( code_of( [ & ] { axiom_instances( "PR", 1, r ); } ) == "unknown-schema" );

    auto b = bounds( 2, { "a", "b" }, { "p", "q" } );
    for ( const auto& name : schema_names() )
    {
        auto xs = axiom_instances( name, 2, r, 12 );
        CHECK( !xs.empty() );
        for ( const auto& x : xs )
        {
            INFO( name << ": " << print( x ) );
            CHECK( check_validity( x, b ).valid );
        }
    }
}

TEST_CASE( "rules preserve bounded validity" )
{
    std::mt19937_64 rng( 8 );
    oracle::gen_options o;
    auto b = bounds( 2, { "a", "b" }, { "p", "q" } );
    agent_set ab = { "a", "b" };
    for ( int i = 0; i < 60; ++i )
    {
        auto x = oracle::random_formula( rng, 2, o );
        auto y = i % 2 ? translate( x, ab ) : f::neg( f::neg( x ) );
        REQUIRE( check_equivalence( x, y, b ).valid );
        CHECK( check_equivalence( f::dist( { "a" }, x ), f::dist( { "a" }, y ), b ).valid );
        CHECK( check_equivalence( f::eee( x ), f::eee( y ), b ).valid );
        CHECK( check_equivalence( f::see( { "b" }, x ), f::see( { "b" }, y ), b ).valid );
        CHECK( check_equivalence( f::sse( ab, f::atom( "q" ), x ), f::sse( ab, f::atom( "q" ), y ), b ).valid );
        auto valid = f::implies( x, x );
        CHECK( check_validity( f::dist( ab, valid ), b ).valid );
    }
}
