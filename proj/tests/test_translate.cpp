#include "dke/corpus.hpp"
#include "dke/semantics.hpp"
#include "dke/translate.hpp"
#include "dke/validity.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace dke;

TEST_CASE( "hand-checked translations" )
{
    using namespace f;
    CHECK( same( translate( eee( know( "a", atom( "p" ) ) ), { "a", "b", "c" } ), dist( { "a", "b", "c" }, atom( "p" ) ) ) );
    CHECK( same( translate( eee( know( "a", atom( "p" ) ) ) ), dist( { "a" }, atom( "p" ) ) ) );
    CHECK( same( translate( see( { "a" }, neg( atom( "p" ) ) ) ), neg( atom( "p" ) ) ) );
    CHECK( same( translate( atom( "p" ) ), atom( "p" ) ) );
    CHECK( same( translate( see( { "a" }, dist( { "b" }, atom( "p" ) ) ) ), dist( { "a", "b" }, atom( "p" ) ) ) );

    auto x = sse( { "a", "b" }, atom( "p" ), dist( { "c" }, atom( "q" ) ) );
    auto want = desugar( conj( dist( { "a", "b", "c" }, atom( "q" ) ), dhat( { "c" }, atom( "p" ), atom( "q" ) ) ) );
    CHECK( same( translate( x ), want ) );
    CHECK( print( translate( parse( "[eee] true" ) ) ) == "true" );
}

TEST_CASE( "expand_dhat keeps implication as a connective" )
{
    auto d = expand_dhat( { "a" }, f::atom( "p" ), f::atom( "q" ) );
    CHECK( print( d ) == "(p -> D{a} (p -> q)) & (~p -> D{a} (~p -> q))" );
    auto m = corpus::model_m1();
    for ( const char* s : { "q", "r", "p & q", "~r" } )
    {
        auto chi = parse( s );
        for ( const char* t : { "p", "q -> p", "r" } )
        {
            auto phi = parse( t );
            for ( const agent_set& g : { agent_set{ "a" }, agent_set{ "b", "c" } } )
                CHECK( truth_set( m, expand_dhat( g, chi, phi ) ) == truth_set( m, f::dhat( g, chi, phi ) ) );
        }
    }
}

TEST_CASE( "traces run inside out" )
{
    auto t = translate_traced( parse( "[eee][eee] p" ) );
    REQUIRE( t.trace.size() >= 2 );
    CHECK( t.trace[ 0 ].clause == "nested" );
    CHECK( t.trace[ 0 ].parent == trace_step::root );
    CHECK( print( t.trace[ 1 ].input ) == "[eee] p" );
    CHECK( t.trace[ 1 ].parent == 0 );
    CHECK( t.trace[ 1 ].depth == 1 );
    CHECK( print( t.result ) == "p" );

    auto p = translate_traced( parse( "p" ) );
    CHECK( p.trace.size() == 1 );
    CHECK( p.trace[ 0 ].clause == "atom" );

    auto s = translate_traced( parse( "[sse a | p] [eee] q" ) );
    CHECK( s.trace[ 0 ].clause == "nested" );
    CHECK( print( s.trace[ 1 ].input ) == "[eee] q" );

    // every step is strictly smaller than its caller
    std::mt19937_64 rng( 3 );
    oracle::gen_options o;
    o.derived = true;
    for ( int i = 0; i < 300; ++i )
    {
        auto x = oracle::random_formula( rng, 4, o );
        auto tr = translate_traced( x );
        for ( const auto& step : tr.trace )
            if ( step.parent != trace_step::root )
                CHECK( c_greater( tr.trace[ step.parent ].input, step.input ) );
    }
}

TEST_CASE( "translation is static, idempotent and equivalent" )
{
    std::mt19937_64 rng( 99 );
    oracle::gen_options o;
    o.derived = true;
    agent_set everyone = { "a", "b" };
    for ( int i = 0; i < 400; ++i )
    {
        auto x = oracle::random_formula( rng, 4, o );
        auto t = translate( x, everyone );
        INFO( print( x ) );
        CHECK( ndc( t ) == 0 );
        CHECK( is_static( t ) );
        CHECK( same( translate( t, everyone ), t ) );
        auto m = oracle::random_model( rng, 1 + rng() % 4, everyone, o.atoms, i % 2 == 0 );
        CHECK( truth_set( m, x ) == truth_set( m, t ) );
    }
}

TEST_CASE( "translation equivalence on every two-world model" )
{
    std::mt19937_64 rng( 17 );
    oracle::gen_options o;
    search_bounds b;
    b.agents = { "a", "b" };
    b.atoms = { "p", "q" };
    for ( int i = 0; i < 40; ++i )
    {
        auto x = oracle::random_formula( rng, 3, o );
        INFO( print( x ) );
        auto v = check_equivalence( x, translate( x, b.agents ), b );
        CHECK( v.valid );
        CHECK( v.models_checked == 16 + 4096 );
    }
}
