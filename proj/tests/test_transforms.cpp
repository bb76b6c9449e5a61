#include "dke/corpus.hpp"
#include "dke/semantics.hpp"
#include "dke/transforms.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace dke;

namespace
{

const agent_set abc = { "a", "b", "c" };

// every subset of abc, the empty one included
std::vector< agent_set > all_groups()
{
    std::vector< agent_set > out;
    for ( unsigned m = 0; m < 8; ++m )
    {
        agent_set g;
        for ( unsigned i = 0; i < 3; ++i )
            if ( ( m >> i ) & 1U )
                g.push_back( abc[ i ] );
        out.push_back( g );
    }
    return out;
}

relation pairs_to_relation( const oracle::pairs& p, std::size_t n )
{
    relation r( n );
    for ( auto [ w, u ] : p )
        r.set( w, u );
    return r;
}

bool reduces( const model& before, const model& after )
{
    for ( std::size_t a = 0; a < before.agent_count(); ++a )
        if ( !after.rel( a ).subset_of( before.rel( a ) ) )
            return false;
    return true;
}

} // namespace

TEST_CASE( "full ignorance and its complement" )
{
    auto m1 = corpus::model_m1();
    auto fi = full_ignorance_relation( m1, f::atom( "p" ) );
    CHECK( fi.count() == 6 );
    CHECK( fi.image( 3 ) == 0b0111 );
    CHECK( fi.image( 0 ) == 0b1000 );
    auto ko = knowing_only_relation( m1, f::atom( "p" ) );
    CHECK( ko.image( 0 ) == 0b0111 );
    CHECK( ko.image( 3 ) == 0b1000 );
    CHECK( ko.equivalence() );
    CHECK( ( fi | ko ) == relation::full( 4 ) );
    CHECK( ( fi & ko ).count() == 0 );
    CHECK( full_ignorance_relation( m1, f::top() ).count() == 0 );
    CHECK( knowing_only_relation( m1, f::top() ) == relation::full( 4 ) );

    auto s = corpus::prop8_countermodel();
    auto cross = full_ignorance_relation( s, f::atom( "p" ) ).pairs();
    std::vector< std::pair< std::size_t, std::size_t > > want = { { 0, 2 }, { 1, 2 }, { 2, 0 }, { 2, 1 } };
    CHECK( cross == want );
}

TEST_CASE( "updates on the stored models" )
{
    auto m1 = corpus::model_m1(), m2 = corpus::model_m2();
    auto e1 = apply_eee( m1 );
    for ( const auto& r : e1.relations() )
        CHECK( r == relation::identity( 4 ) );
    CHECK( apply_eee( m2 ) == corpus::eee_m2() );
    auto same = m1.with_relations( std::vector< relation >( 3, m1.rel( "a" ) ) );
    CHECK( apply_eee( same ) == same );

    auto ab = apply_see( m1, { "a", "b" } );
    CHECK( ab.rel( "a" ) == m1.distributed( { "a", "b" } ) );
    CHECK( ab.rel( "c" ) == m1.distributed( abc ) );
    CHECK( apply_see( m1, {} ) == m1 );
    CHECK( apply_see( m2, { "a", "b" } ) == apply_see( m2, { "c" } ) );
    CHECK( apply_see( m2, { "a", "b" } ) == apply_eee( m2 ) );

    auto sp = apply_sse( m1, abc, f::atom( "p" ) );
    for ( const auto& a : abc )
    {
        CHECK( sp.rel( a ).image( 3 ) == 0b1000 );
        CHECK( ( sp.rel( a ).image( 0 ) & 0b0111 ) == ( m1.rel( a ).image( 0 ) & 0b0111 ) );
    }
    auto spq = apply_sse( m1, { "a", "b" }, parse( "p & q" ) );
    CHECK( spq.rel( "a" ).test( 0, 2 ) );
    CHECK( spq.rel( "b" ).test( 0, 2 ) );
    CHECK_FALSE( spq.rel( "c" ).test( 0, 1 ) );
    CHECK( spq.rel( "c" ).test( 1, 3 ) );
    auto s = corpus::prop8_countermodel();
    CHECK( apply_sse( s, { "a", "b" }, f::atom( "p" ) ) == s );
}

TEST_CASE( "updates agree with the reference on random models" )
{
    std::mt19937_64 rng( 7 );
    oracle::gen_options o;
    o.agents = abc;
    o.derived = true;
    auto groups = all_groups();
    for ( int i = 0; i < 400; ++i )
    {
        auto m = oracle::random_model( rng, 1 + rng() % 5, abc, o.atoms, i % 3 == 0 );
        auto k = oracle::from( m );
        const auto& s = groups[ rng() % groups.size() ];
        auto chi = oracle::random_formula( rng, 2, o );
        INFO( print_model( m ) );
        INFO( print( chi ) );
        CHECK( oracle::same_relations( oracle::eee( k ), apply_eee( m ) ) );
        CHECK( oracle::same_relations( oracle::see( k, s ), apply_see( m, s ) ) );
        CHECK( oracle::same_relations( oracle::sse( k, s, chi ), apply_sse( m, s, chi ) ) );
        CHECK( apply_sse( m, s, chi ) == apply_sse_intersection( m, s, chi ) );
    }
}

TEST_CASE( "algebraic identities of the updates" )
{
    std::mt19937_64 rng( 11 );
    oracle::gen_options o;
    o.agents = abc;
    auto groups = all_groups();
    auto nonempty = std::vector< agent_set >( groups.begin() + 1, groups.end() );
    for ( int i = 0; i < 1000; ++i )
    {
        auto m = oracle::random_model( rng, 1 + rng() % 5, abc, o.atoms, i % 2 == 0 );
        auto n = m.world_count();
        const auto& s1 = groups[ rng() % groups.size() ];
        const auto& s2 = groups[ rng() % groups.size() ];
        const auto& g = nonempty[ rng() % nonempty.size() ];
        auto chi1 = oracle::random_formula( rng, 2, o );
        auto chi2 = oracle::random_formula( rng, 2, o );
        INFO( print_model( m ) );

        auto e = apply_eee( m );
        CHECK( apply_eee( e ) == e );
        CHECK( e.distributed( g ) == m.distributed( abc ) );

        CHECK( apply_see( apply_see( m, s1 ), s2 ) == apply_see( m, unite( s1, s2 ) ) );
        CHECK( apply_see( m, abc ) == e );

        auto x = apply_sse( m, s1, chi1 );
        CHECK( x.distributed( g ) ==
               ( group_relation( m, unite( s1, g ) ) | ( m.distributed( g ) & knowing_only_relation( m, chi1 ) ) ) );

        auto twice = apply_sse( x, s2, chi2 );
        auto k1 = knowing_only_relation( m, chi1 );
        auto k12 = knowing_only_relation( m, f::sse( s1, chi1, chi2 ) );
        CHECK( knowing_only_relation( x, chi2 ) == k12 );
        auto mix = group_relation( m, unite( s1, s2 ) ) | ( group_relation( m, s1 ) & k12 ) |
                   ( group_relation( m, s2 ) & k1 ) | ( k1 & k12 );
        for ( std::size_t a = 0; a < m.agent_count(); ++a )
            CHECK( twice.rel( a ) == ( m.rel( a ) & mix ) );

        CHECK( apply_sse( m, s1, chi1 ) == apply_sse( m, s1, f::neg( chi1 ) ) );

        CHECK( reduces( m, e ) );
        CHECK( reduces( m, apply_see( m, s1 ) ) );
        CHECK( reduces( m, x ) );
        CHECK( pairs_to_relation( oracle::dist( oracle::from( m ), g ), n ) == m.distributed( g ) );
    }
}

TEST_CASE( "preservation of relational properties" )
{
    std::mt19937_64 rng( 5 );
    oracle::gen_options o;
    o.agents = abc;
    auto groups = all_groups();
    for ( int i = 0; i < 500; ++i )
    {
        auto m = oracle::random_model( rng, 1 + rng() % 6, abc, o.atoms, true );
        const auto& s = groups[ rng() % groups.size() ];
        auto chi = oracle::random_formula( rng, 2, o );
        auto e = apply_eee( m ), v = apply_see( m, s ), x = apply_sse( m, s, chi );
        for ( const auto& r : e.relations() )
            CHECK( r.equivalence() );
        for ( const auto& r : v.relations() )
            CHECK( r.equivalence() );
        for ( const auto& r : x.relations() )
        {
            CHECK( r.reflexive() );
            CHECK( r.symmetric() );
        }
    }
    auto after = apply_sse( corpus::model_m1(), { "a", "b" }, parse( "p & r" ) );
    CHECK_FALSE( after.rel( "a" ).transitive() );
    CHECK_FALSE( after.rel( "a" ).euclidean() );
}

TEST_CASE( "reading events" )
{
    for ( const auto& m : { corpus::model_m1(), corpus::model_m2() } )
    {
        reading everyone, with_ab, pooled;
        for ( const auto& i : abc )
        {
            everyone[ i ] = abc;
            with_ab[ i ] = unite( { "a", "b" }, { i } );
            pooled[ i ] = ( i == "c" ) ? agent_set{ "c" } : agent_set{ "a", "b" };
        }
        CHECK( apply_reading_event( m, everyone ) == apply_eee( m ) );
        CHECK( apply_reading_event( m, with_ab ) == apply_see( m, { "a", "b" } ) );
        auto r = apply_reading_event( m, pooled );
        CHECK( r.rel( "c" ) == m.rel( "c" ) );
        CHECK( r.rel( "a" ) == m.distributed( { "a", "b" } ) );
        CHECK( r.rel( "b" ) == m.distributed( { "a", "b" } ) );
    }
    auto m3 = corpus::model_m3();
    reading r3 = { { "a", { "a", "b" } }, { "b", { "a", "b" } } };
    CHECK( apply_reading_event( m3, r3 ) == apply_see( m3, { "a", "b" } ) );
    CHECK( apply_reading_event( m3, parse_reading( "a:a,b;b:b,a" ) ) == apply_eee( m3 ) );

    auto code = []( const model& m, const reading& alpha ) -> std::string {
        try
        {
            (void)apply_reading_event( m, alpha );
        }
        catch ( const error& e )
        {
            return e.code();
        }
        return "none";
    };
    CHECK( code( m3, { { "a", { "a" } } } ) == "alpha-incomplete" );
    CHECK( code( m3, { { "a", { "b" } }, { "b", { "b" } } } ) == "alpha-not-reflexive" );
    CHECK( code( m3, { { "a", { "a" } }, { "b", { "b" } } } ) == "none" );
}
