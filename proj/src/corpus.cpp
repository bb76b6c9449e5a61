#include "dke/corpus.hpp"
#include "dke/semantics.hpp"
#include "dke/transforms.hpp"

#include <map>

namespace dke::corpus
{

namespace
{

struct edge
{
    std::string agents; // one letter per agent
    std::string from, to;
};

// Symmetric edges plus loops for every agent at every world.
model equivalence_model( const std::vector< std::string >& worlds, const std::vector< std::string >& agents,
                         const std::vector< std::string >& atoms,
                         const std::map< std::string, std::vector< std::string > >& val, const std::vector< edge >& edges )
{
    model_builder b( worlds, agents, atoms );
    b.loops();
    for ( const auto& [ p, ws ] : val )
        b.truth( p, ws );
    for ( const auto& e : edges )
        for ( char a : e.agents )
            b.both( std::string( 1, a ), e.from, e.to );
    return b.build();
}

const std::vector< std::string > w4 = { "w0", "w1", "w2", "w3" };
const std::vector< std::string > w8 = { "w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7" };
const std::vector< std::string > abc = { "a", "b", "c" };
const std::vector< std::string > pqr = { "p", "q", "r" };
const std::vector< std::string > mabc = { "m_a", "m_b", "m_c" };

const std::map< std::string, std::vector< std::string > > m1_val = {
    { "p", { "w0", "w1", "w2" } }, { "q", { "w0", "w2", "w3" } }, { "r", { "w0", "w1", "w3" } } };

const std::map< std::string, std::vector< std::string > > m2_val = {
    { "p", { "w0", "w1" } }, { "q", { "w0", "w3" } }, { "r", { "w0", "w2" } } };

const std::map< std::string, std::vector< std::string > > cube_val = {
    { "m_a", { "w2", "w3", "w6", "w7" } }, { "m_b", { "w0", "w2", "w4", "w6" } }, { "m_c", { "w0", "w1", "w2", "w3" } } };

model m1_like( const std::vector< edge >& edges ) { return equivalence_model( w4, abc, pqr, m1_val, edges ); }
model cube_like( const std::vector< edge >& edges ) { return equivalence_model( w8, abc, mabc, cube_val, edges ); }

} // namespace

model m1()
{
    return m1_like( { { "ac", "w0", "w1" }, { "ab", "w0", "w2" }, { "bc", "w0", "w3" },
                      { "a", "w1", "w2" }, { "c", "w1", "w3" }, { "b", "w2", "w3" } } );
}

model m2()
{
    return equivalence_model( w4, abc, pqr, m2_val,
                              { { "a", "w0", "w1" }, { "b", "w0", "w2" }, { "abc", "w0", "w3" },
                                { "a", "w1", "w3" }, { "b", "w2", "w3" } } );
}

model m3()
{
    model_builder b( { "w0", "w1", "w2", "w3", "w4" }, { "a", "b" }, { "p", "q" } );
    b.truth( "p", { "w0", "w1", "w2", "w3" } ).truth( "q", { "w0", "w1", "w3", "w4" } );
    b.edge( "a", "w0", "w1" ).edge( "a", "w0", "w2" ).edge( "b", "w0", "w3" ).edge( "b", "w0", "w4" );
    for ( const auto* w : { "w1", "w2", "w3", "w4" } )
        b.edge( "a", w, w ).edge( "b", w, w );
    b.both( "b", "w1", "w2" ).both( "a", "w3", "w4" );
    return b.build();
}

model cube()
{
    return cube_like( { { "a", "w0", "w2" }, { "a", "w1", "w3" }, { "a", "w4", "w6" },
                        { "b", "w0", "w1" }, { "b", "w2", "w3" }, { "b", "w6", "w7" },
                        { "c", "w0", "w4" }, { "c", "w2", "w6" }, { "c", "w3", "w7" } } );
}

model stuck()
{
    model_builder b( { "w0", "w1", "w2" }, { "a", "b" }, { "p" } );
    b.edge( "a", "w0", "w2" ).edge( "b", "w0", "w2" ).edge( "b", "w0", "w1" ).truth( "p", { "w2" } );
    return b.build();
}

model eee_m1() { return m1_like( {} ); }
model eee_m2() { return equivalence_model( w4, abc, pqr, m2_val, { { "abc", "w0", "w3" } } ); }

model eee_m3()
{
    model_builder b( { "w0", "w1", "w2", "w3", "w4" }, { "a", "b" }, { "p", "q" } );
    b.truth( "p", { "w0", "w1", "w2", "w3" } ).truth( "q", { "w0", "w1", "w3", "w4" } );
    for ( const auto* w : { "w1", "w2", "w3", "w4" } )
        b.edge( "a", w, w ).edge( "b", w, w );
    return b.build();
}

model see_m1_ab() { return m1_like( { { "ab", "w0", "w2" } } ); }

model sse_m1_all( const std::string& topic )
{
    if ( topic == "p" )
        return m1_like( { { "ac", "w0", "w1" }, { "ab", "w0", "w2" }, { "a", "w1", "w2" } } );
    if ( topic == "q" )
        return m1_like( { { "ab", "w0", "w2" }, { "bc", "w0", "w3" }, { "b", "w2", "w3" } } );
    if ( topic == "r" )
        return m1_like( { { "ac", "w0", "w1" }, { "bc", "w0", "w3" }, { "c", "w1", "w3" } } );
    throw error( "usage", "no stored result for topic '" + topic + "'" );
}

model sse_m1_ab( const std::string& topic )
{
    if ( topic == "p&q" )
        return m1_like( { { "ab", "w0", "w2" }, { "c", "w1", "w3" } } );
    if ( topic == "p&r" )
        return m1_like( { { "ac", "w0", "w1" }, { "ab", "w0", "w2" }, { "b", "w2", "w3" } } );
    if ( topic == "q&r" )
        return m1_like( { { "ab", "w0", "w2" }, { "bc", "w0", "w3" }, { "a", "w1", "w2" } } );
    throw error( "usage", "no stored result for topic '" + topic + "'" );
}

model cube_after_all_or() { return cube_like( { { "a", "w0", "w2" }, { "b", "w2", "w3" }, { "c", "w2", "w6" } } ); }
model cube_after_all_or_twice() { return cube_like( {} ); }
model cube_after_ab_then_c() { return cube_like( { { "c", "w2", "w6" } } ); }

model cube_after_a()
{
    return cube_like( { { "a", "w0", "w2" }, { "a", "w1", "w3" }, { "a", "w4", "w6" }, { "b", "w0", "w1" },
                        { "b", "w2", "w3" }, { "c", "w0", "w4" }, { "c", "w2", "w6" } } );
}

model cube_after_a_then_bc()
{
    return cube_like( { { "a", "w0", "w2" }, { "a", "w1", "w3" }, { "a", "w4", "w6" }, { "c", "w0", "w4" },
                        { "c", "w2", "w6" } } );
}

model cube_after_bc()
{
    return cube_like( { { "a", "w0", "w2" }, { "a", "w4", "w6" }, { "b", "w2", "w3" }, { "b", "w6", "w7" },
                        { "c", "w0", "w4" }, { "c", "w2", "w6" }, { "c", "w3", "w7" } } );
}

model cube_after_bc_then_a()
{
    return cube_like( { { "a", "w0", "w2" }, { "a", "w4", "w6" }, { "c", "w0", "w4" }, { "c", "w2", "w6" },
                        { "c", "w3", "w7" } } );
}

formula chi( const std::string& agent )
{
    auto m = f::atom( "m_" + agent );
    return f::disj( f::know( agent, m ), f::know( agent, f::neg( m ) ) );
}

formula chi_or() { return f::disj( chi( "a" ), f::disj( chi( "b" ), chi( "c" ) ) ); }

namespace
{

struct ledger
{
    std::vector< claim > out;

    claim& add( std::string id, std::string about, claim_kind kind, const model& m )
    {
        out.push_back( claim{ std::move( id ), std::move( about ), kind, m, 0, nullptr, std::nullopt, 0, {}, false } );
        return out.back();
    }

    void holds( std::string id, std::string about, const model& m, const std::string& world, const std::string& text )
    {
        auto& c = add( std::move( id ), std::move( about ), claim_kind::holds, m );
        c.world = m.world( world );
        c.f = parse_formula( text );
    }

    void fails( std::string id, std::string about, const model& m, const std::string& world, const std::string& text )
    {
        auto& c = add( std::move( id ), std::move( about ), claim_kind::fails, m );
        c.world = m.world( world );
        c.f = parse_formula( text );
    }

    void same( std::string id, std::string about, const model& got, const model& want )
    {
        add( std::move( id ), std::move( about ), claim_kind::same_model, got ).expected = want;
    }

    void truth( std::string id, std::string about, const model& m, const formula& f,
                const std::vector< std::string >& worlds )
    {
        auto& c = add( std::move( id ), std::move( about ), claim_kind::truth_set, m );
        c.f = f;
        for ( const auto& w : worlds )
            c.worlds |= world_set{ 1 } << m.world( w );
    }

    void transitive( std::string id, std::string about, const model& m, const std::string& agent, bool expected )
    {
        auto& c = add( std::move( id ), std::move( about ), claim_kind::property, m );
        c.agent = agent;
        c.expected_flag = expected;
    }
};

// "K_i x | K_i ~x" with x parenthesised.
std::string whether( const std::string& i, const std::string& x )
{
    return "(K_" + i + " (" + x + ") | K_" + i + " ~(" + x + "))";
}

std::string ignores( const std::string& i, const std::string& x )
{
    return "(~K_" + i + " (" + x + ") & ~K_" + i + " ~(" + x + "))";
}

} // namespace

std::vector< claim > claims()
{
    ledger l;
    auto M1 = m1(), M2 = m2(), M3 = m3(), C = cube();

    // Individual and distributed knowledge before any communication.
    l.holds( "m1.a-knows-p", "a knows p and ignores q and r", M1, "w0",
             "K_a p & " + ignores( "a", "q" ) + " & " + ignores( "a", "r" ) );
    l.holds( "m1.b-knows-q", "b knows q and ignores p and r", M1, "w0",
             ignores( "b", "p" ) + " & K_b q & " + ignores( "b", "r" ) );
    l.holds( "m1.c-knows-r", "c knows r and ignores p and q", M1, "w0",
             ignores( "c", "p" ) + " & " + ignores( "c", "q" ) + " & K_c r" );
    {
        auto who = whether( "a", "p" ) + " & " + whether( "b", "q" ) + " & " + whether( "c", "r" );
        l.holds( "m1.common-picture", "everyone knows who knows what", M1, "w0",
                 "K_a (" + who + ") & K_b (" + who + ") & K_c (" + who + ")" );
    }
    l.holds( "m1.distributed", "pairs and the whole group know distributively", M1, "w0",
             "D{a,b} (p & q) & D{a,c} (p & r) & D{b,c} (q & r) & D{a,b,c} (p & q & r)" );

    l.holds( "m2.a", "a knows p | q only", M2, "w0",
             "K_a (p | q) & " + ignores( "a", "p" ) + " & " + ignores( "a", "q" ) );
    l.holds( "m2.b", "b knows q | r only", M2, "w0",
             "K_b (q | r) & " + ignores( "b", "q" ) + " & " + ignores( "b", "r" ) );
    l.holds( "m2.c", "c knows q only", M2, "w0", ignores( "c", "p" ) + " & K_c q & " + ignores( "c", "r" ) );
    l.holds( "m2.distributed", "no group can settle p & r", M2, "w0",
             "D{a,b} q & D{a,c} q & D{b,c} q & ~D{a,b,c} (p & r)" );

    l.holds( "m3.partial", "a knows p, b knows q", M3, "w0",
             "K_a p & " + ignores( "a", "q" ) + " & " + ignores( "b", "p" ) + " & K_b q" );
    l.holds( "m3.misled", "each is wrong about the other", M3, "w0",
             "K_a (K_b p & " + ignores( "b", "q" ) + ") & K_b (" + ignores( "a", "p" ) + " & K_a q)" );
    l.holds( "m3.inconsistent", "pooling yields an inconsistency", M3, "w0", "D{a,b} false" );

    // Everyone shares everything.
    l.same( "eee.m1", "only loops survive", apply_eee( M1 ), eee_m1() );
    l.same( "eee.m2", "the w0-w3 edge survives for all", apply_eee( M2 ), eee_m2() );
    l.same( "eee.m3", "w0 loses every successor", apply_eee( M3 ), eee_m3() );
    l.holds( "eee.m1.formula", "distributed knowledge becomes individual", M1, "w0",
             "D{a,b,c} (p & q & r) & [eee] (K_a (p & q & r) & K_b (p & q & r) & K_c (p & q & r))" );
    l.holds( "eee.m2.formula", "everyone ends up knowing q", M2, "w0",
             "D{a,b,c} q & [eee] (K_a q & K_b q & K_c q)" );
    l.holds( "eee.m3.formula", "everyone ends up inconsistent", M3, "w0",
             "D{a,b} false & [eee] (K_a false & K_b false)" );
    l.holds( "eee.ignorance-lost", "distributed ignorance need not survive sharing", M1, "w0",
             "D{a,b,c} ~K_b p & ~[eee] K_a ~K_b p" );

    // Some agents share everything.
    l.same( "see.m1.ab", "a and b share", apply_see( M1, { "a", "b" } ), see_m1_ab() );
    l.holds( "see.m1.formula", "a and b learn p & q, c learns everything", M1, "w0",
             "D{a,b} (p & q) & K_c r & [see a,b] ((K_a (p & q) & " + ignores( "a", "r" ) + ") & (K_b (p & q) & " +
                     ignores( "b", "r" ) + ") & K_c (p & q & r))" );
    l.same( "see.m2.ab-vs-c", "a,b sharing equals c sharing", apply_see( M2, { "a", "b" } ), apply_see( M2, { "c" } ) );
    l.same( "see.m2.ab-vs-eee", "a,b sharing equals everyone sharing", apply_see( M2, { "a", "b" } ), apply_eee( M2 ) );
    l.same( "see.m2.result", "stored result", apply_see( M2, { "a", "b" } ), eee_m2() );
    int k = 0;
    for ( const auto* phi : { "K_a p", "K_b ~q | K_c r", "D{a,b} (p & r)", "~K_c ~p & K_a q" } )
    {
        std::string x = std::string( "(" ) + phi + ")";
        l.holds( "see.m2.agree." + std::to_string( ++k ), std::string( "the three updates agree on " ) + phi, M2, "w0",
                 "([see a,b] " + x + " <-> [see c] " + x + ") & ([see a,b] " + x + " <-> [eee] " + x + ")" );
    }
    l.holds( "see.ignorance-lost", "a,b distributed ignorance need not survive", M1, "w0",
             "D{a,b} ~K_b p & ~[see a,b] K_a ~K_b p" );

    // Sharing on a topic.
    for ( const auto* t : { "p", "q", "r" } )
        l.same( std::string( "sse.m1.all." ) + t, "everyone shares on one atom",
                apply_sse( M1, { "a", "b", "c" }, f::atom( t ) ), sse_m1_all( t ) );
    for ( const auto* t : { "p&q", "p&r", "q&r" } )
        l.same( std::string( "sse.m1.ab." ) + t, "a and b share on a conjunction",
                apply_sse( M1, { "a", "b" }, parse_formula( t ) ), sse_m1_ab( t ) );
    l.holds( "sse.m1.p.a-learns-about-others", "a learns that b and c now know whether p", M1, "w0",
             "[sse a,b,c | p] K_a (" + whether( "b", "p" ) + " & " + whether( "c", "p" ) + ")" );
    l.holds( "sse.m1.p.a-no-facts", "a learns no new fact", M1, "w0",
             "[sse a,b,c | p] (K_a p & " + ignores( "a", "q" ) + " & " + ignores( "a", "r" ) + ")" );
    l.holds( "sse.m1.pq.everyone", "everyone learns p and q, c learns all", M1, "w0",
             "[sse a,b | p & q] (K_a (p & q) & K_b (p & q) & K_c (p & q & r))" );
    l.holds( "sse.m1.qr.partial", "a knows p,q; b knows q; c knows q,r", M1, "w0",
             "[sse a,b | q & r] (" + whether( "a", "p" ) + " & " + whether( "a", "q" ) + " & " +
                     ignores( "a", "r" ) + " & " + ignores( "b", "p" ) + " & " + whether( "b", "q" ) + " & " +
                     ignores( "b", "r" ) + " & " + ignores( "c", "p" ) + " & " + whether( "c", "q" ) + " & " +
                     whether( "c", "r" ) + ")" );
    l.transitive( "sse.m1.pr.a-not-transitive", "sharing on p & r breaks transitivity for a",
                  apply_sse( M1, { "a", "b" }, parse_formula( "p & r" ) ), "a", false );

    auto S = stuck();
    l.same( "stuck.unchanged", "sharing on p leaves the model as it is", apply_sse( S, { "a", "b" }, f::atom( "p" ) ), S );
    l.holds( "stuck.dist", "a and b know p distributively", S, "w0", "D{a,b} p" );
    l.fails( "stuck.no-knowledge", "yet b does not learn p", S, "w0", "[sse a,b | p] K_b p" );

    // The cube and the order sensitivity of topic sharing.
    l.truth( "cube.chi-a", "where a knows whether m_a", C, chi( "a" ), { "w5", "w7" } );
    l.truth( "cube.chi-b", "where b knows whether m_b", C, chi( "b" ), { "w4", "w5" } );
    l.truth( "cube.chi-c", "where c knows whether m_c", C, chi( "c" ), { "w1", "w5" } );
    l.truth( "cube.chi-or", "where someone knows their bit", C, chi_or(), { "w1", "w4", "w5", "w7" } );

    agent_set all = { "a", "b", "c" };
    auto after_or = apply_sse( C, all, chi_or() );
    l.same( "cube.all-or", "everyone shares on chi_or", after_or, cube_after_all_or() );
    l.truth( "cube.all-or.chi-or", "chi_or now fails only at w2", after_or, chi_or(),
             { "w0", "w1", "w3", "w4", "w5", "w6", "w7" } );
    l.same( "cube.all-or-twice", "a second round removes the rest", apply_sse( after_or, all, chi_or() ),
            cube_after_all_or_twice() );
    auto chi_or_text = "(" + to_string( chi_or() ) + ")";
    auto chi_a_text = "(" + to_string( chi( "a" ) ) + ")";
    auto chi_b_text = "(" + to_string( chi( "b" ) ) + ")";
    auto chi_c_text = "(" + to_string( chi( "c" ) ) + ")";
    l.holds( "cube.repeat.twice", "two rounds give a its bit", C, "w2",
             "[sse a,b,c | " + chi_or_text + "] [sse a,b,c | " + chi_or_text + "] " + chi_a_text );
    l.fails( "cube.repeat.once", "one round does not", C, "w2", "[sse a,b,c | " + chi_or_text + "] " + chi_a_text );
    l.holds( "cube.repeat.negated-topic", "sharing on the negated topic does not inform a", C, "w2",
             "D{a,b,c} ~" + chi_or_text + " & ~[sse a,b,c | ~" + chi_or_text + "] K_a ~" + chi_or_text );

    auto after_a = apply_sse( C, { "a" }, chi( "a" ) );
    l.same( "cube.a", "a shares on chi_a", after_a, cube_after_a() );
    l.same( "cube.all-a", "everyone sharing on chi_a gives the same model", apply_sse( C, all, chi( "a" ) ),
            cube_after_a() );
    l.truth( "cube.a.chi-c", "chi_c after a shares", after_a, chi( "c" ), { "w1", "w3", "w5", "w7" } );
    l.same( "cube.a-bc", "then b,c share on chi_c", apply_sse( after_a, { "b", "c" }, chi( "c" ) ),
            cube_after_a_then_bc() );
    l.same( "cube.all-a-all-c", "everyone, twice, ends in the same model",
            apply_sse( apply_sse( C, all, chi( "a" ) ), all, chi( "c" ) ), cube_after_a_then_bc() );
    auto after_bc = apply_sse( C, { "b", "c" }, chi( "c" ) );
    l.same( "cube.bc", "b,c share on chi_c", after_bc, cube_after_bc() );
    l.truth( "cube.bc.chi-a", "chi_a after b,c share", after_bc, chi( "a" ), { "w1", "w3", "w5", "w7" } );
    l.same( "cube.bc-a", "then a shares on chi_a", apply_sse( after_bc, { "a" }, chi( "a" ) ), cube_after_bc_then_a() );
    l.holds( "cube.order.a-first", "a first, then b,c: c knows its bit", C, "w3",
             "[sse a | " + chi_a_text + "] [sse b,c | " + chi_c_text + "] " + chi_c_text );
    l.fails( "cube.order.bc-first", "b,c first, then a: c does not", C, "w3",
             "[sse b,c | " + chi_c_text + "] [sse a | " + chi_a_text + "] " + chi_c_text );

    auto after_ab = apply_sse( C, { "a", "b" }, chi_or() );
    l.same( "cube.ab", "a,b share on chi_or", after_ab, cube_after_all_or() );
    l.same( "cube.ab-c", "then c shares on chi_or", apply_sse( after_ab, { "c" }, chi_or() ), cube_after_ab_then_c() );
    l.holds( "cube.split.sequential", "a,b then c gives a its bit", C, "w2",
             "[sse a,b | " + chi_or_text + "] [sse c | " + chi_or_text + "] " + chi_a_text );
    l.fails( "cube.split.joint", "all at once does not", C, "w2", "[sse a,b,c | " + chi_or_text + "] " + chi_a_text );

    l.truth( "cube.chi-a-and-c", "chi_a & chi_c holds only at w5", C, f::conj( chi( "a" ), chi( "c" ) ), { "w5" } );
    l.holds( "cube.topics.sequential", "chi_a then chi_c gives b its bit", C, "w3",
             "[sse a,b,c | " + chi_a_text + "] [sse a,b,c | " + chi_c_text + "] " + chi_b_text );
    l.fails( "cube.topics.joint", "sharing on chi_a & chi_c does not", C, "w3",
             "[sse a,b,c | " + chi_a_text + " & " + chi_c_text + "] " + chi_b_text );
    l.same( "cube.topics.joint-model", "sharing on chi_a & chi_c changes nothing",
            apply_sse( C, all, f::conj( chi( "a" ), chi( "c" ) ) ), C );

    return l.out;
}

bool check( const claim& c, std::string* detail )
{
    auto say = [ & ]( const std::string& s ) {
        if ( detail )
            *detail = s;
        return false;
    };
    switch ( c.kind )
    {
    case claim_kind::holds:
    case claim_kind::fails:
    {
        bool v = satisfies( c.m, c.world, c.f );
        if ( v != ( c.kind == claim_kind::holds ) )
            return say( "formula evaluates to " + std::string( v ? "true" : "false" ) );
        return true;
    }
    case claim_kind::truth_set:
    {
        auto got = truth_set( c.m, c.f );
        if ( got != c.worlds )
        {
            std::string s = "truth set is {";
            for ( std::size_t w = 0; w < c.m.world_count(); ++w )
                if ( has_world( got, w ) )
                    s += " " + c.m.sig().worlds[ w ];
            return say( s + " }" );
        }
        return true;
    }
    case claim_kind::same_model:
        if ( !( c.m == *c.expected ) )
            return say( "computed model:\n" + print_model( c.m ) );
        return true;
    case claim_kind::property:
        if ( c.m.rel( c.agent ).transitive() != c.expected_flag )
            return say( "transitivity differs" );
        return true;
    }
    return say( "unknown claim kind" );
}

bool report::all_pass() const { return failures() == 0; }

std::size_t report::failures() const
{
    std::size_t n = 0;
    for ( const auto& r : results )
        n += r.pass ? 0 : 1;
    return n;
}

report run_paper_claims()
{
    report r;
    for ( const auto& c : claims() )
    {
        claim_result x{ c.id, c.about, false, {} };
        x.pass = check( c, &x.detail );
        r.results.push_back( std::move( x ) );
    }
    return r;
}

} // namespace dke::corpus
