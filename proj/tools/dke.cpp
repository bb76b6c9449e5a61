#include "dke/corpus.hpp"
#include "dke/dot.hpp"
#include "dke/semantics.hpp"
#include "dke/transforms.hpp"
#include "dke/translate.hpp"
#include "dke/validity.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

// exit codes
constexpr int ok = 0;
constexpr int negative = 1;
constexpr int usage = 2;

std::string slurp( const std::string& path )
{
    std::ifstream in( path );
    if ( !in )
        throw dke::error( "usage", "cannot read '" + path + "'" );
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector< std::string > split_list( const std::string& s )
{
    std::vector< std::string > out;
    std::istringstream in( s );
    for ( std::string x; std::getline( in, x, ',' ); )
        if ( !x.empty() )
            out.push_back( x );
    return out;
}

void emit( const std::string& text, const std::string& out_path )
{
    if ( out_path.empty() )
    {
        std::cout << text;
        return;
    }
    std::ofstream out( out_path );
    if ( !out )
        throw dke::error( "usage", "cannot write '" + out_path + "'" );
    out << text;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Distributed knowledge and communication updates on finite Kripke models" };
    app.require_subcommand( 1 );

    std::string model_path, world, formula_text, op_name, agents, topic, alpha, out_path, atoms, demo_name;
    std::size_t max_worlds = 2, sample = 0;
    std::uint64_t seed = 1;
    bool trace = false;

    auto* check = app.add_subcommand( "check", "evaluate a formula at a world" );
    check->add_option( "--model", model_path, "model file" )->required();
    check->add_option( "--world", world, "world name (defaults to the model's point)" );
    check->add_option( "--formula", formula_text, "formula" )->required();

    auto* transform = app.add_subcommand( "transform", "apply a communication update" );
    transform->add_option( "--model", model_path, "model file" )->required();
    transform->add_option( "--op", op_name, "eee, see, sse or read" )
            ->required()
            ->check( CLI::IsMember( { "eee", "see", "sse", "read" } ) );
    transform->add_option( "--agents", agents, "comma-separated sharing agents" );
    transform->add_option( "--topic", topic, "topic formula for sse" );
    transform->add_option( "--alpha", alpha, "reading, e.g. a:a,b;b:b" );
    transform->add_option( "--out", out_path, "write the model here instead of stdout" );

    auto* translate = app.add_subcommand( "translate", "rewrite a formula without updates" );
    translate->add_option( "--formula", formula_text, "formula" )->required();
    translate->add_option( "--agents", agents, "agent roster for [eee] (defaults to the formula's agents)" );
    translate->add_flag( "--trace", trace, "print every rewriting step" );

    auto* validity = app.add_subcommand( "validity", "search small models for a countermodel" );
    validity->add_option( "--formula", formula_text, "formula" )->required();
    validity->add_option( "--max-worlds", max_worlds, "largest model size" )->required();
    validity->add_option( "--agents", agents, "comma-separated agents" )->required();
    validity->add_option( "--atoms", atoms, "comma-separated atoms" )->required();
    validity->add_option( "--sample", sample, "check this many random models instead of all" );
    validity->add_option( "--seed", seed, "seed for --sample" );

    auto* demo = app.add_subcommand( "demo", "check the built-in claims ledger" );
    demo->add_option( "name", demo_name, "which demo" )->required()->check( CLI::IsMember( { "paper", "claims" } ) );

    auto* dot = app.add_subcommand( "dot", "print a model as Graphviz" );
    dot->add_option( "--model", model_path, "model file" )->required();

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        int code = app.exit( e );
        return code == 0 ? ok : usage;
    }

    try
    {
        if ( *check )
        {
            auto pm = dke::parse_model( slurp( model_path ) );
            std::size_t w;
            if ( !world.empty() )
                w = pm.m.world( world );
            else if ( pm.point )
                w = *pm.point;
            else
                throw dke::error( "usage", "no --world given and the model has no point" );
            bool v = dke::satisfies( pm.m, w, dke::parse_formula( formula_text ) );
            std::cout << ( v ? "true" : "false" ) << "\n";
            return v ? ok : negative;
        }
        if ( *transform )
        {
            auto pm = dke::parse_model( slurp( model_path ) );
            auto group = dke::make_agents( split_list( agents ) );
            std::optional< dke::model > out;
            if ( op_name == "eee" )
                out = dke::apply_eee( pm.m );
            else if ( op_name == "see" )
                out = dke::apply_see( pm.m, group );
            else if ( op_name == "sse" )
            {
                if ( topic.empty() )
                    throw dke::error( "usage", "--op sse needs --topic" );
                out = dke::apply_sse( pm.m, group, dke::parse_formula( topic ) );
            }
            else
            {
                if ( alpha.empty() )
                    throw dke::error( "usage", "--op read needs --alpha" );
                out = dke::apply_read( pm.m, dke::parse_reading( alpha ) );
            }
            emit( dke::print_model( *out, pm.point ), out_path );
            return ok;
        }
        if ( *translate )
        {
            auto f = dke::parse_formula( formula_text );
            auto roster = split_list( agents );
            if ( !trace )
            {
                std::cout << dke::to_string( dke::translate( f, roster ) ) << "\n";
                return ok;
            }
            auto t = dke::translate_traced( f, roster );
            for ( const auto& s : t.trace )
                std::cout << std::string( 2 * s.depth, ' ' ) << s.clause << ": " << dke::to_string( s.input )
                          << "  =>  " << dke::to_string( s.output ) << "\n";
            std::cout << dke::to_string( t.result ) << "\n";
            return ok;
        }
        if ( *validity )
        {
            dke::search_bounds b;
            b.max_worlds = max_worlds;
            b.agents = split_list( agents );
            b.atoms = split_list( atoms );
            if ( sample > 0 )
                b.sample = dke::sample_spec{ sample, seed };
            auto v = dke::check_validity( dke::parse_formula( formula_text ), b );
            if ( v.valid )
            {
                std::cout << "valid up to bound (" << max_worlds << " worlds, " << v.models_checked << " models, "
                          << ( v.exhaustive ? "exhaustive" : "sampled" ) << ")\n";
                return ok;
            }
            const auto& cm = *v.countermodel;
            std::cout << "countermodel at " << cm.m.sig().worlds[ cm.world ] << " after " << v.models_checked
                      << " models:\n"
                      << dke::print_model( cm.m, cm.world );
            return negative;
        }
        if ( *demo )
        {
            auto r = dke::corpus::run_paper_claims();
            for ( const auto& c : r.results )
            {
                std::cout << ( c.pass ? "PASS " : "FAIL " ) << c.id << "  (" << c.about << ")\n";
                if ( !c.pass )
                    std::cout << "     " << c.detail << "\n";
            }
            std::cout << r.results.size() - r.failures() << "/" << r.results.size() << " claims hold\n";
            return r.all_pass() ? ok : negative;
        }
        if ( *dot )
        {
            auto pm = dke::parse_model( slurp( model_path ) );
            std::cout << dke::to_dot( pm.m, pm.point );
            return ok;
        }
    }
    catch ( const dke::error& e )
    {
        std::cerr << "error: " << e.what();
        if ( e.position() )
            std::cerr << " (at position " << *e.position() << ")";
        std::cerr << "\n";
        return usage;
    }
    return usage;
}
