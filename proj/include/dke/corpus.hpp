#pragma once

#include "dke/formula.hpp"
#include "dke/kripke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dke::corpus
{

// Three agents a,b,c and atoms p,q,r over four worlds; every relation is an
// equivalence.
model m1();
model m2();
// Two agents a,b and atoms p,q over five worlds; w0 has no loops.
model m3();
// Eight worlds, one per valuation of m_a, m_b, m_c; agent i sees only m_i.
model cube();
// Three worlds where sharing on p changes nothing although D{a,b} p holds.
model stuck();

inline model model_m1() { return m1(); }
inline model model_m2() { return m2(); }
inline model model_m3() { return m3(); }
inline model model_cube() { return cube(); }
inline model prop8_countermodel() { return stuck(); }

// Hand-encoded results of updates, compared against the computed ones.
model eee_m1();
model eee_m2();
model eee_m3();
model see_m1_ab();
model sse_m1_all( const std::string& topic ); // "p", "q" or "r"
model sse_m1_ab( const std::string& topic );  // "p&q", "p&r" or "q&r"

// Cube after the update sequences used for the non-validities.
model cube_after_all_or();      // [sse a,b,c | chi_or]
model cube_after_all_or_twice();
model cube_after_ab_then_c();   // [sse a,b | chi_or] then [sse c | chi_or]
model cube_after_a();           // [sse a | chi_a]
model cube_after_a_then_bc();   // ... then [sse b,c | chi_c]
model cube_after_bc();          // [sse b,c | chi_c]
model cube_after_bc_then_a();   // ... then [sse a | chi_a]

// K_i m_i | K_i ~m_i, and the disjunction over the three agents.
formula chi( const std::string& agent );
formula chi_or();

enum class claim_kind
{
    holds,      // f is true at (m, world)
    fails,      // f is false at (m, world)
    truth_set,  // truth set of f in m equals `worlds`
    same_model, // m equals `expected`
    property,   // relation of `agent` in m is (not) transitive, as `expected_flag` says
};

struct claim
{
    std::string id;
    std::string about;
    claim_kind kind;
    model m;
    std::size_t world = 0;
    formula f;
    std::optional< model > expected;
    world_set worlds = 0;
    std::string agent;
    bool expected_flag = false;
};

std::vector< claim > claims();

// True when the claim holds; `detail` explains a failure.
bool check( const claim& c, std::string* detail = nullptr );

struct claim_result
{
    std::string id;
    std::string about;
    bool pass;
    std::string detail;
};

struct report
{
    std::vector< claim_result > results;
    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] std::size_t failures() const;
};

report run_paper_claims();

} // namespace dke::corpus
