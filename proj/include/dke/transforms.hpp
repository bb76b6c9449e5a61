#pragma once

#include "dke/formula.hpp"
#include "dke/kripke.hpp"

#include <map>
#include <string>

namespace dke
{

// Pairs that chi separates, and its complement (pairs chi cannot tell apart).
// chi is evaluated in m.
relation fullig( const model& m, const formula& chi );
relation knonfu( const model& m, const formula& chi );
inline relation full_ignorance_relation( const model& m, const formula& chi ) { return fullig( m, chi ); }
inline relation knowing_only_relation( const model& m, const formula& chi ) { return knonfu( m, chi ); }

// R_{D,S}, except that the empty group gives W x W.
relation group_relation( const model& m, const agent_set& s );

model apply_eee( const model& m );
model apply_see( const model& m, const agent_set& s );
model apply_sse( const model& m, const agent_set& s, const formula& chi );
model apply_sse_intersection( const model& m, const agent_set& s, const formula& chi );

// Agent i reads the information of every agent in alpha(i); i must be in alpha(i).
using reading = std::map< std::string, agent_set >;
reading parse_reading( const std::string& spec );
model apply_read( const model& m, const reading& alpha );
inline model apply_reading_event( const model& m, const reading& alpha ) { return apply_read( m, alpha ); }

pointed_model apply_eee( const pointed_model& pm );
pointed_model apply_see( const pointed_model& pm, const agent_set& s );
pointed_model apply_sse( const pointed_model& pm, const agent_set& s, const formula& chi );

} // namespace dke
