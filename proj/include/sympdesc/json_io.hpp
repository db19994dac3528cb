// SPDX-License-Identifier: MIT
#pragma once

#include <json.hpp>

#include "sympdesc/descent.hpp"
#include "sympdesc/orbits.hpp"
#include "sympdesc/reps.hpp"
#include "sympdesc/symbols.hpp"
#include "sympdesc/wavefront.hpp"

namespace sympdesc {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const Symbol& s);
Json to_json(const RationalOrbit& o);
Json to_json(const LayeredOrbit& o);
Json to_json(const SupportOrbit& o);
Json to_json(const CaseARep& r);
Json to_json(const GeneralRep& r);
Json to_json(const Representation& r);
Json to_json(const DescentNode& n);
Json to_json(const WavefrontResult& w);

// Throws Parse on malformed input.
Symbol symbol_from_json(const Json& j);
CaseARep case_a_from_json(const Json& j);
Representation rep_from_json(const Json& j);

// One atlas line for a unipotent or theta symbol.
Json atlas_record(const Symbol& s);

// Unipotent symbols and theta-class representatives of rank <= max_rank,
// sorted by (rank, defect, symbol). Rank 0 contributes only (0 ; -).
std::vector<Symbol> atlas_symbols(int max_rank);

// Symbols of exactly this rank in the same order.
std::vector<Symbol> representation_symbols(int rank);

}  // namespace sympdesc
