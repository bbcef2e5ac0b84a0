#pragma once

#include <json.hpp>

#include <string>

#include "biell/irrationality.hpp"
#include "biell/lattice.hpp"
#include "biell/surface.hpp"
#include "biell/ulrich.hpp"
#include "biell/walls.hpp"
#include "biell/wbn.hpp"

namespace biell {

using json = nlohmann::ordered_json;

// All encoders produce key order fixed at insertion; combined with indent-2
// dumping this keeps CLI output byte-stable.

json to_json(NumClass d);                    // [a, b]
json to_json(const MukaiVector& v);          // {"r":..,"c1":[a,b],"s":..}
json surface_record(SurfaceType t);          // SurfaceInvariants field names
json to_json(const CoverDescriptor& c);
json to_json(const Wall& w);                 // {"xi":[..],"ample_direction":[..]}
json to_json(const CohomologyVector& h);     // [h0|null, h1|null, h2|null]
json to_json(const WbnReport& rep);
json to_json(const NonemptinessVerdict& v);
json to_json(const UlrichCandidate& c);
json to_json(const UlrichVerdict& v);
json to_json(const IrrCertificate& c);
json to_json(const IrrResult& r);
json to_json(const MinimalityReport& rep);

/// CLI literal "a,b".
NumClass parse_num_class(const std::string& text);
/// CLI literal "r,a,b,s".
MukaiVector parse_mukai_vector(const std::string& text);

std::string format_num_class(NumClass d);
std::string format_mukai_vector(const MukaiVector& v);

}  // namespace biell
