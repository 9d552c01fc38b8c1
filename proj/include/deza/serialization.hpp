#ifndef DEZA_SERIALIZATION_HPP
#define DEZA_SERIALIZATION_HPP

#include <json.hpp>

#include "deza/analysis.hpp"
#include "deza/cyclotomic.hpp"
#include "deza/enumeration.hpp"
#include "deza/spectra.hpp"

namespace deza {

using Json = nlohmann::ordered_json;

// Absent optionals serialise as null.
void to_json(Json& j, const Witness& w);
void to_json(Json& j, const DezaReport& report);
void to_json(Json& j, const Eigenvalue& e);
void to_json(Json& j, const Spectrum& s);
void to_json(Json& j, const SchemeData& data);
void to_json(Json& j, const CensusRecord& record);

/// Inverse of to_json for census lines. Throws DomainError on malformed input.
CensusRecord census_record_from_json(const Json& j);

}  // namespace deza

#endif  // DEZA_SERIALIZATION_HPP
