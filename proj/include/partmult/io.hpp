#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "partmult/analysis.hpp"
#include "partmult/constructions.hpp"
#include "partmult/engine.hpp"

namespace partmult::io {

using json = nlohmann::json;

// descriptor interchange, e.g. {"kind":"geometric","base":2}; parsing rejects
// non-positive integers and base/modulus < 2
json descriptor_to_json(const SetDescriptor& d);
SetDescriptor descriptor_from_json(const json& j);

/// JSON object if the text starts with '{', otherwise shorthand:
/// "naturals", "pow2", "odds", "evens", "notdiv3", "factorials",
/// "selfpowers", "ap:1:2", or a comma list like "1,2,3".
SetDescriptor parse_descriptor(const std::string& text);

/// Fixed-point decimal rendering of an exact rational, rounded half-up.
std::string decimal_string(const mpq_class& q, int decimals);

std::string engine_path_name(EnginePath path);

// count tables: CSV columns n,p with big integers as decimal strings; JSON
// embeds the descriptors for provenance
void write_table_csv(const CountTable& t, std::ostream& os);
json table_to_json(const CountTable& t);

json witnesses_to_json(const EnumerationResult& r, i64 n);
void write_witnesses_csv(const EnumerationResult& r, std::ostream& os);

json growth_to_json(const GrowthReport& r);
void write_growth_csv(const GrowthReport& r, std::ostream& os);

json bounds_to_json(const BoundsReport& r);
void write_bounds_csv(const std::vector<BoundsReport>& rs, std::ostream& os);

json iterated_to_json(const IteratedSearchResult& r);
void write_iterated_csv(const IteratedSearchResult& r, std::ostream& os);

json schur_to_json(const std::vector<SchurPoint>& pts, const CountTable& t);
void write_schur_csv(const std::vector<SchurPoint>& pts, const CountTable& t,
                     std::ostream& os);

json be_to_json(const BeReport& r, i64 bound);
void write_be_csv(const BeReport& r, std::ostream& os);

json staircase_to_json(const StaircaseSequence& s);
void write_staircase_csv(const StaircaseSequence& s, i64 f_max, std::ostream& os);

}  // namespace partmult::io
