#pragma once

#include "infcov/arrangements.hpp"
#include "infcov/complex.hpp"
#include "infcov/covers.hpp"
#include "infcov/fields.hpp"
#include "infcov/fox.hpp"
#include "infcov/laurent.hpp"

#include "json.hpp"

#include <string>

namespace infcov::io {

using nlohmann::ordered_json;
using Json = ordered_json;

/// Parses text, mapping syntax errors to ErrorKind::Parse with the line and
/// column of the failure. `source` names the input in messages.
Json parse_json(const std::string& text, const std::string& source);
/// Reads and parses a file (Parse on I/O failure too).
Json load_json_file(const std::string& path);

/// Machine integers stay numbers; anything wider becomes a decimal string.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j, const std::string& where);
std::int64_t int_from_json(const Json& j, const std::string& where);

Json to_json(const LaurentPolyZ& p);
LaurentPolyZ laurent_from_json(const Json& j, const std::string& where);

Json to_json(const LaurentMatrixZ& m);
LaurentMatrixZ laurent_matrix_from_json(const Json& j, const std::string& where);
Json to_json(const IntMatrix& m);

Json to_json(const EquivariantComplex& cx);
EquivariantComplex complex_from_json(const Json& j);

Json to_json(const FieldSpec& f);
FieldSpec field_spec_from_json(const Json& j, const std::string& where);

Json to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);
EpimorphismToZ epimorphism_from_json(const Json& j);
Character character_from_json(const Json& j);

Json to_json(const OrbifoldData& d);

/// Integer normals only, as in {"ambient": "P2", "lines": [...], "infinity": i}.
LineArrangement arrangement_from_json(const Json& j);
/// Coordinates rendered through the coefficient field.
Json to_json(const LineArrangement& arr);
Json to_json(const IntersectionData& inter, const Field& field);

/// {"classes": ..., "weights": ..., "base_locus": ...}; the arrangement comes
/// from "arrangement" or is supplied separately. Without "base_locus" the
/// points where two or more classes meet are used.
Multinet multinet_from_json(const Json& j, const LineArrangement& arr);

Json to_json(const SnfResult& s);
Json to_json(const TorsionSummary& t);
Json to_json(const MahlerMeasure& m);

} // namespace infcov::io
