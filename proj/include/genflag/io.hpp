#pragma once

#include <json.hpp>

#include "genflag/flag_point.hpp"
#include "genflag/isotropic.hpp"
#include "genflag/operator.hpp"

namespace genflag {

/// Documents are JSON with exact rationals as "p/q" strings and index
/// windows as inclusive bounds. Key order is fixed so equal values
/// serialize byte-identically.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Json& j);

Json interval_to_json(const IndexInterval& w);
IndexInterval interval_from_json(const Json& j, const IndexSchema& ord);

Json schema_to_json(const FlagSchema& s);
FlagSchema schema_from_json(const Json& j);

Json operator_to_json(const StructuredOperator& f);
StructuredOperator operator_from_json(const Json& j, const FlagSchema& s);

Json point_to_json(const FlagPoint& p);
FlagPoint point_from_json(const Json& j, const FlagSchema& s);

/// Parses a whole document ({"schema": ...}, {"operator": ...} or
/// {"point": ...}); throws bad_input on anything malformed.
Json parse_document(const std::string& text);

} // namespace genflag
