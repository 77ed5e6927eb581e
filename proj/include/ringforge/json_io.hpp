#pragma once

#include "ringforge/forms.hpp"
#include "ringforge/order.hpp"
#include "ringforge/param.hpp"
#include "ringforge/verify.hpp"

#include <json.hpp>

namespace ringforge {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; both shapes are accepted on input.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(const BinaryForm& form);
BinaryForm form_from_json(const Json& j);

Json to_json(const UnimodularMatrix& m);
UnimodularMatrix matrix_from_json(const Json& j);

Json coords_to_json(const std::vector<BigInt>& coords);
std::vector<BigInt> coords_from_json(const Json& j);

Json to_json(const PolyMatrix& m);

// Structure constants travel as a symmetric table of integer coordinate
// vectors; symbolic tables are not part of the wire format.
Json to_json(const StructureConstants& table);
StructureConstants table_from_json(const Json& j);

Json to_json(const Certificate& cert);

Json to_json(const IsoReport& report);

} // namespace ringforge
