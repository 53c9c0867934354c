#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "spinrep/srep.hpp"
#include "spinrep/trep.hpp"

namespace spinrep {

using json = nlohmann::json;

/// {"two_s": N, "matrix": [[re, im], ...]} with (N+1)^2 entries, row-major, m descending.
json state_to_json(const Matrix& rho);
/// Rejects non-Hermitian input when herm_tol >= 0.
Matrix state_from_json(const json& j, double herm_tol = 1e-8);

json class_to_json(const SubconstellationClass& cls);
SubconstellationClass class_from_json(const json& j);

json trep_to_json(const TRep& t);
TRep trep_from_json(const json& j);

json srep_to_json(const SRepVector& s);
SRepVector srep_from_json(const json& j);

/// Two-space indented JSON with a trailing newline; doubles round-trip exactly.
std::string dump(const json& j);
/// Parse errors become InvalidArgument.
json parse_json(std::istream& is);

} // namespace spinrep
