#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "liebracket/classify.hpp"
#include "liebracket/constructions.hpp"
#include "liebracket/deform.hpp"

namespace liebracket {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"rows": n, "cols": m, "entries": [["p/q", ...], ...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"dim": d, "brackets": [{"i": a, "j": b, "terms": [{"k": c, "coef": "p/q"}]}]}
Json to_json(const StructureConstants& sc);
StructureConstants constants_from_json(const Json& j);

Json to_json(const Vector& v);
Json to_json(const Subspace& s);
Json to_json(const InvariantSignature& sig);
Json to_json(const HomResult& h);
Json to_json(const JacobiResult& r);
Json to_json(const ClassificationReport& report);
Json to_json(const LaurentScalar& x);
Json to_json(const EpsStructureConstants& c);
Json to_json(const CoboundaryResult& r);
Json to_json(const CatalogEntry& e);

/// {"pass": bool, "witness": {...} | null}
Json verdict(bool pass, Json witness = nullptr);

/// Representation file: {"constants": <StructureConstants>, "labels": [...]?,
/// "images": [<Matrix>, ...]}.
RepCandidate rep_from_json(const Json& j);

}  // namespace liebracket
