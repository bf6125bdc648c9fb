#pragma once

#include <json.hpp>

#include "noether/case_verifier.hpp"
#include "noether/classify.hpp"
#include "noether/field.hpp"
#include "noether/group.hpp"
#include "noether/laurent.hpp"
#include "noether/lattice.hpp"
#include "noether/monomial.hpp"

namespace noether {

using Json = nlohmann::json;

// Every reader throws ParseError on malformed documents.

Json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, int rows, int cols);

Json automorphism_to_json(const MonomialAutomorphism& a);
MonomialAutomorphism automorphism_from_json(const Json& j);

Json monomial_matrix_to_json(const MonomialMatrix& m);
MonomialMatrix monomial_matrix_from_json(const Json& j);

/// {"family": "G8", "n": 5}, {"order": N, "table": [[...]]} or
/// {"degree": d, "generators": [[...]]}. Cayley documents may list
/// "generators" as element indices to fix the generator order.
Json group_to_json(const Group& g);
Group group_from_json(const Json& j);

/// {"group": ..., "variables": [...], "images": [one automorphism per generator]}.
Json action_to_json(const ActionAssignment& a);
ActionAssignment action_from_json(const Json& j);

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json chain_to_json(const ReductionChain& c);

Json report_to_json(const CaseReport& r);
CaseReport report_from_json(const Json& j);

/// Reads a whole file as JSON: InvalidInput if it cannot be opened, ParseError if it is not JSON.
Json read_json_file(const std::string& path);

}  // namespace noether
