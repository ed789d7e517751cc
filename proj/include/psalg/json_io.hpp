#ifndef PSALG_JSON_IO_HPP
#define PSALG_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "psalg/catalog.hpp"
#include "psalg/solver.hpp"
#include "psalg/suite.hpp"

namespace psalg {

// All emitters use ordered JSON and map-ordered term lists, so identical
// inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& q);          // {"num": ..., "den": ...}
Rat rat_from_json(const Json& j);        // accepts that object, an integer, or "p/q"

Json lie_to_json(const LieAlgebra& L);
LiePtr lie_from_json(const Json& j);

Json uel_to_json(const UEl& u);
UEl uel_from_json(const Json& j, const LiePtr& lie);

Json t2_to_json(const T2& a);
T2 t2_from_json(const Json& j, const LiePtr& lie);
Json t3_to_json(const T3& a);

Json table_to_json(const ProductTable& T);
ProductTable table_from_json(const Json& j);

Json pseudo3_to_json(const PseudoEl3& x);

Params params_from_json(const Json& j, const LiePtr& lie);
Json params_to_json(const Params& p);

BasisChange basis_change_from_json(const Json& j, const LiePtr& lie);

Json axiom_report_to_json(const AxiomReport& r);
Json nullspace_to_json(const NullspaceResult& r);
Json suite_report_to_json(const SuiteReport& r);
Json instantiated_to_json(const Instantiated& inst, const std::string& entry_id);

Json load_json_file(const std::string& path);  // MalformedInput on any failure

}  // namespace psalg

#endif
