#pragma once

#include <json.hpp>

#include "rw/algebras.hpp"
#include "rw/chains.hpp"
#include "rw/ordered.hpp"
#include "rw/ramsey.hpp"
#include "rw/terms.hpp"

namespace rw {

using json = nlohmann::json;

// {"n": domain, "k": codomain, "table": [...]}
json to_json(const ChainMap& f);
ChainMap chain_map_from_json(const json& j);

// {"symbols": [{"name": ..., "arity": ...}, ...]} in signature order.
json to_json(const Signature& sig);
Signature signature_from_json(const json& j);

// Variables {"var": i}, applications {"op": name, "args": [...]}.
json to_json(const Term& t);
Term term_from_json(const json& j, const Signature& sig);

// {"signature": ..., "size": ..., "tables": {name: nested arrays}} where a
// table nests one array level per argument (a constant is a bare integer).
json to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const json& j);

// Adds "order" (and "name" when set) to the algebra object.
json to_json(const OrderedAlgebra& a);
OrderedAlgebra ordered_from_json(const json& j);

json to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

// Map table plus the three check verdicts.
json rigid_epi_to_json(const RigidEpimorphism& e);

json to_json(const ArrowCertificate& cert);
ArrowCertificate arrow_certificate_from_json(const json& j);

json to_json(const SegmentCertificate& cert);

json to_json(const TransportCertificate& cert);

}  // namespace rw
