#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "pedestal/identities.hpp"
#include "pedestal/pedestal.hpp"
#include "pedestal/posets.hpp"
#include "pedestal/ring.hpp"
#include "pedestal/rpp.hpp"
#include "pedestal/shapes.hpp"

namespace ped {

// Insertion-ordered so emitted bytes follow the documented key order.
using Json = nlohmann::ordered_json;

// All parsers throw Error(ErrorKind::Parse) on malformed JSON and the owning
// type's error on invalid content.

/// "3,2" -> (3,2); "" or "0" -> empty partition.
Partition parse_shape(std::string_view text);
Json parse_json(std::string_view text);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const Json& j);

/// {"elements":[...],"covers":[[a,b],...]}
Json to_json(const Poset& poset);
Poset poset_from_json(const Json& j);

/// Tableau rows on a Young poset, otherwise the array of labels in order.
Json to_json(const LinearExtension& e);
LinearExtension extension_from_json(const Poset& poset, const Json& j);

/// Row arrays on a Young poset, otherwise {"values":{label:value,...}}.
Json to_json(const ReversePlanePartition& rpp);
ReversePlanePartition rpp_from_json(const Poset& poset, const Json& j);

/// {"P":...,"Q":...,"values":...}; "values" holds the row arrays, or the
/// label map for a general poset.
Json to_json(const Pedestal& pedestal);

/// {"n":..,"truncation":V|null,"terms":[{"indices":[...],"coeff":c},...]}
Json to_json(const Series& s);
Series series_from_json(const Json& j);

/// {"coeffs":[...]} ascending degree.
Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json to_json(const IndependenceReport& r);
Json to_json(const FactorizationReport& r);
Json to_json(const HookIdentityReport& r);
Json to_json(const MajComajReport& r);
Json to_json(const FamilyReport& r);
Json to_json(const SymmetryWitness& w);

} // namespace ped
