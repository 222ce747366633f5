#pragma once

#include <json.hpp>

#include "coxdim/gp.hpp"
#include "coxdim/product_bounds.hpp"
#include "coxdim/racg.hpp"
#include "coxdim/simplicial.hpp"
#include "coxdim/spine.hpp"

namespace coxdim {

/// Key-order-preserving JSON, so reports are byte-deterministic.
using Json = nlohmann::ordered_json;

/// {"vertices": ["a", ...], "edges": [["a","b"], ...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// {"maximal_faces": [["a","b","c"], ...]}
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

/// [{"d": 3, "exponent": 3, "mult": 1}, ...]; "mult" defaults to 1.
std::vector<FactorProfile> profiles_from_json(const Json& j);

Json group_to_json(const FgAbelianGroup& g);
Json certificate_to_json(const RacgCertificate& c);
Json gp_report_to_json(const GpReport& r);
Json product_report_to_json(const ProductReport& r);
Json tree_to_json(const QuotientTree& t);
Json stab_report_to_json(const StabBoundReport& r);
Json out_bounds_to_json(const OutBounds& b);
Json aut_bounds_to_json(const AutBounds& b);

/// Parses text as JSON with an InputError on malformed documents.
Json parse_json_text(const std::string& text);

}  // namespace coxdim
