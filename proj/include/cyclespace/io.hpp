#ifndef CYCLESPACE_IO_HPP
#define CYCLESPACE_IO_HPP

#include <string>

#include <json.hpp>

#include "cyclespace/metric.hpp"
#include "cyclespace/z2.hpp"

namespace cyclespace {

/**
 * Graph wire format:
 *   {"vertices": n,
 *    "edges": [{"id": k, "tail": u, "head": v, "length": "p/q"}, ...]}
 * Lengths are decimal-free rational strings; ids must be dense 0..m-1 (any
 * order). Parse errors throw std::invalid_argument.
 */
WeightedMultigraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const WeightedMultigraph& g);

/// Undirected DOT with the length as edge label.
std::string graph_to_dot(const WeightedMultigraph& g);

/// Edge sets travel as sorted edge-index arrays.
EdgeSetZ2 edge_set_from_json(const WeightedMultigraph& g, const nlohmann::json& j);
nlohmann::json edge_set_to_json(const EdgeSetZ2& z);

/// Circulations as [{"edge": k, "flow": z}, ...] over the nonzero entries.
Circulation circulation_from_json(const WeightedMultigraph& g, const nlohmann::json& j);
nlohmann::json circulation_to_json(const Circulation& c);

/// Classes as plain chord-vector arrays in the forest's chord order.
HomologyClass class_from_json(const nlohmann::json& j);
nlohmann::json class_to_json(const HomologyClass& h);

/// Closed walks as {"start": v, "steps": [{"edge": k, "forward": b}, ...]}.
ClosedWalk walk_from_json(const nlohmann::json& j);
nlohmann::json walk_to_json(const ClosedWalk& w);

/// Sigma-representatives as ordered cycle lists with exact lengths and
/// truncation indices; "streamed" marks a representative with a tail beyond
/// the stored prefix.
nlohmann::json sigma_to_json(const SigmaRepresentative& rep);

/// {"exact": "p/q", "approx": <double>} — exact field is authoritative.
nlohmann::json exact_number(const Rational& r);
/// {"exact_pi_coefficient": "q", "display": "q·π", "approx": <double>}.
nlohmann::json budget_number(const AreaBudget& b);

/// FNV-1a hex digest of a canonical JSON dump, echoed in reports.
std::string json_digest(const nlohmann::json& j);

} // namespace cyclespace

#endif
