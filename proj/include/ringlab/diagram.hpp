#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "ringlab/catalog.hpp"
#include "ringlab/properties.hpp"

namespace ringlab {

// The sixteen property nodes of the implication diagram, in report order.
// right_duo and left_mccoy are checkable properties but not diagram nodes.
inline constexpr std::array<property_id, 16> diagram_nodes{
    property_id::commutative,     property_id::duo,
    property_id::left_duo,        property_id::semicommutative,
    property_id::two_primal,      property_id::symmetric,
    property_id::reversible,      property_id::abelian,
    property_id::dedekind_finite, property_id::reduced,
    property_id::armendariz,      property_id::lin_armendariz,
    property_id::mccoy,           property_id::right_mccoy,
    property_id::lin_mccoy,       property_id::right_lin_mccoy,
};

struct diagram_edge {
  property_id from, to;
  bool operator==(const diagram_edge&) const = default;
};

// Frozen arrow list, transcribed arrow for arrow from the source diagram;
// never mutated at runtime.
std::span<const diagram_edge> builtin_diagram_edges();

enum class edge_status { consistent, violated, vacuous };
const char* edge_status_name(edge_status s);

struct edge_result {
  diagram_edge edge;
  edge_status status = edge_status::vacuous;
  std::vector<std::string> witness_rings; // violating rings, corpus order
};

struct diagram_report {
  mccoy_bound bound;
  std::vector<std::string> ring_names;        // corpus order
  std::vector<std::vector<verdict>> verdicts; // [ring][diagram_nodes index]
  std::vector<edge_result> edges;             // builtin_diagram_edges order
};

// Evaluates every node on every ring (bounded properties at `bound`), then
// checks each arrow P -> Q: a ring where P held (exactly or up to the
// bound) and Q concretely failed violates the arrow. Rings where the
// antecedent never held leave the arrow vacuous. jobs > 1 spreads the
// (ring, node) cells over threads; results are stored by index, so the
// report does not depend on scheduling.
diagram_report check_diagram(const ring_corpus& corpus, mccoy_bound bound,
                             unsigned jobs = 1);

struct nonimplication_witness {
  property_id from, to;
  std::string ring_name;
};

// Scans every ordered node pair that is NOT an arrow for rings where the
// antecedent holds and the consequent fails. An empty result means "no
// witness in this corpus at this bound", never "implication proven".
std::vector<nonimplication_witness>
hunt_nonimplications(const diagram_report& rep);

std::string serialize(const diagram_report& rep);
std::string serialize(const std::vector<nonimplication_witness>& ws);
std::string verdict_matrix_csv(const diagram_report& rep);

} // namespace ringlab
