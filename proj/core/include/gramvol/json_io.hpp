#pragma once

#include "gramvol/census.hpp"
#include "gramvol/cohomology.hpp"
#include "gramvol/graph.hpp"
#include "gramvol/simplex.hpp"
#include "gramvol/sym_matrix.hpp"
#include "gramvol/volume.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace gramvol {

using Json = nlohmann::json;

// Schema violations (wrong type, missing key, bad value). I/O layers map
// these to "format error" exits, distinct from domain rejections.
struct json_format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rationals serialize as bare integers when they are integral and fit a
// double-exact range, as canonical "p/q" (or "p") strings otherwise.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"n": int, "entries": [[...], ...]} (symmetric, validated).
Json matrix_to_json(const RationalSymMatrix& m);
RationalSymMatrix matrix_from_json(const Json& j);

// {"n": int, "edges": [[i, j], ...]} with 1-based vertices, i <= j.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Graph JSON plus {"values": {"i-j": rational, ...}}.
Json cochain_to_json(const Cochain1Q& f);
Cochain1Q cochain_from_json(const Json& j);

Json signature_to_json(const Signature& s);

// {"p": int, "q": int, "gram": matrix}.
Json simplex_to_json(const MarkedSimplex& s);
MarkedSimplex simplex_from_json(const Json& j);

// {"finite": bool, "stable_set": [...]|null, "boundary": [...]|null,
//  "weights": [...]|null}; weight entries listed for vertices 1..n.
Json verdict_to_json(const VolumeVerdict& v);

// {"R": float, "samples": int, "estimate": float, "std_error": float,
//  "seed": int}.
Json estimate_to_json(const VolumeEstimate& e);

Json witness_to_json(const GaugeWitness& w);

Json census_row_to_json(const CensusRow& row);
Json cycle_table_to_json(const CycleClassTable& t);
Json h22_report_to_json(const H22CensusReport& r);

}  // namespace gramvol
