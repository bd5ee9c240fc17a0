#include "gramvol/json_io.hpp"

#include <string>

namespace gramvol {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw json_format_error(std::string("missing key '") + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw json_format_error(std::string("expected integer for ") + what);
  return j.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) {
    const BigInt num = numerator(r);
    if (num >= -(BigInt(1) << 53) && num <= (BigInt(1) << 53))
      return Json(num.convert_to<long long>());
  }
  return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw json_format_error(e.what());
    }
  }
  throw json_format_error("rationals must be integers or 'p/q' strings");
}

Json matrix_to_json(const RationalSymMatrix& m) {
  Json entries = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(rational_to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"n", m.size()}, {"entries", std::move(entries)}};
}

RationalSymMatrix matrix_from_json(const Json& j) {
  const int n = require_int(require(j, "n"), "matrix dimension");
  if (n < 1) throw json_format_error("matrix dimension must be positive");
  const Json& entries = require(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n))
    throw json_format_error("matrix needs n rows");
  RationalSymMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const Json& row = entries[i - 1];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw json_format_error("matrix rows need n entries");
    for (int k = 1; k <= n; ++k) {
      const Rational v = rational_from_json(row[k - 1]);
      if (k < i && v != m.at(i, k))
        throw json_format_error("matrix entries are not symmetric");
      m.set(i, k, v);
    }
  }
  return m;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const int n = require_int(require(j, "n"), "vertex count");
  if (n < 1) throw json_format_error("graphs need at least one vertex");
  const Json& edges = require(j, "edges");
  if (!edges.is_array()) throw json_format_error("edges must be an array");
  Graph g(n);
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2)
      throw json_format_error("edges are [i, j] pairs");
    const int u = require_int(e[0], "edge endpoint");
    const int v = require_int(e[1], "edge endpoint");
    if (u < 1 || v < 1 || u > n || v > n || u > v)
      throw json_format_error("edge endpoints must satisfy 1 <= i <= j <= n");
    g.add_edge(u, v);
  }
  return g;
}

Json cochain_to_json(const Cochain1Q& f) {
  Json j = graph_to_json(f.graph);
  Json values = Json::object();
  for (int k = 0; k < f.graph.edge_count(); ++k) {
    const Edge e = f.graph.edges()[k];
    values[std::to_string(e.u) + "-" + std::to_string(e.v)] = rational_to_json(f.values[k]);
  }
  j["values"] = std::move(values);
  return j;
}

Cochain1Q cochain_from_json(const Json& j) {
  Graph g = graph_from_json(j);
  const Json& values = require(j, "values");
  if (!values.is_object()) throw json_format_error("values must be an object");
  std::vector<Rational> vals(g.edge_count(), Rational(0));
  std::size_t assigned = 0;
  for (const auto& [key, value] : values.items()) {
    const auto dash = key.find('-');
    if (dash == std::string::npos) throw json_format_error("value keys look like 'i-j'");
    int u = 0, v = 0;
    try {
      u = std::stoi(key.substr(0, dash));
      v = std::stoi(key.substr(dash + 1));
    } catch (const std::exception&) {
      throw json_format_error("value keys look like 'i-j'");
    }
    const int idx = g.edge_index(u, v);
    if (idx < 0) throw json_format_error("cochain value on a non-edge '" + key + "'");
    vals[idx] = rational_from_json(value);
    ++assigned;
  }
  if (assigned != static_cast<std::size_t>(g.edge_count()))
    throw json_format_error("cochain needs exactly one value per edge");
  try {
    return Cochain1Q(std::move(g), std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw json_format_error(e.what());
  }
}

Json signature_to_json(const Signature& s) {
  return Json{{"pos", s.pos}, {"neg", s.neg}, {"null", s.nul}};
}

Json simplex_to_json(const MarkedSimplex& s) {
  return Json{{"p", s.p()}, {"q", s.q()}, {"gram", matrix_to_json(s.gram())}};
}

MarkedSimplex simplex_from_json(const Json& j) {
  const int p = require_int(require(j, "p"), "p");
  const int q = require_int(require(j, "q"), "q");
  RationalSymMatrix gram = matrix_from_json(require(j, "gram"));
  return MarkedSimplex(std::move(gram), p, q);
}

Json verdict_to_json(const VolumeVerdict& v) {
  Json j{{"finite", v.finite}};
  if (v.stable) {
    j["stable_set"] = v.stable->inner;
    j["boundary"] = v.stable->boundary;
  } else {
    j["stable_set"] = nullptr;
    j["boundary"] = nullptr;
  }
  if (v.weight) {
    std::vector<int> w(v.weight->weights.begin() + 1, v.weight->weights.end());
    j["weights"] = w;
  } else {
    j["weights"] = nullptr;
  }
  return j;
}

Json estimate_to_json(const VolumeEstimate& e) {
  return Json{{"R", e.truncation_radius},
              {"samples", e.samples},
              {"estimate", e.estimate},
              {"std_error", e.std_error},
              {"seed", e.seed}};
}

Json witness_to_json(const GaugeWitness& w) {
  Json vertices = Json::object();
  for (std::size_t v = 1; v < w.coeff.size(); ++v) {
    vertices[std::to_string(v)] = Json{{"coeff", rational_to_json(w.coeff[v])},
                                       {"exponent", w.exponent[v]},
                                       {"component", w.component[v]}};
  }
  Json t2 = Json::array();
  for (const Rational& t : w.t_squared) t2.push_back(rational_to_json(t));
  return Json{{"vertices", std::move(vertices)},
              {"t_squared", std::move(t2)},
              {"rational", w.is_rational()}};
}

Json census_row_to_json(const CensusRow& row) {
  Json predicted = Json::array();
  for (const Signature& s : row.predicted) predicted.push_back(signature_to_json(s));
  Json realized = Json::array();
  for (const Signature& s : row.realized) realized.push_back(signature_to_json(s));
  return Json{{"encoding", row.encoding},
              {"graph", graph_to_json(row.graph)},
              {"perm_even", row.perm_even_exists},
              {"perm_odd", row.perm_odd_exists},
              {"predicted_signatures", std::move(predicted)},
              {"realized_signatures", std::move(realized)},
              {"verdict", verdict_to_json(row.verdict)}};
}

Json cycle_table_to_json(const CycleClassTable& t) {
  Json strata = Json::array();
  for (const CycleClassStratum& s : t.strata)
    strata.push_back(Json{{"class", s.label}, {"signature", signature_to_json(s.sig)}});
  return Json{{"n", t.n}, {"h1_dim", t.h1_dim}, {"strata", std::move(strata)}};
}

Json h22_report_to_json(const H22CensusReport& r) {
  return Json{{"total", r.total},
              {"five_cycle_count", r.five_cycle_count},
              {"counterexamples", r.counterexamples}};
}

}  // namespace gramvol
