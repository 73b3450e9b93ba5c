#pragma once

#include <json.hpp>

#include "ratnet/cts.hpp"
#include "ratnet/divfree.hpp"
#include "ratnet/geometry.hpp"
#include "ratnet/network.hpp"

// File formats. nlohmann::json keeps object keys sorted, so serialization is
// deterministic and round-trips are byte-exact.
namespace ratnet::io {

using nlohmann::json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json network_to_json(const NetworkSpec& spec);
NetworkSpec network_from_json(const json& j);

json instantiation_to_json(const Instantiation& inst, const Field& f);
Instantiation instantiation_from_json(const json& j, const Field& f);

json points_to_json(const std::vector<Point>& pts, const Field& f);
std::vector<Point> points_from_json(const json& j, const Field& f);

// {"network": ..., "pairing": {...}, "metrics": {...}, "bindings": {...}}
json divfree_to_json(const DivFreeResult& res);
json metrics_to_json(const DivFreeMetrics& m);
json bindings_to_json(const std::map<Edge, EdgeBinding>& bindings, const Field& f);
std::map<Edge, EdgeBinding> bindings_from_json(const json& j, const Field& f);

json target_to_json(const IdentityTarget& t);
IdentityTarget target_from_json(const json& j);

// {"field": ..., "num_vars": n, "polys": ["...", ...]} with optional
// {"enumerate_degree": d} generating all polynomials of total degree <= d.
struct PolyFamily {
  Field field = Field::rationals();
  int nvars = 0;
  std::vector<SparsePoly> polys;
};
PolyFamily family_from_json(const json& j);

json cts_report_to_json(const CtsReport& rep, const Field& f);

ConstructibleDesc constructible_from_json(const json& j, const Field& f, int nvars);
CellExperiment cell_experiment_from_json(const json& j);
json cell_report_to_json(const CellReport& rep);

ClassifierFamily classifier_family_from_json(const json& j);
json growth_report_to_json(const GrowthReport& rep);
json vc_report_to_json(const VcReport& rep, const Field& f);

PhamSystem pham_from_json(const json& j);
json pham_report_to_json(const PhamReport& rep, const Field& f);

json zero_oracle_report_to_json(const ZeroOracleReport& rep, const Field& f);

}  // namespace ratnet::io
