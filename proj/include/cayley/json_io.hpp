#pragma once

#include <string>

#include <json.hpp>

#include "cayley/coset.hpp"
#include "cayley/gauge.hpp"
#include "cayley/lincon.hpp"

namespace cayley {

using json = nlohmann::json;

/// Complex entries are written as [re, im]; a plain number is read as a real entry.
json complex_to_json(cplx z);
cplx complex_from_json(const json& j);
json matrix_to_json(const Eigen::MatrixXcd& M);
/// Accepts a nested array, or a scalar when m = 1.
Eigen::MatrixXcd matrix_from_json(const json& j, int m);

/// {group, S, m, W: {h: {site: matrix}}, gamma: {site: matrix}}. Missing W_h(g) are I,
/// W may also be the string "theta". An optional gamma is applied as a gauge transform.
struct GaugeConfig {
  LatticePtr L;
  GaugeField W;
};
GaugeConfig gauge_config_from_json(const json& j, LatticeOptions opts = {});
json gauge_field_to_json(const GaugeField& W);

/// V as {h': {site: matrix with entry (h, h'')}}; absent entries are zero.
LinearConnection connection_from_json(const LatticePtr& L, const json& j);
json connection_to_json(const LinearConnection& C);

json lattice_report(const GroupLattice& L);
json coset_report(const CosetDiagram& D);
json yang_mills_report(const YangMills& ym, const GroupLattice& L);
json torsion_report_json(const TorsionReport& r);

}  // namespace cayley
