#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zonal/gram.hpp"
#include "zonal/kernels.hpp"
#include "zonal/projection.hpp"
#include "zonal/selfcheck.hpp"
#include "zonal/spaces.hpp"

namespace zonal {

/// Kernel spec file:
///   {"space": {"family": "sphere", "d": 2},
///    "coeffs": {"type": "finite", "values": [[0, 1.0], [3, 2.0]]}}
/// or
///   {"space": {...},
///    "coeffs": {"type": "geometric", "scale": 1.0, "ratio": 0.5,
///               "support": {"aps": [[2,0]], "added": [5], "removed": []}}}
RawExpansion parse_kernel_spec(const nlohmann::json& j);
RawExpansion read_kernel_spec(const std::string& path);
nlohmann::json kernel_spec_json(const KernelExpansion& e);

/// Point CSV: header row "# space=<family>,d=<n>", then one point per row.
std::pair<Space, std::vector<Point>> read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const Space& s, const std::vector<Point>& pts);

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& a);

nlohmann::json space_json(const Space& s);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json gram_report_json(const GramReport& r);
nlohmann::json degeneracy_json(const Degeneracy& d);
nlohmann::json recovery_json(const Recovery& r);
nlohmann::json derivative_report_json(const DerivativeReport& r);
nlohmann::json check_results_json(const std::vector<CheckResult>& results);

void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace zonal
