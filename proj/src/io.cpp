#include "zonal/io.hpp"

#include <fstream>
#include <sstream>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

Space parse_space(const json& j) {
  if (!j.contains("family") || !j.contains("d"))
    throw InvalidArgument("space block needs 'family' and 'd' fields");
  const Family f = family_from_name(j.at("family").get<std::string>());
  return Space(f, j.at("d").get<int>());
}

SupportDescriptor parse_support(const json& j) {
  if (j.contains("indices")) return SupportDescriptor::finite(j.at("indices").get<std::vector<long>>());
  std::vector<ArithmeticProgression> aps;
  if (j.contains("aps"))
    for (const auto& pair : j.at("aps")) {
      if (!pair.is_array() || pair.size() != 2)
        throw InvalidArgument("support 'aps' entries must be [modulus, residue] pairs");
      aps.push_back({pair[0].get<long>(), pair[1].get<long>()});
    }
  std::vector<long> added, removed;
  if (j.contains("added")) added = j.at("added").get<std::vector<long>>();
  if (j.contains("removed")) removed = j.at("removed").get<std::vector<long>>();
  return SupportDescriptor::structured(std::move(aps), std::move(added), std::move(removed));
}

}  // namespace

RawExpansion parse_kernel_spec(const json& j) {
  if (!j.contains("space")) throw InvalidArgument("kernel spec needs a 'space' field");
  if (!j.contains("coeffs")) throw InvalidArgument("kernel spec needs a 'coeffs' field");
  RawExpansion raw{parse_space(j.at("space")), std::nullopt, std::nullopt};
  const json& c = j.at("coeffs");
  const std::string type = c.value("type", "");
  if (type == "finite") {
    std::vector<std::pair<long, double>> terms;
    for (const auto& pair : c.at("values")) {
      if (!pair.is_array() || pair.size() != 2)
        throw InvalidArgument("'values' entries must be [index, coefficient] pairs");
      terms.emplace_back(pair[0].get<long>(), pair[1].get<double>());
    }
    raw.terms = std::move(terms);
  } else if (type == "geometric") {
    if (!c.contains("scale") || !c.contains("ratio") || !c.contains("support"))
      throw InvalidArgument("geometric coeffs need 'scale', 'ratio' and 'support' fields");
    raw.geometric = GeometricCoefficients{c.at("scale").get<double>(), c.at("ratio").get<double>(),
                                          parse_support(c.at("support"))};
  } else {
    throw InvalidArgument("coeffs 'type' must be 'finite' or 'geometric'");
  }
  return raw;
}

RawExpansion read_kernel_spec(const std::string& path) {
  return parse_kernel_spec(load_json_file(path));
}

nlohmann::json kernel_spec_json(const KernelExpansion& e) {
  json j;
  j["space"] = space_json(e.space());
  if (e.is_finite()) {
    json values = json::array();
    for (const auto& [k, a] : e.finite_coeffs().terms) values.push_back({k, a});
    j["coeffs"] = {{"type", "finite"}, {"values", values}};
  } else {
    const auto& g = e.geometric_coeffs();
    json support;
    if (g.support.kind() == SupportDescriptor::Kind::Finite) {
      support["indices"] = g.support.finite_indices();
    } else {
      json aps = json::array();
      for (const auto& ap : g.support.progressions()) aps.push_back({ap.modulus, ap.residue});
      support["aps"] = aps;
      support["added"] = g.support.added();
      support["removed"] = g.support.removed();
    }
    j["coeffs"] = {
        {"type", "geometric"}, {"scale", g.scale}, {"ratio", g.ratio}, {"support", support}};
  }
  return j;
}

std::pair<Space, std::vector<Point>> read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file '" + path + "'");
  std::string header;
  if (!std::getline(in, header) || header.rfind("# space=", 0) != 0)
    throw InvalidArgument("points file must start with '# space=<family>,d=<n>'");
  const size_t comma = header.find(",d=");
  if (comma == std::string::npos)
    throw InvalidArgument("points header is missing the ',d=<n>' part");
  const std::string family = header.substr(8, comma - 8);
  const int d = std::stoi(header.substr(comma + 3));
  const Space s(family_from_name(family), d);

  std::vector<Point> points;
  std::string line;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> coords;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        coords.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw InvalidArgument("points file row " + std::to_string(row) +
                              ": cannot parse '" + cell + "'");
      }
    }
    try {
      points.push_back(make_point(s, std::move(coords)));
    } catch (const Error& e) {
      throw InvalidArgument("points file row " + std::to_string(row) + ": " + e.what());
    }
  }
  return {s, std::move(points)};
}

void write_points_csv(const std::string& path, const Space& s, const std::vector<Point>& pts) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write file '" + path + "'");
  out << "# space=" << family_name(s.family) << ",d=" << s.dim << "\n";
  out.precision(17);
  for (const Point& p : pts) {
    for (size_t i = 0; i < p.coords.size(); ++i) out << (i ? "," : "") << p.coords[i];
    out << "\n";
  }
}

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& a) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write file '" + path + "'");
  out.precision(17);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out << (j ? "," : "") << a(i, j);
    out << "\n";
  }
}

nlohmann::json space_json(const Space& s) {
  return {{"family", family_name(s.family)}, {"d", s.dim}};
}

nlohmann::json verdict_json(const Verdict& v) {
  json j;
  switch (v.kind) {
    case VerdictKind::ZeroKernel:
      j["verdict"] = "zero_kernel";
      break;
    case VerdictKind::PositiveDefiniteNotStrict:
      j["verdict"] = "positive_definite_not_strict";
      break;
    case VerdictKind::StrictlyPositiveDefinite:
      j["verdict"] = "strictly_positive_definite";
      break;
  }
  j["reason"] = v.reason;
  if (const auto* w = std::get_if<FiniteSupportWitness>(&v.witness))
    j["witness"] = {{"kind", "finite_support"}, {"max_index", w->max_index}};
  else if (const auto* w = std::get_if<ParityWitness>(&v.witness))
    j["witness"] = {{"kind", "parity"},
                    {"missing_parity", w->missing_parity == 0 ? "even" : "odd"},
                    {"support_single_parity", w->support_single_parity}};
  else if (const auto* w = std::get_if<MissedApWitness>(&v.witness))
    j["witness"] = {{"kind", "missed_progression"},
                    {"modulus", w->ap.modulus},
                    {"residue", w->ap.residue}};
  return j;
}

nlohmann::json gram_report_json(const GramReport& r) {
  json j{{"n", r.n},         {"min_eig", r.min_eig},     {"max_eig", r.max_eig},
         {"psd", r.psd},     {"tolerance", r.tolerance}, {"residual", nullptr},
         {"c", json::array()}};
  if (r.residual) j["residual"] = *r.residual;
  if (r.near_null) {
    for (Eigen::Index i = 0; i < r.near_null->size(); ++i) j["c"].push_back((*r.near_null)(i));
  }
  return j;
}

nlohmann::json degeneracy_json(const Degeneracy& d) {
  json j;
  j["n"] = d.c.size();
  j["residual"] = d.residual;
  j["bound"] = d.bound;
  j["c"] = json::array();
  for (Eigen::Index i = 0; i < d.c.size(); ++i) j["c"].push_back(d.c(i));
  if (!d.angles.empty()) j["angles"] = d.angles;
  j["points"] = json::array();
  for (const Point& p : d.points) j["points"].push_back(p.coords);
  return j;
}

nlohmann::json recovery_json(const Recovery& r) {
  return {{"coefficients", r.coefficients},
          {"residual", r.residual},
          {"flagged_negative", r.flagged_negative}};
}

nlohmann::json derivative_report_json(const DerivativeReport& r) {
  json j;
  j["max_relative_fd_gap"] = r.max_relative_fd_gap;
  j["degree_bound"] = nullptr;
  if (r.degree_bound) j["degree_bound"] = *r.degree_bound;
  j["bases"] = json::array();
  for (const auto& b : r.bases) {
    json bj{{"alpha", b.basis_alpha},
            {"beta", b.basis_beta},
            {"applicable", b.applicable},
            {"max_tail_coefficient", b.max_tail_coefficient},
            {"reconstruction_residual", b.reconstruction_residual}};
    if (!b.note.empty()) bj["note"] = b.note;
    j["bases"].push_back(bj);
  }
  return j;
}

nlohmann::json check_results_json(const std::vector<CheckResult>& results) {
  json j = json::array();
  for (const auto& r : results)
    j.push_back({{"name", r.name},
                 {"max_residual", r.max_residual},
                 {"tolerance", r.tolerance},
                 {"pass", r.pass}});
  return j;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write file '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace zonal
