#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zonal/errors.hpp"
#include "zonal/gram.hpp"
#include "zonal/io.hpp"
#include "zonal/jacobi.hpp"
#include "zonal/kernels.hpp"
#include "zonal/projection.hpp"
#include "zonal/selfcheck.hpp"
#include "zonal/spaces.hpp"

namespace {

using namespace zonal;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;   // mathematically valid but not strict / not psd
constexpr int kExitInput = 2;    // malformed or inconsistent input
constexpr int kExitCap = 3;      // internal cap exceeded

std::string support_summary(const SupportDescriptor& sup) {
  std::string out;
  const auto list = [](const std::vector<long>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size() && i < 12; ++i)
      s += (i ? ", " : "") + std::to_string(v[i]);
    if (v.size() > 12) s += ", ...";
    return s + "}";
  };
  if (sup.kind() == SupportDescriptor::Kind::Finite) return "finite " + list(sup.finite_indices());
  out = "progressions {";
  for (size_t i = 0; i < sup.progressions().size(); ++i) {
    const auto& ap = sup.progressions()[i];
    out += (i ? ", " : "") + std::to_string(ap.modulus) + "Z+" + std::to_string(ap.residue);
  }
  out += "}";
  if (!sup.added().empty()) out += " + added " + list(sup.added());
  if (!sup.removed().empty()) out += " - removed " + list(sup.removed());
  return out;
}

std::string verdict_label(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ZeroKernel:
      return "ZERO KERNEL";
    case VerdictKind::PositiveDefiniteNotStrict:
      return "NOT STRICT";
    case VerdictKind::StrictlyPositiveDefinite:
      return "STRICTLY POSITIVE DEFINITE";
  }
  return "?";
}

void print_header(const KernelExpansion& e) {
  const JacobiParams p = e.space().params();
  std::printf("space       %s (d=%d)\n", family_name(e.space().family).c_str(), e.space().dim);
  std::printf("parameters  alpha=%g beta=%g\n", p.alpha, p.beta);
  std::printf("support     %s\n", support_summary(e.support()).c_str());
}

int run_classify(const std::string& spec_path, const std::string& json_path) {
  const KernelExpansion e = validate_expansion(read_kernel_spec(spec_path));
  const Verdict v = classify_spd(e);
  print_header(e);
  std::printf("verdict     %s\n", verdict_label(v.kind).c_str());
  std::printf("reason      %s\n", v.reason.c_str());
  if (!json_path.empty()) {
    nlohmann::json j = verdict_json(v);
    j["space"] = space_json(e.space());
    write_json(json_path, j);
  }
  return v.kind == VerdictKind::StrictlyPositiveDefinite ? kExitOk : kExitDomain;
}

int run_eval(const std::string& spec_path, const std::string& grid, double eps,
             const std::string& json_path) {
  const KernelExpansion e = validate_expansion(read_kernel_spec(spec_path));
  double lo = 0, hi = 0;
  int count = 0;
  if (std::sscanf(grid.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || count < 2 ||
      !(lo <= hi))
    throw InvalidArgument("--t-grid expects 'a:b:n' with a <= b and n >= 2");
  print_header(e);
  std::printf("%14s %22s %14s\n", "t", "value", "bound");
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < count; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    const KernelValue kv = eval_kernel(e, t, eps);
    std::printf("%14.6f %22.14e %14.4e\n", t, kv.value, kv.error_bound);
    rows.push_back({{"t", t}, {"value", kv.value}, {"bound", kv.error_bound}});
  }
  if (!json_path.empty()) write_json(json_path, {{"rows", rows}});
  return kExitOk;
}

void print_gram_report(const GramReport& r) {
  std::printf("n           %d\n", r.n);
  std::printf("min_eig     %.12e\n", r.min_eig);
  std::printf("max_eig     %.12e\n", r.max_eig);
  std::printf("psd         %s (tol %.3e)\n", r.psd ? "yes" : "no", r.tolerance);
  if (r.near_null) {
    std::printf("near-null   c = [");
    for (Eigen::Index i = 0; i < r.near_null->size(); ++i)
      std::printf("%s%.6f", i ? ", " : "", (*r.near_null)(i));
    std::printf("]\n");
    std::printf("residual    c'Ac = %.6e\n", *r.residual);
  }
}

int run_gram(const std::string& spec_path, const std::string& points_path, int random_n,
             double tol, double eps, std::uint64_t seed, const std::string& json_path,
             const std::string& matrix_path) {
  const KernelExpansion e = validate_expansion(read_kernel_spec(spec_path));
  std::vector<Point> points;
  if (!points_path.empty()) {
    auto [file_space, file_points] = read_points_csv(points_path);
    if (file_space != e.space())
      throw InvalidArgument("space mismatch: kernel lives on " +
                            family_name(e.space().family) + " d=" +
                            std::to_string(e.space().dim) + ", points on " +
                            family_name(file_space.family) + " d=" +
                            std::to_string(file_space.dim));
    points = std::move(file_points);
  } else {
    points = random_points(e.space(), random_n, seed);
  }
  const Eigen::MatrixXd a = build_gram(e, points, eps);
  const GramReport report = psd_report(a, tol);
  print_header(e);
  print_gram_report(report);
  if (!matrix_path.empty()) write_matrix_csv(matrix_path, a);
  if (!json_path.empty()) write_json(json_path, gram_report_json(report));
  return report.psd ? kExitOk : kExitDomain;
}

void print_degeneracy(const Degeneracy& d, const char* kind) {
  std::printf("construction %s\n", kind);
  std::printf("n            %d\n", static_cast<int>(d.c.size()));
  if (!d.angles.empty()) {
    std::printf("angles       [");
    for (size_t i = 0; i < d.angles.size() && i < 16; ++i)
      std::printf("%s%.6f", i ? ", " : "", d.angles[i]);
    if (d.angles.size() > 16) std::printf(", ...");
    std::printf("]\n");
  }
  std::printf("c            [");
  for (Eigen::Index i = 0; i < d.c.size() && i < 16; ++i)
    std::printf("%s%.6f", i ? ", " : "", d.c(i));
  if (d.c.size() > 16) std::printf(", ...");
  std::printf("]\n");
  std::printf("residual     c'Ac = %.6e (bound %.6e)\n", d.residual, d.bound);
}

int run_counterexample(const std::string& spec_path, double eps, std::uint64_t seed,
                       const std::string& json_path) {
  const KernelExpansion e = validate_expansion(read_kernel_spec(spec_path));
  const Verdict v = classify_spd(e);
  print_header(e);
  std::printf("verdict     %s (%s)\n", verdict_label(v.kind).c_str(), v.reason.c_str());
  if (v.kind == VerdictKind::StrictlyPositiveDefinite)
    throw InvalidArgument("no counterexample exists: the kernel is strictly positive definite");
  if (v.kind == VerdictKind::ZeroKernel)
    throw InvalidArgument("the zero kernel admits no meaningful counterexample");

  Degeneracy d;
  const char* kind = "";
  if (const auto* w = std::get_if<MissedApWitness>(&v.witness)) {
    d = roots_of_unity_degeneracy(e, w->ap, eps);
    kind = "roots of unity";
  } else if (const auto* w = std::get_if<ParityWitness>(&v.witness)) {
    if (!w->support_single_parity)
      throw InvalidArgument(
          "the two-point antipodal construction needs a single-parity support; this support "
          "mixes parities");
    d = parity_degeneracy(e, w->missing_parity == 1 ? Parity::Even : Parity::Odd, seed, eps);
    kind = "antipodal pair";
  } else if (std::get_if<FiniteSupportWitness>(&v.witness)) {
    d = finite_support_degeneracy(e, eps);
    kind = "embedded circle";
  } else {
    throw Error("classification produced no usable witness");
  }
  print_degeneracy(d, kind);
  if (!json_path.empty()) {
    nlohmann::json j = degeneracy_json(d);
    j["kind"] = kind;
    write_json(json_path, j);
  }
  return d.residual <= d.bound ? kExitOk : kExitDomain;
}

int run_project(const std::string& spec_path, const std::string& rule,
                const std::string& family, int dim, int max_degree, int nodes, double eps,
                const std::string& json_path) {
  std::function<double(double)> f;
  std::optional<Space> space;
  if (!spec_path.empty()) {
    const KernelExpansion e = validate_expansion(read_kernel_spec(spec_path));
    space = e.space();
    f = [e, eps](double t) { return eval_kernel(e, t, eps).value; };
  } else {
    if (rule == "exp")
      f = [](double t) { return std::exp(t); };
    else if (rule == "runge")
      f = [](double t) { return 1.0 / (1.0 + 25.0 * t * t); };
    else if (rule == "abs")
      f = [](double t) { return std::fabs(t); };
    else
      throw InvalidArgument("unknown rule '" + rule + "'; available: exp, runge, abs");
    if (family.empty()) throw InvalidArgument("--rule needs --family and --d to fix the basis");
    space = Space(family_from_name(family), dim);
  }
  const Recovery r = recover_expansion(f, *space, max_degree, nodes);
  const JacobiParams p = space->params();
  std::printf("basis       alpha=%g beta=%g, %d nodes\n", p.alpha, p.beta, nodes);
  std::printf("%6s %22s\n", "k", "coefficient");
  for (size_t k = 0; k < r.coefficients.size(); ++k)
    std::printf("%6zu %22.14e\n", k, r.coefficients[k]);
  std::printf("residual    %.6e\n", r.residual);
  if (!r.flagged_negative.empty()) {
    std::printf("flagged     negative coefficients at indices [");
    for (size_t i = 0; i < r.flagged_negative.size(); ++i)
      std::printf("%s%ld", i ? ", " : "", r.flagged_negative[i]);
    std::printf("] -- not positive definite in the representation sense\n");
  }
  if (!json_path.empty()) write_json(json_path, recovery_json(r));
  return r.flagged_negative.empty() ? kExitOk : kExitDomain;
}

int run_selftest(const std::string& level, const std::string& json_path) {
  if (level != "fast" && level != "full")
    throw InvalidArgument("--level must be 'fast' or 'full'");
  const auto results =
      run_identity_checks(level == "full" ? CheckLevel::Full : CheckLevel::Fast);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("[%s] %-62s max residual %.3e (tol %.1e)\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.max_residual, r.tolerance);
    all_pass = all_pass && r.pass;
  }
  if (!json_path.empty()) write_json(json_path, check_results_json(results));
  return all_pass ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi expansions of isotropic kernels on compact two-point homogeneous "
               "spaces: strict positive definiteness, Gram spectra, constructive "
               "degeneracies, coefficient recovery"};
  app.require_subcommand(1);

  std::string spec_path, points_path, json_path, matrix_path, grid = "-1:1:21";
  std::string rule, family, level = "fast";
  double tol = 1e-8, eps = 1e-10;
  std::uint64_t seed = 0;
  int random_n = 0, max_degree = 8, nodes = 64, dim = 2;

  auto* classify = app.add_subcommand("classify", "decide strict positive definiteness");
  classify->add_option("spec", spec_path, "kernel spec JSON file")->required();
  classify->add_option("--json", json_path, "write a JSON report");

  auto* eval = app.add_subcommand("eval", "evaluate the kernel on a t grid");
  eval->add_option("spec", spec_path, "kernel spec JSON file")->required();
  eval->add_option("--t-grid", grid, "grid 'a:b:n' (default -1:1:21)");
  eval->add_option("--eps", eps, "certified truncation target");
  eval->add_option("--json", json_path, "write a JSON report");

  auto* gram = app.add_subcommand("gram", "build a Gram matrix and report its spectrum");
  gram->add_option("spec", spec_path, "kernel spec JSON file")->required();
  auto* pts_opt = gram->add_option("--points", points_path, "points CSV file");
  auto* rnd_opt = gram->add_option("--random", random_n, "draw n random points instead");
  pts_opt->excludes(rnd_opt);
  gram->add_option("--tol", tol, "psd tolerance");
  gram->add_option("--eps", eps, "certified truncation target");
  gram->add_option("--seed", seed, "random seed");
  gram->add_option("--matrix-csv", matrix_path, "write the matrix as CSV");
  gram->add_option("--json", json_path, "write a JSON report");

  auto* cex = app.add_subcommand("counterexample",
                                 "construct a degeneracy witness for a non-strict kernel");
  cex->add_option("spec", spec_path, "kernel spec JSON file")->required();
  cex->add_option("--eps", eps, "certified truncation target");
  cex->add_option("--seed", seed, "random seed");
  cex->add_option("--json", json_path, "write a JSON report");

  auto* project = app.add_subcommand("project", "recover expansion coefficients by quadrature");
  auto* spec_opt = project->add_option("--spec", spec_path, "kernel spec JSON file");
  auto* rule_opt = project->add_option("--rule", rule, "analytic rule: exp, runge, abs");
  spec_opt->excludes(rule_opt);
  project->add_option("--family", family, "space family for --rule");
  project->add_option("--d", dim, "space dimension for --rule");
  project->add_option("--max-degree", max_degree, "highest recovered degree");
  project->add_option("--nodes", nodes, "quadrature node count");
  project->add_option("--eps", eps, "certified truncation target");
  project->add_option("--json", json_path, "write a JSON report");

  auto* selftest = app.add_subcommand("selftest", "run the identity suites");
  selftest->add_option("--level", level, "fast or full");
  selftest->add_option("--json", json_path, "write a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return run_classify(spec_path, json_path);
    if (eval->parsed()) return run_eval(spec_path, grid, eps, json_path);
    if (gram->parsed()) {
      if (points_path.empty() && random_n <= 0)
        throw InvalidArgument("gram needs --points <file> or --random <n>");
      return run_gram(spec_path, points_path, random_n, tol, eps, seed, json_path, matrix_path);
    }
    if (cex->parsed()) return run_counterexample(spec_path, eps, seed, json_path);
    if (project->parsed()) {
      if (spec_path.empty() && rule.empty())
        throw InvalidArgument("project needs --spec <file> or --rule <name>");
      return run_project(spec_path, rule, family, dim, max_degree, nodes, eps, json_path);
    }
    if (selftest->parsed()) return run_selftest(level, json_path);
  } catch (const CapExceeded& e) {
    std::fprintf(stderr, "error (cap): %s\n", e.what());
    return kExitCap;
  } catch (const TruncationError& e) {
    std::fprintf(stderr, "error (cap): %s (best bound %.3e)\n", e.what(), e.best_bound());
    return kExitCap;
  } catch (const ValidationError& e) {
    const char* code = "BadSupport";
    switch (e.code()) {
      case ValidationError::Code::NegativeCoefficient: code = "NegativeCoefficient"; break;
      case ValidationError::Code::DuplicateIndex: code = "DuplicateIndex"; break;
      case ValidationError::Code::NonSummable: code = "NonSummable"; break;
      case ValidationError::Code::BadSupport: break;
    }
    std::fprintf(stderr, "error (input): %s(%ld): %s\n", code, e.index(), e.what());
    return kExitInput;
  } catch (const Error& e) {
    std::fprintf(stderr, "error (input): %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}
