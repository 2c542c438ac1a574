#include "zonal/projection.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

// Recurrence coefficients of the monic Jacobi polynomials:
// p_{k+1} = (t - a_k) p_k - b_k p_{k-1}.
double monic_diag(const JacobiParams& p, long k) {
  const double a = p.alpha, b = p.beta;
  if (k == 0) return (b - a) / (a + b + 2.0);
  const double s = 2.0 * k + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

double monic_offdiag_sq(const JacobiParams& p, long k) {
  const double a = p.alpha, b = p.beta;
  if (k == 1) return 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
  const double s = 2.0 * k + a + b;
  return 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
}

double eval_kernel_derivative(const KernelExpansion& e, double t) {
  const JacobiParams p = e.space().params();
  if (e.is_finite()) {
    double sum = 0.0;
    for (const auto& [k, a] : e.finite_coeffs().terms) sum += a * jacobi_derivative(p, k, t);
    return sum;
  }
  const auto& g = e.geometric_coeffs();
  const double m = std::ceil(std::max(p.alpha, 0.0)) + 2.0;
  double sum = 0.0;
  for (long k = 1; k <= kMaxJacobiDegree; ++k) {
    if (g.support.contains(k))
      sum += g.scale * std::pow(g.ratio, static_cast<double>(k)) * jacobi_derivative(p, k, t);
    const double tail = std::pow(g.ratio, static_cast<double>(k + 1)) *
                        std::pow(static_cast<double>(k) + 2.0, m) * g.scale /
                        (1.0 - 0.5 * (1.0 + g.ratio));
    if (tail <= 1e-13 * std::max(1.0, std::fabs(sum))) return sum;
  }
  throw TruncationError(0.0, "derivative series did not settle within the degree cap");
}

}  // namespace

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
  return sum;
}

double weight_moment(const JacobiParams& p) {
  return std::exp((p.alpha + p.beta + 1.0) * std::log(2.0) + std::lgamma(p.alpha + 1.0) +
                  std::lgamma(p.beta + 1.0) - std::lgamma(p.alpha + p.beta + 2.0));
}

QuadratureRule gauss_jacobi_rule(const JacobiParams& p, int n) {
  if (n < 1 || n > kMaxQuadratureNodes)
    throw InvalidArgument("node count must lie in [1, " + std::to_string(kMaxQuadratureNodes) +
                          "], got " + std::to_string(n));
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = monic_diag(p, k);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(monic_offdiag_sq(p, k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub);
  if (solver.info() != Eigen::Success)
    throw Error("gauss_jacobi_rule: tridiagonal eigensolve failed");
  QuadratureRule rule{p, {}, {}};
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  const double mu0 = weight_moment(p);
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    const double first = solver.eigenvectors()(0, i);
    rule.weights[static_cast<size_t>(i)] = mu0 * first * first;
  }
  return rule;
}

double jacobi_norm_squared(const JacobiParams& p, long k) {
  if (k < 0) throw InvalidArgument("degree index must be nonnegative");
  if (k == 0) return weight_moment(p);
  const double a = p.alpha, b = p.beta;
  return std::exp((a + b + 1.0) * std::log(2.0) - std::log(2.0 * k + a + b + 1.0) +
                  std::lgamma(k + a + 1.0) + std::lgamma(k + b + 1.0) -
                  std::lgamma(k + a + b + 1.0) - std::lgamma(k + 1.0));
}

double project_coefficient(const std::function<double(double)>& f, const JacobiParams& p, long k,
                           int n) {
  if (n < k + 1)
    throw InvalidArgument("projection onto degree " + std::to_string(k) + " needs at least " +
                          std::to_string(k + 1) + " nodes");
  const QuadratureRule rule = gauss_jacobi_rule(p, n);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(rule.nodes[i]) * eval_jacobi(p, k, rule.nodes[i]);
  return sum / jacobi_norm_squared(p, k);
}

Recovery recover_expansion(const std::function<double(double)>& f, const Space& s, int max_degree,
                           int nodes) {
  if (nodes < max_degree + 1)
    throw InvalidArgument("recovery up to degree " + std::to_string(max_degree) +
                          " needs at least " + std::to_string(max_degree + 1) + " nodes");
  const JacobiParams p = s.params();
  const QuadratureRule rule = gauss_jacobi_rule(p, nodes);
  const size_t nn = rule.nodes.size();
  std::vector<double> fvals(nn);
  std::vector<std::vector<double>> basis(nn);
  for (size_t i = 0; i < nn; ++i) {
    fvals[i] = f(rule.nodes[i]);
    basis[i] = eval_jacobi_sequence(p, max_degree, rule.nodes[i]);
  }
  Recovery out;
  out.coefficients.resize(static_cast<size_t>(max_degree) + 1);
  for (long k = 0; k <= max_degree; ++k) {
    double sum = 0.0;
    for (size_t i = 0; i < nn; ++i)
      sum += rule.weights[i] * fvals[i] * basis[i][static_cast<size_t>(k)];
    out.coefficients[static_cast<size_t>(k)] = sum / jacobi_norm_squared(p, k);
    if (out.coefficients[static_cast<size_t>(k)] < -1e-8) out.flagged_negative.push_back(k);
  }
  double res2 = 0.0;
  for (size_t i = 0; i < nn; ++i) {
    double recon = 0.0;
    for (long k = 0; k <= max_degree; ++k)
      recon += out.coefficients[static_cast<size_t>(k)] * basis[i][static_cast<size_t>(k)];
    res2 += rule.weights[i] * (fvals[i] - recon) * (fvals[i] - recon);
  }
  out.residual = std::sqrt(std::max(res2, 0.0));
  return out;
}

DerivativeReport derivative_check(const KernelExpansion& e, const std::vector<double>& grid) {
  const Space& s = e.space();
  if (s.dim < 3)
    throw UnsupportedSpace("derivative_check requires dimension >= 3, got d=" +
                           std::to_string(s.dim));
  for (double t : grid)
    if (!(std::fabs(t) <= 0.9))
      throw InvalidArgument("derivative grid must lie inside [-0.9, 0.9]");

  DerivativeReport report{0.0, std::nullopt, {}};
  const double h = 1e-5;
  for (double t : grid) {
    const double termwise = eval_kernel_derivative(e, t);
    const double fd = (eval_kernel(e, t + h, 1e-12).value - eval_kernel(e, t - h, 1e-12).value) /
                      (2.0 * h);
    const double gap = std::fabs(termwise - fd) / std::max(1.0, std::fabs(termwise));
    report.max_relative_fd_gap = std::max(report.max_relative_fd_gap, gap);
  }

  if (!e.is_finite()) return report;

  const long max_index = e.finite_coeffs().terms.empty() ? 0 : e.finite_coeffs().terms.back().first;
  report.degree_bound = max_index + 1;
  const JacobiParams p = s.params();

  std::vector<std::pair<double, double>> candidate_bases;  // (alpha', beta')
  switch (s.family) {
    case Family::Sphere:
    case Family::RealProjective:
    case Family::CayleyPlane:
      candidate_bases = {{p.alpha - 1.0, p.beta}};
      break;
    case Family::ComplexProjective:
      candidate_bases = {{p.alpha - 1.0, p.beta}, {p.alpha - 1.0, p.beta - 1.0}};
      break;
    case Family::QuaternionProjective:
      candidate_bases = {{p.alpha - 1.0, p.beta - 1.0}};
      break;
    case Family::Circle:
      break;
  }

  const auto g_of_t = [&](double t) { return (1.0 - t * t) * eval_kernel_derivative(e, t); };

  for (const auto& [ba, bb] : candidate_bases) {
    if (!(ba > -1.0) || !(bb > -1.0)) {
      BasisTailCheck skip;
      skip.basis_alpha = ba;
      skip.basis_beta = bb;
      skip.applicable = false;
      skip.note = "weight exponents (" + std::to_string(ba) + ", " + std::to_string(bb) +
                  ") fall outside the admissible range";
      report.bases.push_back(std::move(skip));
      continue;
    }
    const JacobiParams basis(ba, bb);
    const int degree_cap = static_cast<int>(max_index) + 6;
    const int nodes = degree_cap + 8;
    const QuadratureRule rule = gauss_jacobi_rule(basis, nodes);
    std::vector<double> gvals(rule.nodes.size());
    double gscale = 1.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      gvals[i] = g_of_t(rule.nodes[i]);
      gscale = std::max(gscale, std::fabs(gvals[i]));
    }
    BasisTailCheck check;
    check.basis_alpha = ba;
    check.basis_beta = bb;
    std::vector<double> coeffs(static_cast<size_t>(degree_cap) + 1);
    for (long k = 0; k <= degree_cap; ++k) {
      double sum = 0.0;
      for (size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * (gvals[i] / gscale) * eval_jacobi(basis, k, rule.nodes[i]);
      coeffs[static_cast<size_t>(k)] = sum / jacobi_norm_squared(basis, k);
      if (k > max_index + 1)
        check.max_tail_coefficient =
            std::max(check.max_tail_coefficient, std::fabs(coeffs[static_cast<size_t>(k)]));
    }
    double res2 = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      double recon = 0.0;
      for (long k = 0; k <= max_index + 1; ++k)
        recon += coeffs[static_cast<size_t>(k)] * eval_jacobi(basis, k, rule.nodes[i]);
      const double diff = gvals[i] / gscale - recon;
      res2 += rule.weights[i] * diff * diff;
    }
    check.reconstruction_residual = std::sqrt(std::max(res2, 0.0));
    report.bases.push_back(std::move(check));
  }
  return report;
}

}  // namespace zonal
