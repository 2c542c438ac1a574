#include "zonal/selfcheck.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zonal/gram.hpp"
#include "zonal/jacobi.hpp"
#include "zonal/spaces.hpp"

namespace zonal {

namespace {

std::vector<double> uniform_grid(double lo, double hi, int count) {
  std::vector<double> g(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    g[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return g;
}

CheckResult reflection_check() {
  double worst = 0.0;
  const auto grid = uniform_grid(-1.0, 1.0, 201);
  for (const JacobiParams& p : catalog_params()) {
    const JacobiParams swapped(p.beta, p.alpha);
    const JacobiParams upper(std::max(p.alpha, p.beta), std::min(p.alpha, p.beta));
    for (double t : grid) {
      const auto direct = eval_jacobi_sequence(p, 40, -t);
      const auto mirrored = eval_jacobi_sequence(swapped, 40, t);
      for (long k = 0; k <= 40; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double scale = std::max(1.0, jacobi_at_one(upper, k));
        const double diff =
            std::fabs(direct[static_cast<size_t>(k)] - sign * mirrored[static_cast<size_t>(k)]);
        worst = std::max(worst, diff / scale);
      }
    }
  }
  return {"reflection P_k(-t) = (-1)^k P_k^{swapped}(t)", worst, 1e-9, worst <= 1e-9};
}

CheckResult boundedness_check() {
  double worst = 0.0;
  const auto grid = uniform_grid(-1.0, 1.0, 201);
  for (const JacobiParams& p : catalog_params()) {
    for (double t : grid) {
      const auto values = eval_jacobi_sequence(p, 200, t);
      double at_one = 1.0;
      for (long k = 0; k <= 200; ++k) {
        if (k > 0) at_one *= (k + p.alpha) / k;
        worst = std::max(worst, (std::fabs(values[static_cast<size_t>(k)]) - at_one) / at_one);
      }
    }
  }
  return {"boundedness |P_k(t)| <= P_k(1)", worst, 1e-12, worst <= 1e-12};
}

CheckResult recurrence_check() {
  double worst = 0.0;
  const auto grid = uniform_grid(-0.99, 0.99, 199);
  for (const JacobiParams& p : catalog_params()) {
    if (p.alpha < 1.0) continue;  // the lowered pair must stay admissible
    const JacobiParams lowered(p.alpha - 1.0, p.beta);
    for (double t : grid) {
      const auto upper = normalized_jacobi_sequence(p, 40, t);
      const auto lower = normalized_jacobi_sequence(lowered, 41, t);
      for (long k = 0; k <= 40; ++k) {
        const double lhs = (1.0 - t) * upper[static_cast<size_t>(k)];
        const double rhs = 2.0 * p.alpha / (2.0 * k + p.alpha + p.beta + 1.0) *
                           (lower[static_cast<size_t>(k)] - lower[static_cast<size_t>(k + 1)]);
        worst = std::max(worst, std::fabs(lhs - rhs));
      }
    }
  }
  return {"recurrence (1-t)R_k = 2a/(2k+a+b+1) [R_k' - R_{k+1}']", worst, 1e-9, worst <= 1e-9};
}

CheckResult addition_constant_check() {
  double worst = 0.0;
  for (const JacobiParams& p : catalog_params())
    worst = std::max(worst, std::fabs(addition_constant(p, 0) - 1.0));
  return {"addition constant c_0 = 1", worst, 1e-15, worst <= 1e-15};
}

CheckResult gegenbauer_bridge_check() {
  double worst = 0.0;
  const auto grid = uniform_grid(-1.0, 1.0, 101);
  for (int d : {2, 3, 5}) {
    const double lambda = (d - 1) / 2.0;
    const JacobiParams half((d - 2) / 2.0, -0.5);
    for (long k = 0; k <= 30; ++k) {
      const double scale = std::max(1.0, gegenbauer_at_one(lambda, 2 * k));
      const double factor = gegenbauer_at_one(lambda, 2 * k) / jacobi_at_one(half, k);
      for (double t : grid) {
        const double lhs = eval_gegenbauer(lambda, 2 * k, t);
        const double rhs = factor * eval_jacobi(half, k, 2.0 * t * t - 1.0);
        worst = std::max(worst, std::fabs(lhs - rhs) / scale);
      }
    }
  }
  return {"Gegenbauer bridge C_{2k}(t) ~ P_k(2t^2-1)", worst, 1e-9, worst <= 1e-9};
}

CheckResult embedding_isometry_check() {
  double worst = 0.0;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
  for (const Space& s : catalog_spaces()) {
    if (!s.has_point_model()) continue;
    for (int trial = 0; trial < 50; ++trial) {
      const double t1 = uni(rng), t2 = uni(rng);
      const double got = zonal_argument(s, embed_circle(s, t1), embed_circle(s, t2));
      worst = std::max(worst, std::fabs(got - std::cos(t1 - t2)));
    }
  }
  return {"embedding isometry zonal(embed t1, embed t2) = cos(t1-t2)", worst, 1e-12,
          worst <= 1e-12};
}

CheckResult zonal_invariance_check() {
  double worst = 0.0;
  std::mt19937_64 rng(777);
  for (const Space& s : catalog_spaces()) {
    if (!s.has_point_model() || s.family == Family::Circle) continue;
    for (int trial = 0; trial < 20; ++trial) {
      const Point x = random_point(s, rng());
      const Point y = random_point(s, rng());
      const double t = zonal_argument(s, x, y);
      if (t < -1.0 || t > 1.0) worst = std::max(worst, std::fabs(t) - 1.0);
      worst = std::max(worst, std::fabs(t - zonal_argument(s, y, x)));
      // Representative change: negate every coordinate. For projective
      // families this is the same point; canonicalize folds it back.
      Point flipped = y;
      for (double& c : flipped.coords) c = -c;
      if (s.family != Family::Sphere) {
        flipped = canonicalize(flipped);
        worst = std::max(worst, std::fabs(t - zonal_argument(s, x, flipped)));
        worst = std::max(worst, same_point(y, flipped) ? 0.0 : 1.0);
      }
      worst = std::max(worst, std::fabs(zonal_argument(s, x, x) - 1.0));
    }
  }
  return {"zonal argument symmetry, range, representative invariance", worst, 1e-12,
          worst <= 1e-12};
}

CheckResult model_psd_check() {
  double worst = 0.0;
  for (const Space& s : catalog_spaces()) {
    if (!s.has_point_model()) continue;
    const JacobiParams p = s.params();
    const auto points = random_points(s, 12, 2024);
    Eigen::MatrixXd t(12, 12);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j)
        t(i, j) = zonal_argument(s, points[static_cast<size_t>(i)],
                                 points[static_cast<size_t>(j)]);
    for (long k = 0; k <= 25; ++k) {
      Eigen::MatrixXd m(12, 12);
      for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) m(i, j) = eval_jacobi(p, k, t(i, j));
      m = 0.5 * (m + m.transpose().eval());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
      const double floor = 12.0 * jacobi_at_one(p, k);
      worst = std::max(worst, -solver.eigenvalues().minCoeff() / floor);
    }
  }
  return {"addition-formula consequence: [P_k(t_uv)] is PSD", worst, 1e-8, worst <= 1e-8};
}

CheckResult decay_check() {
  double worst = 0.0;
  for (const JacobiParams& p : catalog_params()) {
    if (p.alpha < 0.0) continue;  // no decay in the Chebyshev pair; see docs
    for (double t : {-0.9, 0.5, 0.9}) {
      const auto values = normalized_jacobi_sequence(p, 10000, t);
      for (long k = 5000; k <= 10000; ++k)
        worst = std::max(worst, std::fabs(values[static_cast<size_t>(k)]));
    }
  }
  return {"normalized decay max |R_k(t)| over k in [5000, 10^4]", worst, 0.05, worst <= 0.05};
}

CheckResult ratio_decay_check() {
  double worst = 0.0;
  bool monotone = true;
  for (const JacobiParams& p : catalog_params()) {
    if (p.alpha < p.beta + 1.0) continue;
    double prev = ratio_at_one(p, 0);
    for (long k = 1; k <= 10000; ++k) {
      const double cur = ratio_at_one(p, k);
      if (!(cur < prev)) monotone = false;
      prev = cur;
    }
    worst = std::max(worst, prev);
  }
  const bool pass = monotone && worst <= 1e-2;
  return {"ratio P_k^{b,a}(1)/P_k^{a,b}(1) strictly decreasing, < 1e-2 at k=10^4",
          monotone ? worst : 1.0, 1e-2, pass};
}

}  // namespace

std::vector<CheckResult> run_identity_checks(CheckLevel level) {
  std::vector<CheckResult> results;
  results.push_back(reflection_check());
  results.push_back(boundedness_check());
  results.push_back(recurrence_check());
  results.push_back(addition_constant_check());
  results.push_back(gegenbauer_bridge_check());
  results.push_back(embedding_isometry_check());
  results.push_back(zonal_invariance_check());
  results.push_back(model_psd_check());
  if (level == CheckLevel::Full)
    for (auto& r : run_limit_checks()) results.push_back(std::move(r));
  return results;
}

std::vector<CheckResult> run_limit_checks() { return {decay_check(), ratio_decay_check()}; }

}  // namespace zonal
