#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "zonal/kernels.hpp"
#include "zonal/spaces.hpp"

namespace zonal {

/// Spectral summary of a kernel Gram matrix.
struct GramReport {
  int n = 0;
  double min_eig = 0;
  double max_eig = 0;
  bool psd = false;  // min_eig >= -tol * max(1, max_eig)
  double tolerance = 0;
  /// Unit eigenvector of the smallest eigenvalue, reported when that
  /// eigenvalue is within tolerance of zero.
  std::optional<Eigen::VectorXd> near_null;
  /// c' A c for the near-null vector (when present).
  std::optional<double> residual;
};

/// A_{uv} = K(zonal_argument(x_u, x_v)) with certified truncation eps.
/// Points must be pairwise distinct and live on e.space().
Eigen::MatrixXd build_gram(const KernelExpansion& e, const std::vector<Point>& points,
                           double eps);

GramReport psd_report(const Eigen::MatrixXd& a, double tol);

enum class Parity { Even, Odd };

/// A constructive certificate that a kernel is not strictly positive
/// definite: a point configuration and a unit vector c with c' A c ~ 0.
struct Degeneracy {
  std::vector<Point> points;
  std::vector<double> angles;  // circle parameters of the configuration, when used
  Eigen::VectorXd c;
  double residual;  // c' A c
  double bound;     // certified smallness threshold the residual meets
};

/// Finite support with max index N: n = 2^{N+1} equally spaced points on an
/// embedded circle make the Gram matrix rank-deficient. Requires a sphere or
/// projective family with a point model and 2^{N+1} <= 4096.
Degeneracy finite_support_degeneracy(const KernelExpansion& e, double eps);

/// Single-parity support on a sphere: the pair (x, -x) with c = (1,-1)/sqrt2
/// (even) or (1,1)/sqrt2 (odd) annihilates the quadratic form.
Degeneracy parity_degeneracy(const KernelExpansion& e, Parity parity, std::uint64_t seed,
                             double eps);

/// Circle support missing the progression nZ+j: the n-th roots of unity with
/// c_u = cos(2 pi u j / n) annihilate the quadratic form.
Degeneracy roots_of_unity_degeneracy(const KernelExpansion& e, const ArithmeticProgression& ap,
                                     double eps);

/// Gram report for n seeded random distinct points; empirical corroboration
/// of strictness verdicts.
GramReport empirical_strictness_probe(const KernelExpansion& e, int n, std::uint64_t seed,
                                      double eps);

/// Count of eigenvalues above rel_tol * max_eig.
int numerical_rank(const Eigen::MatrixXd& a, double rel_tol = 1e-8);

}  // namespace zonal
