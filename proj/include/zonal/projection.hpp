#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zonal/kernels.hpp"

namespace zonal {

/// Gauss-Jacobi rule: integrates f against (1-t)^alpha (1+t)^beta over
/// [-1,1] exactly for polynomials of degree <= 2n-1.
struct QuadratureRule {
  JacobiParams params;
  std::vector<double> nodes;    // strictly increasing, inside (-1,1)
  std::vector<double> weights;  // positive, summing to the 0th moment

  double integrate(const std::function<double(double)>& f) const;
};

inline constexpr int kMaxQuadratureNodes = 512;

/// Nodes and weights via the symmetric tridiagonal (recurrence coefficient)
/// eigenvalue method.
QuadratureRule gauss_jacobi_rule(const JacobiParams& p, int n);

/// 0th moment: integral of the weight, 2^{a+b+1} B(a+1, b+1).
double weight_moment(const JacobiParams& p);

/// Squared weighted L2 norm h_k of P_k^{alpha,beta}.
double jacobi_norm_squared(const JacobiParams& p, long k);

/// Coefficient of P_k in the expansion of f: (1/h_k) sum w_i f(t_i) P_k(t_i).
/// Exact when f is a polynomial of degree <= 2n-1-k.
double project_coefficient(const std::function<double(double)>& f, const JacobiParams& p, long k,
                           int n);

struct Recovery {
  std::vector<double> coefficients;      // a_0 .. a_N
  double residual;                       // weighted L2 distance to the reconstruction
  std::vector<long> flagged_negative;    // indices with coefficient < -1e-8
};

/// Projects f onto P_0..P_N with an n-node rule and reports the weighted
/// reconstruction residual.
Recovery recover_expansion(const std::function<double(double)>& f, const Space& s, int max_degree,
                           int nodes);

struct BasisTailCheck {
  double basis_alpha = 0;
  double basis_beta = 0;
  bool applicable = true;
  std::string note;              // set when the basis is skipped
  double max_tail_coefficient = 0;  // max |coef| beyond degree M+1, g scaled to unit size
  double reconstruction_residual = 0;
};

struct DerivativeReport {
  double max_relative_fd_gap;             // term-wise series vs central differences
  std::optional<long> degree_bound;       // M+1 for finite expansions
  std::vector<BasisTailCheck> bases;
};

/// Differentiability checks for d >= 3: (a) the term-wise derivative of the
/// expansion matches finite differences of eval_kernel on the grid; (b) for
/// finite expansions, g(t) = (1-t^2) K'(t) has Jacobi degree <= M+1, so its
/// projections beyond that vanish in the family's derivative basis.
DerivativeReport derivative_check(const KernelExpansion& e, const std::vector<double>& grid);

}  // namespace zonal
