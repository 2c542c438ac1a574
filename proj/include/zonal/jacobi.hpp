#pragma once

#include <vector>

namespace zonal {

/// Exponent pair (alpha, beta) of a Jacobi weight (1-t)^alpha (1+t)^beta.
/// Both exponents must exceed -1 (orthogonality range).
struct JacobiParams {
  double alpha;
  double beta;

  JacobiParams(double a, double b);
};

/// Degrees above this are refused; keeps runtimes bounded and documents the
/// tested envelope.
inline constexpr long kMaxJacobiDegree = 1'000'000;

/// P_k^{alpha,beta}(t) by the classical three-term recurrence in k.
double eval_jacobi(const JacobiParams& p, long k, double t);

/// All values P_0(t), ..., P_kmax(t) in one forward pass.
std::vector<double> eval_jacobi_sequence(const JacobiParams& p, long k_max, double t);

/// P_k^{alpha,beta}(1) = Gamma(k+alpha+1) / (k! Gamma(alpha+1)).
double jacobi_at_one(const JacobiParams& p, long k);

/// R_k^{alpha,beta}(t) = P_k(t) / P_k(1), so R_k(1) = 1.
double eval_jacobi_normalized(const JacobiParams& p, long k, double t);

/// R_0(t), ..., R_kmax(t) in one forward pass.
std::vector<double> normalized_jacobi_sequence(const JacobiParams& p, long k_max, double t);

/// (-1)^k P_k^{beta,alpha}(t); equals P_k^{alpha,beta}(-t).
double jacobi_reflect(const JacobiParams& p, long k, double t);

/// The addition-formula constant
/// c_k = Gamma(beta+1) (2k+alpha+beta+1) Gamma(k+alpha+beta+1)
///       / (Gamma(alpha+beta+2) Gamma(k+beta+1)).
/// c_0 = 1 for every admissible pair.
double addition_constant(const JacobiParams& p, long k);

/// P_k^{beta,alpha}(1) / P_k^{alpha,beta}(1)
/// = [Gamma(alpha+1)/Gamma(beta+1)] [Gamma(k+beta+1)/Gamma(k+alpha+1)].
/// Strictly decreasing to 0 in k when alpha > beta.
double ratio_at_one(const JacobiParams& p, long k);

/// Gegenbauer (ultraspherical) value at 1: binomial(n+2*lambda-1, n).
double gegenbauer_at_one(double lambda, long n);

/// Gegenbauer polynomial C_n^lambda(t), computed as the fixed positive
/// multiple gegenbauer_at_one / P_n^{mu,mu}(1), mu = lambda - 1/2, of the
/// ultraspherical Jacobi polynomial.
double eval_gegenbauer(double lambda, long n, double t);

/// d/dt P_k^{alpha,beta}(t) = ((k+alpha+beta+1)/2) P_{k-1}^{alpha+1,beta+1}(t).
/// k = 0 returns 0 by convention.
double jacobi_derivative(const JacobiParams& p, long k, double t);

}  // namespace zonal
