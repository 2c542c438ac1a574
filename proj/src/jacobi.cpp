#include "zonal/jacobi.hpp"

#include <cmath>
#include <string>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

void check_degree(long k) {
  if (k < 0) throw InvalidArgument("degree index must be nonnegative, got " + std::to_string(k));
  if (k > kMaxJacobiDegree)
    throw CapExceeded("degree " + std::to_string(k) + " exceeds the cap " +
                      std::to_string(kMaxJacobiDegree));
}

void check_abscissa(double t) {
  if (!(std::fabs(t) <= 1.0))
    throw InvalidArgument("abscissa t must lie in [-1,1], got " + std::to_string(t));
}

double degree_one(const JacobiParams& p, double t) {
  return 0.5 * (p.alpha + p.beta + 2.0) * t + 0.5 * (p.alpha - p.beta);
}

// One step of the three-term recurrence: returns P_n from P_{n-1}, P_{n-2}.
double recurrence_step(const JacobiParams& p, long n, double t, double pm1, double pm2) {
  const double a = p.alpha, b = p.beta;
  const double s = 2.0 * n + a + b;
  const double c0 = 2.0 * n * (n + a + b) * (s - 2.0);
  const double c1 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
  const double c2 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
  return (c1 * pm1 - c2 * pm2) / c0;
}

}  // namespace

JacobiParams::JacobiParams(double a, double b) : alpha(a), beta(b) {
  if (!(a > -1.0) || !(b > -1.0))
    throw InvalidArgument("Jacobi exponents must exceed -1, got alpha=" + std::to_string(a) +
                          ", beta=" + std::to_string(b));
}

double eval_jacobi(const JacobiParams& p, long k, double t) {
  check_degree(k);
  check_abscissa(t);
  if (k == 0) return 1.0;
  if (k == 1) return degree_one(p, t);
  double pm2 = 1.0;
  double pm1 = degree_one(p, t);
  double pn = pm1;
  for (long n = 2; n <= k; ++n) {
    pn = recurrence_step(p, n, t, pm1, pm2);
    pm2 = pm1;
    pm1 = pn;
  }
  return pn;
}

std::vector<double> eval_jacobi_sequence(const JacobiParams& p, long k_max, double t) {
  check_degree(k_max);
  check_abscissa(t);
  std::vector<double> out(static_cast<size_t>(k_max) + 1);
  out[0] = 1.0;
  if (k_max == 0) return out;
  out[1] = degree_one(p, t);
  for (long n = 2; n <= k_max; ++n)
    out[static_cast<size_t>(n)] =
        recurrence_step(p, n, t, out[static_cast<size_t>(n - 1)], out[static_cast<size_t>(n - 2)]);
  return out;
}

double jacobi_at_one(const JacobiParams& p, long k) {
  check_degree(k);
  if (k == 0) return 1.0;
  return std::exp(std::lgamma(k + p.alpha + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(p.alpha + 1.0));
}

double eval_jacobi_normalized(const JacobiParams& p, long k, double t) {
  return eval_jacobi(p, k, t) / jacobi_at_one(p, k);
}

std::vector<double> normalized_jacobi_sequence(const JacobiParams& p, long k_max, double t) {
  std::vector<double> out = eval_jacobi_sequence(p, k_max, t);
  // P_k(1) satisfies P_k(1) = P_{k-1}(1) * (k+alpha)/k; update incrementally.
  double at_one = 1.0;
  for (long k = 1; k <= k_max; ++k) {
    at_one *= (k + p.alpha) / k;
    out[static_cast<size_t>(k)] /= at_one;
  }
  return out;
}

double jacobi_reflect(const JacobiParams& p, long k, double t) {
  const JacobiParams swapped(p.beta, p.alpha);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * eval_jacobi(swapped, k, t);
}

double addition_constant(const JacobiParams& p, long k) {
  check_degree(k);
  // k = 0 is forced to 1 by Gamma(x+1) = x Gamma(x); evaluating the quotient
  // directly would hit Gamma(0) when alpha+beta+1 = 0.
  if (k == 0) return 1.0;
  const double a = p.alpha, b = p.beta;
  const double log_value = std::lgamma(b + 1.0) + std::log(2.0 * k + a + b + 1.0) +
                           std::lgamma(k + a + b + 1.0) - std::lgamma(a + b + 2.0) -
                           std::lgamma(k + b + 1.0);
  return std::exp(log_value);
}

double ratio_at_one(const JacobiParams& p, long k) {
  check_degree(k);
  return std::exp(std::lgamma(p.alpha + 1.0) - std::lgamma(p.beta + 1.0) +
                  std::lgamma(k + p.beta + 1.0) - std::lgamma(k + p.alpha + 1.0));
}

double gegenbauer_at_one(double lambda, long n) {
  if (!(lambda > 0.0))
    throw InvalidArgument("Gegenbauer index lambda must be positive, got " +
                          std::to_string(lambda));
  check_degree(n);
  if (n == 0) return 1.0;
  return std::exp(std::lgamma(n + 2.0 * lambda) - std::lgamma(2.0 * lambda) -
                  std::lgamma(n + 1.0));
}

double eval_gegenbauer(double lambda, long n, double t) {
  if (!(lambda > 0.0))
    throw InvalidArgument("Gegenbauer index lambda must be positive, got " +
                          std::to_string(lambda));
  const JacobiParams ultraspherical(lambda - 0.5, lambda - 0.5);
  const double scale = gegenbauer_at_one(lambda, n) / jacobi_at_one(ultraspherical, n);
  return scale * eval_jacobi(ultraspherical, n, t);
}

double jacobi_derivative(const JacobiParams& p, long k, double t) {
  check_degree(k);
  check_abscissa(t);
  if (k == 0) return 0.0;
  const JacobiParams shifted(p.alpha + 1.0, p.beta + 1.0);
  return 0.5 * (k + p.alpha + p.beta + 1.0) * eval_jacobi(shifted, k - 1, t);
}

}  // namespace zonal
