// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "zonal/kernels.hpp"

namespace zonal::testing {

// Brute-force windowed search: does the symmetrized support meet every
// progression nZ+j with n <= L? Scans candidates x = j + nq inside
// [-10L, 10L], ignoring the finite added/removed perturbation zone so the
// verdict reflects the eventual (tail) support.
inline bool brute_force_meets_all(const SupportDescriptor& sup) {
  long l = 1;
  for (const auto& ap : sup.progressions()) l = std::lcm(l, ap.modulus);
  long skip = 0;
  for (long f : sup.added()) skip = std::max(skip, f + 1);
  for (long f : sup.removed()) skip = std::max(skip, f + 1);
  const long window = 10 * l;
  for (long n = 1; n <= l; ++n) {
    for (long j = 0; j < n; ++j) {
      bool found = false;
      for (long x = j - ((window + j) / n) * n; x <= window && !found; x += n) {
        const long k = std::labs(x);
        if (k <= skip) continue;
        if (sup.contains(k)) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

// Moments J(m) = integral of (1-t)^a (1+t)^b t^m over [-1,1] by the stable
// forward recurrence J(m+1) = [(b-a) J(m) + m J(m-1)] / (a+b+2+m), seeded
// with the Beta-function value J(0).
inline std::vector<double> weight_moments(double a, double b, int m_max) {
  std::vector<double> j(static_cast<size_t>(m_max) + 1);
  j[0] = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
  if (m_max >= 1) j[1] = (b - a) * j[0] / (a + b + 2.0);
  for (int m = 1; m < m_max; ++m)
    j[static_cast<size_t>(m) + 1] =
        ((b - a) * j[static_cast<size_t>(m)] + m * j[static_cast<size_t>(m) - 1]) /
        (a + b + 2.0 + m);
  return j;
}

// Random structured descriptor with small moduli (product <= 10^4).
inline SupportDescriptor random_structured_support(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ap_count(1, 3);
  std::uniform_int_distribution<long> modulus(1, 12);
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    std::vector<ArithmeticProgression> aps;
    long product = 1;
    const int n = ap_count(rng);
    for (int i = 0; i < n; ++i) {
      const long m = modulus(rng);
      product *= m;
      std::uniform_int_distribution<long> residue(0, m - 1);
      aps.push_back({m, residue(rng)});
    }
    if (product > 10000) continue;
    long l = 1;
    for (const auto& ap : aps) l = std::lcm(l, ap.modulus);
    std::vector<long> added, removed;
    if (coin(rng)) {
      std::uniform_int_distribution<long> extra(0, 3 * l);
      added.push_back(extra(rng));
    }
    if (coin(rng)) {
      // removals must hit a listed progression
      const auto& ap = aps[0];
      std::uniform_int_distribution<long> step(0, 5);
      const long candidate = ap.residue + step(rng) * ap.modulus;
      bool clash = false;
      for (long f : added) clash = clash || f == candidate;
      if (!clash) removed.push_back(candidate);
    }
    return SupportDescriptor::structured(std::move(aps), std::move(added), std::move(removed));
  }
}

// Random finite expansion with positive coefficients in [0.1, 3].
inline KernelExpansion random_finite_expansion(const Space& s, int max_index,
                                               std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(0.1, 3.0);
  std::uniform_int_distribution<int> pick(0, 1);
  FiniteCoefficients terms;
  for (int k = 0; k <= max_index; ++k)
    if (pick(rng)) terms.terms.emplace_back(k, coeff(rng));
  if (terms.terms.empty()) terms.terms.emplace_back(0, coeff(rng));
  return KernelExpansion(s, std::move(terms));
}

// Random geometric expansion whose support guarantees strictness on s.
inline KernelExpansion random_strict_expansion(const Space& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  std::uniform_real_distribution<double> ratio(0.3, 0.85);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<ArithmeticProgression> aps;
  if (s.family == Family::Circle) {
    // symmetrized covering systems
    switch (pick(rng)) {
      case 0: aps = {{1, 0}}; break;
      case 1: aps = {{2, 0}, {2, 1}}; break;
      case 2: aps = {{2, 0}, {4, 1}}; break;
      default: aps = {{3, 0}, {3, 1}}; break;
    }
  } else if (s.family == Family::Sphere) {
    // both parities infinitely often
    switch (pick(rng)) {
      case 0: aps = {{1, 0}}; break;
      case 1: aps = {{2, 0}, {2, 1}}; break;
      case 2: aps = {{3, 1}}; break;
      default: aps = {{5, 2}}; break;
    }
  } else {
    switch (pick(rng)) {
      case 0: aps = {{1, 0}}; break;
      case 1: aps = {{2, 0}}; break;
      case 2: aps = {{3, 2}}; break;
      default: aps = {{4, 1}, {6, 3}}; break;
    }
  }
  return KernelExpansion(
      s, GeometricCoefficients{scale(rng), ratio(rng), SupportDescriptor::structured(aps)});
}

}  // namespace zonal::testing
