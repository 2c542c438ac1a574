#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zonal/spaces.hpp"

namespace zonal {

/// Full arithmetic progression modulus*Z + residue restricted to Z_+,
/// i.e. {residue, residue+modulus, residue+2*modulus, ...}.
struct ArithmeticProgression {
  long modulus = 1;
  long residue = 0;

  bool operator==(const ArithmeticProgression&) const = default;
};

/// Description of the index set {k : a_k > 0}: either a finite list or a
/// union of arithmetic progressions adjusted by finite added/removed lists.
class SupportDescriptor {
 public:
  enum class Kind { Finite, Structured };

  static SupportDescriptor finite(std::vector<long> indices);
  static SupportDescriptor structured(std::vector<ArithmeticProgression> aps,
                                      std::vector<long> added = {},
                                      std::vector<long> removed = {});
  /// All of Z_+ (the progression 1Z + 0).
  static SupportDescriptor all();

  Kind kind() const { return kind_; }
  bool contains(long k) const;
  bool is_empty() const;
  bool is_infinite() const { return kind_ == Kind::Structured && !aps_.empty(); }

  /// Largest index of a finite support (nullopt when infinite or empty).
  std::optional<long> max_index() const;

  /// {true,...} iff infinitely many even indices / odd indices.
  bool infinitely_many_even() const;
  bool infinitely_many_odd() const;

  /// True when every index has the given parity (0 even, 1 odd) -- the
  /// precondition of the two-point antipodal construction.
  bool single_parity(int parity) const;

  /// Enumerates members <= bound in increasing order.
  std::vector<long> members_up_to(long bound) const;

  const std::vector<long>& finite_indices() const { return indices_; }
  const std::vector<ArithmeticProgression>& progressions() const { return aps_; }
  const std::vector<long>& added() const { return added_; }
  const std::vector<long>& removed() const { return removed_; }

  /// Membership-preserving image under k -> 2k.
  SupportDescriptor doubled() const;

 private:
  SupportDescriptor() = default;
  Kind kind_ = Kind::Finite;
  std::vector<long> indices_;  // Finite
  std::vector<ArithmeticProgression> aps_;
  std::vector<long> added_, removed_;  // Structured
};

struct MeetsApResult {
  bool meets_all;
  /// A full arithmetic progression disjoint from the symmetrized support,
  /// present exactly when meets_all is false.
  std::optional<ArithmeticProgression> missed;
};

/// Decides whether {k : a_|k| > 0} (the symmetrized support) has nonempty
/// intersection with every full arithmetic progression in Z. Structured
/// supports reduce to a residue-covering check modulo the lcm of the moduli.
MeetsApResult meets_all_arithmetic_progressions(const SupportDescriptor& sup);

struct FiniteCoefficients {
  /// Strictly positive coefficients keyed by strictly increasing index.
  std::vector<std::pair<long, double>> terms;
};

struct GeometricCoefficients {
  double scale;  // C > 0
  double ratio;  // 0 < rho < 1
  SupportDescriptor support;
};

/// Validated expansion sum_k a_k P_k^{alpha,beta} with a_k >= 0 and
/// sum a_k P_k(1) finite.
class KernelExpansion {
 public:
  KernelExpansion(Space space, FiniteCoefficients coeffs);
  KernelExpansion(Space space, GeometricCoefficients coeffs);

  const Space& space() const { return space_; }
  bool is_finite() const { return std::holds_alternative<FiniteCoefficients>(coeffs_); }
  const FiniteCoefficients& finite_coeffs() const;
  const GeometricCoefficients& geometric_coeffs() const;

  SupportDescriptor support() const;
  double coefficient(long k) const;

  /// K(1) = sum a_k P_k(1), certified within eps.
  double sum_at_one(double eps) const;

 private:
  Space space_;
  std::variant<FiniteCoefficients, GeometricCoefficients> coeffs_;
};

/// Raw, unvalidated expansion input (as parsed from a spec file).
struct RawExpansion {
  Space space;
  // Finite when terms is set; geometric otherwise.
  std::optional<std::vector<std::pair<long, double>>> terms;
  std::optional<GeometricCoefficients> geometric;
};

/// Normalizes and validates: drops zero coefficients, rejects negatives,
/// duplicates, and non-summable rules.
KernelExpansion validate_expansion(const RawExpansion& raw);

struct KernelValue {
  double value;
  double error_bound;  // certified |value - true sum|; 0 for finite expansions
  long terms_used;
};

/// Evaluates K(t) with a certified truncation bound <= eps.
KernelValue eval_kernel(const KernelExpansion& e, double t, double eps);

enum class VerdictKind { ZeroKernel, PositiveDefiniteNotStrict, StrictlyPositiveDefinite };

struct FiniteSupportWitness {
  long max_index;
};

/// The stated parity occurs only finitely often in the support.
struct ParityWitness {
  int missing_parity;        // 0: finitely many even, 1: finitely many odd
  bool support_single_parity;  // true when every index has the other parity
};

struct MissedApWitness {
  ArithmeticProgression ap;
};

using Witness = std::variant<std::monostate, FiniteSupportWitness, ParityWitness, MissedApWitness>;

struct Verdict {
  VerdictKind kind;
  std::string reason;
  Witness witness;
};

/// Strict positive definiteness decision:
///   circle      -- support meets every full arithmetic progression;
///   sphere d>=2 -- infinitely many even and infinitely many odd indices;
///   all others  -- infinite support.
Verdict classify_spd(const KernelExpansion& e);

/// Even-indexed Gegenbauer view of a real projective expansion: the kernel
/// rewrites as sum_k a_k m_k C_{2k}^{(d-1)/2}, m_k = P_k(1)/C_{2k}(1) > 0.
struct GegenbauerView {
  double lambda;                 // (d-1)/2
  SupportDescriptor support;     // {2k : k in support(e)}
  std::vector<std::pair<long, double>> multipliers;  // (2k, m_k) samples
  bool infinitely_many_positive;
  Verdict classification;        // agrees with classify_spd(e)
};

GegenbauerView real_projective_gegenbauer_view(const KernelExpansion& e);

/// Positive multiple m_k relating a_k to the Gegenbauer coefficient of
/// C_{2k}^{(d-1)/2} in the view above.
double gegenbauer_multiplier(const Space& real_projective_space, long k);

}  // namespace zonal
