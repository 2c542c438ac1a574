#include "zonal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

constexpr long kLcmCap = 1L << 32;

void check_index(long k) {
  if (k < 0)
    throw ValidationError(ValidationError::Code::BadSupport, k,
                          "support indices must be nonnegative, got " + std::to_string(k));
}

bool in_progression(const ArithmeticProgression& ap, long k) {
  return k >= ap.residue && (k - ap.residue) % ap.modulus == 0;
}

bool sorted_contains(const std::vector<long>& v, long k) {
  return std::binary_search(v.begin(), v.end(), k);
}

std::vector<long> sorted_unique(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

long lcm_capped(long a, long b) {
  const long g = std::gcd(a, b);
  const long q = a / g;
  if (b > kLcmCap / q)
    throw CapExceeded("lcm of support moduli exceeds 2^32; refine the descriptor");
  return q * b;
}

}  // namespace

SupportDescriptor SupportDescriptor::finite(std::vector<long> indices) {
  for (long k : indices) check_index(k);
  SupportDescriptor d;
  d.kind_ = Kind::Finite;
  d.indices_ = sorted_unique(std::move(indices));
  return d;
}

SupportDescriptor SupportDescriptor::structured(std::vector<ArithmeticProgression> aps,
                                                std::vector<long> added,
                                                std::vector<long> removed) {
  for (const auto& ap : aps) {
    if (ap.modulus < 1)
      throw ValidationError(ValidationError::Code::BadSupport, ap.modulus,
                            "progression modulus must be >= 1");
    if (ap.residue < 0 || ap.residue >= ap.modulus)
      throw ValidationError(ValidationError::Code::BadSupport, ap.residue,
                            "progression residue must satisfy 0 <= r < m");
  }
  for (long k : added) check_index(k);
  for (long k : removed) check_index(k);
  SupportDescriptor d;
  d.kind_ = Kind::Structured;
  d.aps_ = std::move(aps);
  d.added_ = sorted_unique(std::move(added));
  d.removed_ = sorted_unique(std::move(removed));
  for (long k : d.removed_) {
    if (sorted_contains(d.added_, k))
      throw ValidationError(ValidationError::Code::BadSupport, k,
                            "index " + std::to_string(k) + " is both added and removed");
    const bool in_some = std::any_of(d.aps_.begin(), d.aps_.end(),
                                     [&](const ArithmeticProgression& ap) {
                                       return in_progression(ap, k);
                                     });
    if (!in_some)
      throw ValidationError(ValidationError::Code::BadSupport, k,
                            "removed index " + std::to_string(k) +
                                " lies in no listed progression");
  }
  return d;
}

SupportDescriptor SupportDescriptor::all() {
  return structured({ArithmeticProgression{1, 0}});
}

bool SupportDescriptor::contains(long k) const {
  if (k < 0) return false;
  if (kind_ == Kind::Finite) return sorted_contains(indices_, k);
  if (sorted_contains(removed_, k)) return false;
  if (sorted_contains(added_, k)) return true;
  return std::any_of(aps_.begin(), aps_.end(),
                     [&](const ArithmeticProgression& ap) { return in_progression(ap, k); });
}

bool SupportDescriptor::is_empty() const {
  if (kind_ == Kind::Finite) return indices_.empty();
  return aps_.empty() && added_.empty();
}

std::optional<long> SupportDescriptor::max_index() const {
  if (is_infinite() || is_empty()) return std::nullopt;
  if (kind_ == Kind::Finite) return indices_.back();
  return added_.back();
}

bool SupportDescriptor::infinitely_many_even() const {
  if (!is_infinite()) return false;
  return std::any_of(aps_.begin(), aps_.end(), [](const ArithmeticProgression& ap) {
    return ap.modulus % 2 == 1 || ap.residue % 2 == 0;
  });
}

bool SupportDescriptor::infinitely_many_odd() const {
  if (!is_infinite()) return false;
  return std::any_of(aps_.begin(), aps_.end(), [](const ArithmeticProgression& ap) {
    return ap.modulus % 2 == 1 || ap.residue % 2 == 1;
  });
}

bool SupportDescriptor::single_parity(int parity) const {
  if (kind_ == Kind::Finite)
    return std::all_of(indices_.begin(), indices_.end(),
                       [&](long k) { return k % 2 == parity; });
  const bool aps_ok = std::all_of(aps_.begin(), aps_.end(), [&](const ArithmeticProgression& ap) {
    return ap.modulus % 2 == 0 && ap.residue % 2 == parity;
  });
  const bool added_ok =
      std::all_of(added_.begin(), added_.end(), [&](long k) { return k % 2 == parity; });
  return aps_ok && added_ok;
}

std::vector<long> SupportDescriptor::members_up_to(long bound) const {
  std::vector<long> out;
  for (long k = 0; k <= bound; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

SupportDescriptor SupportDescriptor::doubled() const {
  auto twice = [](const std::vector<long>& v) {
    std::vector<long> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](long k) { return 2 * k; });
    return out;
  };
  if (kind_ == Kind::Finite) return finite(twice(indices_));
  std::vector<ArithmeticProgression> aps(aps_.size());
  std::transform(aps_.begin(), aps_.end(), aps.begin(), [](const ArithmeticProgression& ap) {
    return ArithmeticProgression{2 * ap.modulus, 2 * ap.residue};
  });
  return structured(std::move(aps), twice(added_), twice(removed_));
}

MeetsApResult meets_all_arithmetic_progressions(const SupportDescriptor& sup) {
  // Symmetrized finite sets miss the residue N+1 modulo 2(N+1): positives
  // occupy [0, N], negatives [N+2, 2N+1] and 0.
  const auto finite_miss = [](const std::vector<long>& s) -> MeetsApResult {
    if (s.empty()) return {false, ArithmeticProgression{1, 0}};
    const long n = *std::max_element(s.begin(), s.end());
    return {false, ArithmeticProgression{2 * (n + 1), n + 1}};
  };

  if (sup.kind() == SupportDescriptor::Kind::Finite) return finite_miss(sup.finite_indices());
  if (!sup.is_infinite()) return finite_miss(sup.added());

  long l = 1;
  for (const auto& ap : sup.progressions()) l = lcm_capped(l, ap.modulus);

  long uncovered = -1;
  for (long c = 0; c < l; ++c) {
    const bool covered = std::any_of(
        sup.progressions().begin(), sup.progressions().end(),
        [&](const ArithmeticProgression& ap) {
          const long r = c % ap.modulus;
          return r == ap.residue || r == (ap.modulus - ap.residue) % ap.modulus;
        });
    if (!covered) {
      uncovered = c;
      break;
    }
  }
  if (uncovered < 0) return {true, std::nullopt};

  // The progressions miss l*Z + uncovered entirely; finitely many added
  // indices may still land there. Shrink to a sub-progression avoiding them.
  std::vector<long> hit_offsets;
  for (long f : sup.added()) {
    if ((f - uncovered) % l == 0) hit_offsets.push_back((f - uncovered) / l);
    if ((f + uncovered) % l == 0) hit_offsets.push_back(-(f + uncovered) / l);
  }
  if (hit_offsets.empty()) return {false, ArithmeticProgression{l, uncovered}};
  long p = 1;
  for (long q : hit_offsets) p = std::max(p, std::labs(q));
  if (p > (kLcmCap / (4 * l)) - 1)
    throw CapExceeded("witness progression modulus exceeds 2^32");
  return {false, ArithmeticProgression{2 * l * (2 * p + 1), 2 * l * p + uncovered}};
}

KernelExpansion::KernelExpansion(Space space, FiniteCoefficients coeffs)
    : space_(space), coeffs_(std::move(coeffs)) {}

KernelExpansion::KernelExpansion(Space space, GeometricCoefficients coeffs)
    : space_(space), coeffs_(std::move(coeffs)) {}

const FiniteCoefficients& KernelExpansion::finite_coeffs() const {
  return std::get<FiniteCoefficients>(coeffs_);
}

const GeometricCoefficients& KernelExpansion::geometric_coeffs() const {
  return std::get<GeometricCoefficients>(coeffs_);
}

SupportDescriptor KernelExpansion::support() const {
  if (is_finite()) {
    std::vector<long> idx;
    idx.reserve(finite_coeffs().terms.size());
    for (const auto& [k, a] : finite_coeffs().terms) idx.push_back(k);
    return SupportDescriptor::finite(std::move(idx));
  }
  return geometric_coeffs().support;
}

double KernelExpansion::coefficient(long k) const {
  if (k < 0) return 0.0;
  if (is_finite()) {
    const auto& terms = finite_coeffs().terms;
    const auto it = std::lower_bound(terms.begin(), terms.end(), k,
                                     [](const auto& term, long key) { return term.first < key; });
    return (it != terms.end() && it->first == k) ? it->second : 0.0;
  }
  const auto& g = geometric_coeffs();
  return g.support.contains(k) ? g.scale * std::pow(g.ratio, static_cast<double>(k)) : 0.0;
}

double KernelExpansion::sum_at_one(double eps) const {
  return eval_kernel(*this, 1.0, eps).value;
}

KernelExpansion validate_expansion(const RawExpansion& raw) {
  if (raw.terms.has_value()) {
    std::set<long> seen;
    FiniteCoefficients out;
    for (const auto& [k, a] : *raw.terms) {
      check_index(k);
      if (!seen.insert(k).second)
        throw ValidationError(ValidationError::Code::DuplicateIndex, k,
                              "duplicate coefficient index " + std::to_string(k));
      if (a < 0.0)
        throw ValidationError(ValidationError::Code::NegativeCoefficient, k,
                              "coefficient a_" + std::to_string(k) + " = " + std::to_string(a) +
                                  " is negative; the representation requires a_k >= 0");
      if (!std::isfinite(a)) throw InvalidArgument("coefficient must be finite");
      if (a > 0.0) out.terms.emplace_back(k, a);
    }
    std::sort(out.terms.begin(), out.terms.end());
    return KernelExpansion(raw.space, std::move(out));
  }
  if (!raw.geometric.has_value()) throw InvalidArgument("expansion has no coefficient rule");
  const GeometricCoefficients& g = *raw.geometric;
  if (!(g.scale > 0.0))
    throw ValidationError(ValidationError::Code::NegativeCoefficient, -1,
                          "geometric scale must be positive");
  if (!(g.ratio > 0.0)) throw InvalidArgument("geometric ratio must be positive");
  if (g.ratio >= 1.0)
    throw ValidationError(ValidationError::Code::NonSummable, -1,
                          "geometric ratio " + std::to_string(g.ratio) +
                              " >= 1 makes sum a_k P_k(1) diverge");
  return KernelExpansion(raw.space, g);
}

KernelValue eval_kernel(const KernelExpansion& e, double t, double eps) {
  if (!(std::fabs(t) <= 1.0)) throw InvalidArgument("kernel argument t must lie in [-1,1]");
  if (!(eps > 0.0)) throw InvalidArgument("truncation target eps must be positive");
  const JacobiParams p = e.space().params();

  if (e.is_finite()) {
    const auto& terms = e.finite_coeffs().terms;
    if (terms.empty()) return {0.0, 0.0, 0};
    const long k_max = terms.back().first;
    const std::vector<double> values = eval_jacobi_sequence(p, k_max, t);
    double sum = 0.0;
    for (const auto& [k, a] : terms) sum += a * values[static_cast<size_t>(k)];
    return {sum, 0.0, static_cast<long>(terms.size())};
  }

  const auto& g = e.geometric_coeffs();
  if (g.support.is_empty()) return {0.0, 0.0, 0};

  // Tail majorant: a_k |P_k(t)| <= C rho^k (k+1)^m with m = ceil(max(alpha,0)),
  // since |P_k| <= P_k(1) on [-1,1] and P_k(1) = prod(1+alpha/i) <= (k+1)^m.
  const double m = std::ceil(std::max(p.alpha, 0.0));
  const double q = 0.5 * (1.0 + g.ratio);
  const auto majorant = [&](long k) {
    return g.scale * std::pow(g.ratio, static_cast<double>(k)) *
           std::pow(static_cast<double>(k) + 1.0, m);
  };

  double sum = 0.0;
  double pm2 = 0.0, pm1 = 0.0;
  double best_bound = std::numeric_limits<double>::infinity();
  for (long k = 0; k <= kMaxJacobiDegree; ++k) {
    double pk;
    if (k == 0)
      pk = 1.0;
    else if (k == 1)
      pk = 0.5 * (p.alpha + p.beta + 2.0) * t + 0.5 * (p.alpha - p.beta);
    else {
      const double s = 2.0 * k + p.alpha + p.beta;
      const double c0 = 2.0 * k * (k + p.alpha + p.beta) * (s - 2.0);
      const double c1 = (s - 1.0) * (s * (s - 2.0) * t + p.alpha * p.alpha - p.beta * p.beta);
      const double c2 = 2.0 * (k + p.alpha - 1.0) * (k + p.beta - 1.0) * s;
      pk = (c1 * pm1 - c2 * pm2) / c0;
    }
    if (g.support.contains(k)) sum += g.scale * std::pow(g.ratio, static_cast<double>(k)) * pk;
    pm2 = pm1;
    pm1 = pk;

    // Ratio of consecutive majorant terms falls below q < 1 eventually;
    // past that point the geometric tail bound is rigorous.
    const bool ratio_settled =
        g.ratio * std::pow(1.0 + 1.0 / (static_cast<double>(k) + 2.0), m) <= q;
    if (ratio_settled) {
      const double bound = majorant(k + 1) / (1.0 - q);
      best_bound = std::min(best_bound, bound);
      if (bound <= eps) return {sum, bound, k + 1};
    }
  }
  throw TruncationError(best_bound, "could not certify truncation target " +
                                        std::to_string(eps) + " within the degree cap");
}

Verdict classify_spd(const KernelExpansion& e) {
  const SupportDescriptor sup = e.support();
  if (sup.is_empty()) return {VerdictKind::ZeroKernel, "all coefficients vanish", {}};

  const Family family = e.space().family;
  if (family == Family::Circle) {
    const MeetsApResult r = meets_all_arithmetic_progressions(sup);
    if (r.meets_all)
      return {VerdictKind::StrictlyPositiveDefinite,
              "support meets every full arithmetic progression", {}};
    const ArithmeticProgression ap = *r.missed;
    return {VerdictKind::PositiveDefiniteNotStrict,
            "support misses the arithmetic progression " + std::to_string(ap.modulus) + "Z+" +
                std::to_string(ap.residue),
            MissedApWitness{ap}};
  }

  if (family == Family::Sphere) {
    const bool even_inf = sup.infinitely_many_even();
    const bool odd_inf = sup.infinitely_many_odd();
    if (even_inf && odd_inf)
      return {VerdictKind::StrictlyPositiveDefinite,
              "support holds infinitely many even and infinitely many odd indices", {}};
    if (!sup.is_infinite())
      return {VerdictKind::PositiveDefiniteNotStrict, "support is finite",
              FiniteSupportWitness{*sup.max_index()}};
    const int missing = odd_inf ? 0 : 1;
    return {VerdictKind::PositiveDefiniteNotStrict,
            std::string("finitely many ") + (missing == 0 ? "even" : "odd") + " indices",
            ParityWitness{missing, sup.single_parity(1 - missing)}};
  }

  if (sup.is_infinite())
    return {VerdictKind::StrictlyPositiveDefinite, "support is infinite", {}};
  return {VerdictKind::PositiveDefiniteNotStrict, "support is finite",
          FiniteSupportWitness{*sup.max_index()}};
}

double gegenbauer_multiplier(const Space& s, long k) {
  if (s.family != Family::RealProjective)
    throw InvalidArgument("Gegenbauer view applies to real projective spaces only");
  const JacobiParams p = s.params();
  const double lambda = (s.dim - 1) / 2.0;
  return jacobi_at_one(p, k) / gegenbauer_at_one(lambda, 2 * k);
}

GegenbauerView real_projective_gegenbauer_view(const KernelExpansion& e) {
  if (e.space().family != Family::RealProjective)
    throw InvalidArgument("Gegenbauer view applies to real projective spaces only");
  GegenbauerView view{(e.space().dim - 1) / 2.0,
                      e.support().doubled(),
                      {},
                      e.support().is_infinite(),
                      classify_spd(e)};
  std::vector<long> samples;
  if (e.is_finite())
    for (const auto& [k, a] : e.finite_coeffs().terms) samples.push_back(k);
  else
    samples = e.support().members_up_to(32);
  for (long k : samples)
    view.multipliers.emplace_back(2 * k, gegenbauer_multiplier(e.space(), k));
  return view;
}

}  // namespace zonal
