#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zonal/errors.hpp"
#include "zonal/kernels.hpp"

using namespace zonal;

namespace {

KernelExpansion finite_expansion(const Space& s, std::vector<std::pair<long, double>> terms) {
  RawExpansion raw{s, std::move(terms), std::nullopt};
  return validate_expansion(raw);
}

KernelExpansion geometric_expansion(const Space& s, double scale, double ratio,
                                    SupportDescriptor sup) {
  RawExpansion raw{s, std::nullopt, GeometricCoefficients{scale, ratio, std::move(sup)}};
  return validate_expansion(raw);
}

}  // namespace

TEST_CASE("validation accepts and normalizes") {
  const auto e = finite_expansion(Space::sphere(2), {{3, 2.0}, {0, 1.0}, {5, 0.0}});
  CHECK(e.is_finite());
  CHECK(e.coefficient(0) == 1.0);
  CHECK(e.coefficient(3) == 2.0);
  CHECK(e.coefficient(5) == 0.0);  // zero coefficient dropped
  CHECK(e.support().contains(0));
  CHECK(e.support().contains(3));
  CHECK_FALSE(e.support().contains(5));
}

TEST_CASE("validation rejects bad input") {
  try {
    finite_expansion(Space::sphere(2), {{2, -0.1}});
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationError::Code::NegativeCoefficient);
    CHECK(e.index() == 2);
  }
  try {
    finite_expansion(Space::sphere(2), {{1, 0.5}, {1, 0.7}});
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationError::Code::DuplicateIndex);
    CHECK(e.index() == 1);
  }
  try {
    geometric_expansion(Space::sphere(2), 1.0, 1.0, SupportDescriptor::all());
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationError::Code::NonSummable);
  }
}

TEST_CASE("support descriptor membership") {
  const auto sup = SupportDescriptor::structured({{4, 1}, {6, 0}}, {2}, {6});
  CHECK(sup.contains(1));
  CHECK(sup.contains(5));
  CHECK(sup.contains(0));
  CHECK(sup.contains(12));
  CHECK(sup.contains(2));       // added
  CHECK_FALSE(sup.contains(6));  // removed
  CHECK_FALSE(sup.contains(3));
  CHECK(sup.is_infinite());
  CHECK_THROWS_AS(SupportDescriptor::structured({{4, 5}}), ValidationError);
  CHECK_THROWS_AS(SupportDescriptor::structured({{4, 1}}, {5}, {5}), ValidationError);
  CHECK_THROWS_AS(SupportDescriptor::structured({{4, 1}}, {}, {2}), ValidationError);
}

TEST_CASE("kernel evaluation with certified bounds") {
  // finite: P_0 + P_1 = 1 + t on the 2-sphere
  const auto e = finite_expansion(Space::sphere(2), {{0, 1.0}, {1, 1.0}});
  const KernelValue v = eval_kernel(e, 0.5, 1e-10);
  CHECK(v.value == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(v.error_bound == 0.0);

  // geometric on all k: sum 2^-k P_k^{0,0}(1) = 2
  const auto g = geometric_expansion(Space::sphere(2), 1.0, 0.5, SupportDescriptor::all());
  const KernelValue w = eval_kernel(g, 1.0, 1e-10);
  CHECK(w.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(w.error_bound <= 1e-10);
  CHECK(g.sum_at_one(1e-10) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("certified bound is sound against longer reference sums") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ratio(0.2, 0.9);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  std::uniform_real_distribution<double> ts(-1.0, 1.0);
  const std::vector<Space> spaces = {Space::sphere(2), Space::real_projective(3),
                                     Space::complex_projective(4), Space::cayley_plane()};
  for (int trial = 0; trial < 100; ++trial) {
    const Space& s = spaces[static_cast<size_t>(trial) % spaces.size()];
    const auto e = geometric_expansion(s, scale(rng), ratio(rng), SupportDescriptor::all());
    const double t = ts(rng);
    const KernelValue v = eval_kernel(e, t, 1e-9);
    // reference: direct sum to 10x the used degree
    const JacobiParams p = s.params();
    const auto& g = e.geometric_coeffs();
    const auto seq = eval_jacobi_sequence(p, 10 * v.terms_used, t);
    double ref = 0.0;
    for (long k = 0; k <= 10 * v.terms_used; ++k)
      ref += g.scale * std::pow(g.ratio, static_cast<double>(k)) * seq[static_cast<size_t>(k)];
    CHECK(std::fabs(v.value - ref) <= v.error_bound + 1e-13 * std::fabs(ref));
  }
}

TEST_CASE("progression covering decisions") {
  const auto all = SupportDescriptor::all();
  CHECK(meets_all_arithmetic_progressions(all).meets_all);

  const auto evens = SupportDescriptor::structured({{2, 0}});
  const auto r1 = meets_all_arithmetic_progressions(evens);
  CHECK_FALSE(r1.meets_all);
  CHECK(r1.missed->modulus == 2);
  CHECK(r1.missed->residue == 1);

  const auto mod3 = SupportDescriptor::structured({{3, 0}, {3, 1}, {3, 2}});
  CHECK(meets_all_arithmetic_progressions(mod3).meets_all);

  // symmetrization: {3Z, 3Z+1} covers because -1 = 2 (mod 3)
  const auto sym = SupportDescriptor::structured({{3, 0}, {3, 1}});
  CHECK(meets_all_arithmetic_progressions(sym).meets_all);

  const auto fin = SupportDescriptor::finite({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const auto r2 = meets_all_arithmetic_progressions(fin);
  CHECK_FALSE(r2.meets_all);
  CHECK(r2.missed->modulus == 22);
  CHECK(r2.missed->residue == 11);
  // the witness avoids the symmetrized support
  for (long q = -40; q <= 40; ++q) {
    const long x = r2.missed->modulus * q + r2.missed->residue;
    CHECK_FALSE(fin.contains(std::labs(x)));
  }

  // an added index inside the missed class forces a refined witness
  const auto decorated = SupportDescriptor::structured({{2, 0}}, {7});
  const auto r3 = meets_all_arithmetic_progressions(decorated);
  CHECK_FALSE(r3.meets_all);
  for (long q = -50; q <= 50; ++q) {
    const long x = r3.missed->modulus * q + r3.missed->residue;
    CHECK_FALSE(decorated.contains(std::labs(x)));
  }
}

TEST_CASE("covering agrees with the windowed brute-force oracle") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 60; ++trial) {
    const SupportDescriptor sup = zonal::testing::random_structured_support(rng);
    const bool fast = meets_all_arithmetic_progressions(sup).meets_all;
    const bool slow = zonal::testing::brute_force_meets_all(sup);
    CHECK(fast == slow);
  }
}

TEST_CASE("enlarging a circle support never loses strictness") {
  std::mt19937_64 rng(4096);
  std::uniform_int_distribution<long> modulus(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const SupportDescriptor base = zonal::testing::random_structured_support(rng);
    if (!meets_all_arithmetic_progressions(base).meets_all) continue;
    auto aps = base.progressions();
    const long m = modulus(rng);
    std::uniform_int_distribution<long> residue(0, m - 1);
    aps.push_back({m, residue(rng)});
    const auto enlarged = SupportDescriptor::structured(aps, base.added(), base.removed());
    CHECK(meets_all_arithmetic_progressions(enlarged).meets_all);
  }
}

TEST_CASE("classification per family") {
  // projective families: infinite support is enough
  const auto rp = geometric_expansion(Space::real_projective(3), 1.0, 0.5,
                                      SupportDescriptor::all());
  CHECK(classify_spd(rp).kind == VerdictKind::StrictlyPositiveDefinite);

  const auto rp_fin = finite_expansion(Space::real_projective(3), {{0, 1.0}, {4, 1.0}});
  const Verdict v1 = classify_spd(rp_fin);
  CHECK(v1.kind == VerdictKind::PositiveDefiniteNotStrict);
  CHECK(std::get<FiniteSupportWitness>(v1.witness).max_index == 4);

  // spheres: even-only support fails
  const auto sph_even = geometric_expansion(Space::sphere(2), 1.0, 0.5,
                                            SupportDescriptor::structured({{2, 0}}));
  const Verdict v2 = classify_spd(sph_even);
  CHECK(v2.kind == VerdictKind::PositiveDefiniteNotStrict);
  CHECK(std::get<ParityWitness>(v2.witness).missing_parity == 1);
  CHECK(std::get<ParityWitness>(v2.witness).support_single_parity);

  // odd modulus hits both parities
  const auto sph_mixed = geometric_expansion(Space::sphere(3), 1.0, 0.5,
                                             SupportDescriptor::structured({{3, 1}}));
  CHECK(classify_spd(sph_mixed).kind == VerdictKind::StrictlyPositiveDefinite);

  // circle: finite support misses a large progression
  const auto circ = finite_expansion(Space::circle(), {{0, 1.0}, {1, 1.0}, {10, 1.0}});
  const Verdict v3 = classify_spd(circ);
  CHECK(v3.kind == VerdictKind::PositiveDefiniteNotStrict);
  CHECK(std::get<MissedApWitness>(v3.witness).ap.modulus == 22);

  const auto circ_all = geometric_expansion(Space::circle(), 1.0, 0.5, SupportDescriptor::all());
  CHECK(classify_spd(circ_all).kind == VerdictKind::StrictlyPositiveDefinite);

  // zero kernel
  const auto zero = finite_expansion(Space::sphere(2), {{3, 0.0}});
  CHECK(classify_spd(zero).kind == VerdictKind::ZeroKernel);
}

TEST_CASE("classification is scale invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Space s = trial % 2 == 0 ? Space::sphere(3) : Space::real_projective(2);
    const auto e = zonal::testing::random_finite_expansion(s, 10, rng);
    auto scaled_terms = e.finite_coeffs().terms;
    for (auto& [k, a] : scaled_terms) a *= 7.5;
    scaled_terms.emplace_back(17, 0.0);  // appending a zero coefficient changes nothing
    const auto scaled = validate_expansion(RawExpansion{s, scaled_terms, std::nullopt});
    CHECK(classify_spd(e).kind == classify_spd(scaled).kind);
  }
}

TEST_CASE("gegenbauer view of real projective expansions") {
  const auto e = finite_expansion(Space::real_projective(3), {{0, 1.0}, {1, 1.0}, {2, 1.0}});
  const GegenbauerView view = real_projective_gegenbauer_view(e);
  CHECK(view.lambda == 1.0);
  CHECK(view.support.contains(0));
  CHECK(view.support.contains(2));
  CHECK(view.support.contains(4));
  CHECK_FALSE(view.support.contains(1));
  CHECK_FALSE(view.support.contains(6));
  // d=3, k=1: P_1^{1/2,-1/2}(1) / C_2^1(1) = 1.5/3
  CHECK(gegenbauer_multiplier(Space::real_projective(3), 1) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(view.classification.kind == classify_spd(e).kind);
  CHECK_FALSE(view.infinitely_many_positive);

  const auto strict = geometric_expansion(Space::real_projective(3), 1.0, 0.5,
                                          SupportDescriptor::all());
  const GegenbauerView sv = real_projective_gegenbauer_view(strict);
  CHECK(sv.infinitely_many_positive);
  CHECK(sv.classification.kind == VerdictKind::StrictlyPositiveDefinite);

  CHECK_THROWS_AS(real_projective_gegenbauer_view(finite_expansion(Space::sphere(2), {{0, 1.0}})),
                  InvalidArgument);
}

TEST_CASE("gegenbauer view rewrites the kernel exactly") {
  // sum a_k P_k^{a,-1/2}(2t^2-1) = sum a_k m_k C_{2k}(t)
  const Space rp5 = Space::real_projective(5);
  const auto e = finite_expansion(rp5, {{0, 0.3}, {1, 1.0}, {3, 0.7}});
  const double lambda = (rp5.dim - 1) / 2.0;
  for (double t : {-0.9, -0.3, 0.2, 0.8}) {
    const double lhs = eval_kernel(e, 2.0 * t * t - 1.0, 1e-12).value;
    double rhs = 0.0;
    for (const auto& [k, a] : e.finite_coeffs().terms)
      rhs += a * gegenbauer_multiplier(rp5, k) * eval_gegenbauer(lambda, 2 * k, t);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("structured support without progressions acts as a finite set") {
  const auto sup = SupportDescriptor::structured({}, {2, 6});
  CHECK_FALSE(sup.is_infinite());
  CHECK_FALSE(sup.is_empty());
  CHECK(sup.max_index() == 6);
  const auto r = meets_all_arithmetic_progressions(sup);
  CHECK_FALSE(r.meets_all);
  for (long q = -30; q <= 30; ++q)
    CHECK_FALSE(sup.contains(std::labs(r.missed->modulus * q + r.missed->residue)));

  const auto e = validate_expansion(RawExpansion{
      Space::real_projective(2), std::nullopt, GeometricCoefficients{1.0, 0.5, sup}});
  const Verdict v = classify_spd(e);
  CHECK(v.kind == VerdictKind::PositiveDefiniteNotStrict);
  CHECK(std::get<FiniteSupportWitness>(v.witness).max_index == 6);
}

TEST_CASE("unreachable truncation target carries its best bound") {
  const auto e = validate_expansion(RawExpansion{
      Space::sphere(2), std::nullopt,
      GeometricCoefficients{1.0, 0.99999, SupportDescriptor::all()}});
  try {
    eval_kernel(e, 0.5, 1e-10);
    FAIL("expected a truncation failure");
  } catch (const TruncationError& err) {
    CHECK(err.best_bound() > 1e-10);
  }
}

TEST_CASE("lcm overflow is reported as a cap") {
  std::vector<ArithmeticProgression> aps;
  for (long m : {4294967291L, 4294967279L}) aps.push_back({m, 1});
  const auto sup = SupportDescriptor::structured(aps);
  CHECK_THROWS_AS(meets_all_arithmetic_progressions(sup), CapExceeded);
}
