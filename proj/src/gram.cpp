#include "zonal/gram.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

constexpr long kConstructionCap = 4096;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_symmetric(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw Error("symmetric eigendecomposition failed");
  return solver;
}

double quadratic_form(const Eigen::MatrixXd& a, const Eigen::VectorXd& c) {
  return c.dot(a * c);
}

Degeneracy circle_configuration(const KernelExpansion& e, long n, double eps) {
  std::vector<Point> points;
  std::vector<double> angles;
  points.reserve(static_cast<size_t>(n));
  for (long u = 1; u <= n; ++u) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(u) / static_cast<double>(n);
    angles.push_back(theta);
    points.push_back(embed_circle(e.space(), theta));
  }
  const Eigen::MatrixXd a = build_gram(e, points, eps);
  const auto solver = solve_symmetric(a);
  Eigen::VectorXd c = solver.eigenvectors().col(0);
  c.normalize();
  return Degeneracy{std::move(points), std::move(angles), c, quadratic_form(a, c), 0.0};
}

}  // namespace

Eigen::MatrixXd build_gram(const KernelExpansion& e, const std::vector<Point>& points,
                           double eps) {
  const Space& s = e.space();
  const int n = static_cast<int>(points.size());
  for (const Point& p : points)
    if (p.space != s) throw InvalidArgument("build_gram: point does not live on the kernel space");
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = eval_kernel(e, 1.0, eps).value;
    for (int j = i + 1; j < n; ++j) {
      const double t = zonal_argument(s, points[static_cast<size_t>(i)],
                                      points[static_cast<size_t>(j)]);
      if (t >= 1.0 - 1e-12)
        throw InvalidArgument("build_gram: duplicate point at rows " + std::to_string(i) +
                              " and " + std::to_string(j));
      a(i, j) = a(j, i) = eval_kernel(e, t, eps).value;
    }
  }
  return a;
}

GramReport psd_report(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw InvalidArgument("psd_report: matrix must be square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidArgument("psd_report: matrix is not symmetric");
  const auto solver = solve_symmetric(a);
  GramReport report;
  report.n = static_cast<int>(a.rows());
  report.min_eig = solver.eigenvalues().minCoeff();
  report.max_eig = solver.eigenvalues().maxCoeff();
  report.tolerance = tol;
  report.psd = report.min_eig >= -tol * std::max(1.0, report.max_eig);
  if (std::fabs(report.min_eig) <= tol * std::max(1.0, report.max_eig)) {
    Eigen::Index arg = 0;
    solver.eigenvalues().minCoeff(&arg);
    Eigen::VectorXd v = solver.eigenvectors().col(arg);
    v.normalize();
    report.residual = quadratic_form(a, v);
    report.near_null = std::move(v);
  }
  return report;
}

Degeneracy finite_support_degeneracy(const KernelExpansion& e, double eps) {
  const Family family = e.space().family;
  if (family != Family::Sphere && family != Family::RealProjective &&
      family != Family::ComplexProjective && family != Family::QuaternionProjective)
    throw UnsupportedSpace(
        "finite_support_degeneracy applies to spheres and projective families");
  const SupportDescriptor sup = e.support();
  if (sup.is_infinite() || sup.is_empty())
    throw InvalidArgument("finite_support_degeneracy needs a nonempty finite support");
  const long n_max = *sup.max_index();
  if (n_max >= 62 || (1L << (n_max + 1)) > kConstructionCap)
    throw CapExceeded("finite_support_degeneracy: 2^(N+1) exceeds the construction cap");
  const long n = 1L << (n_max + 1);
  Degeneracy d = circle_configuration(e, n, eps);
  d.bound = 1e-8 * e.sum_at_one(eps);
  return d;
}

Degeneracy parity_degeneracy(const KernelExpansion& e, Parity parity, std::uint64_t seed,
                             double eps) {
  if (e.space().family != Family::Sphere)
    throw UnsupportedSpace("parity_degeneracy applies to spheres of dimension >= 2");
  const int want = parity == Parity::Even ? 0 : 1;
  if (!e.support().single_parity(want))
    throw InvalidArgument("parity_degeneracy: support is not entirely of the stated parity");
  const Point x = random_point(e.space(), seed);
  const Point y = antipodal_sample(e.space(), x, seed + 1);
  std::vector<Point> points{x, y};
  const Eigen::MatrixXd a = build_gram(e, points, eps);
  Eigen::VectorXd c(2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  c << inv_sqrt2, (parity == Parity::Even ? -inv_sqrt2 : inv_sqrt2);
  return Degeneracy{std::move(points), {}, c, quadratic_form(a, c),
                    1e-10 * e.sum_at_one(eps)};
}

Degeneracy roots_of_unity_degeneracy(const KernelExpansion& e, const ArithmeticProgression& ap,
                                     double eps) {
  if (e.space().family != Family::Circle)
    throw UnsupportedSpace("roots_of_unity_degeneracy applies to the circle");
  if (ap.modulus < 2 || ap.residue < 0 || ap.residue >= ap.modulus)
    throw InvalidArgument("roots_of_unity_degeneracy: invalid progression witness");
  if (ap.modulus > kConstructionCap)
    throw CapExceeded("roots_of_unity_degeneracy: witness modulus exceeds the cap");

  // Revalidate the witness: any support index congruent to +-residue mod n
  // would break the cancellation.
  const SupportDescriptor sup = e.support();
  const auto hits_witness = [&](long k) {
    const long r = k % ap.modulus;
    return r == ap.residue || (ap.modulus - r) % ap.modulus == ap.residue;
  };
  const auto reject = [] {
    throw InvalidArgument("roots_of_unity_degeneracy: support meets the claimed progression");
  };
  if (sup.kind() == SupportDescriptor::Kind::Finite) {
    for (long k : sup.finite_indices())
      if (hits_witness(k)) reject();
  } else {
    for (long k : sup.added())
      if (hits_witness(k)) reject();
    // A progression mZ+r contributes a hit iff the congruence pair
    // (k = r mod m, k = +-j mod n) is solvable; finite removals cannot
    // empty the solution set.
    for (const ArithmeticProgression& s : sup.progressions()) {
      const long g = std::gcd(s.modulus, ap.modulus);
      for (long sign : {1L, -1L})
        if ((s.residue - sign * ap.residue) % g == 0) reject();
    }
  }

  const long n = ap.modulus;
  std::vector<Point> points;
  std::vector<double> angles;
  Eigen::VectorXd c(n);
  for (long u = 1; u <= n; ++u) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(u) / static_cast<double>(n);
    angles.push_back(theta);
    points.push_back(embed_circle(e.space(), theta));
    c(u - 1) = std::cos(2.0 * std::numbers::pi * static_cast<double>(u) *
                        static_cast<double>(ap.residue) / static_cast<double>(n));
  }
  c.normalize();
  const Eigen::MatrixXd a = build_gram(e, points, eps);
  const double sum_coeff = e.sum_at_one(eps);
  return Degeneracy{std::move(points), std::move(angles), c, quadratic_form(a, c),
                    1e-9 * static_cast<double>(n) * static_cast<double>(n) * sum_coeff};
}

GramReport empirical_strictness_probe(const KernelExpansion& e, int n, std::uint64_t seed,
                                      double eps) {
  if (n < 1 || n > 64) throw InvalidArgument("probe size must lie in [1, 64]");
  const std::vector<Point> pts = random_points(e.space(), n, seed);
  return psd_report(build_gram(e, pts, eps), 1e-10);
}

int numerical_rank(const Eigen::MatrixXd& a, double rel_tol) {
  const auto solver = solve_symmetric(a);
  const double cutoff = rel_tol * std::max(solver.eigenvalues().cwiseAbs().maxCoeff(), 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (solver.eigenvalues()(i) > cutoff) ++rank;
  return rank;
}

}  // namespace zonal
