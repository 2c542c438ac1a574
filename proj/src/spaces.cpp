#include "zonal/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;

  Quat conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }

  Quat operator*(const Quat& r) const {
    return {w * r.w - x * r.x - y * r.y - z * r.z, w * r.x + x * r.w + y * r.z - z * r.y,
            w * r.y - x * r.z + y * r.w + z * r.x, w * r.z + x * r.y - y * r.x + z * r.w};
  }
  Quat operator+(const Quat& r) const { return {w + r.w, x + r.x, y + r.y, z + r.z}; }
  Quat operator-(const Quat& r) const { return {w - r.w, x - r.x, y - r.y, z - r.z}; }
  Quat scaled(double s) const { return {w * s, x * s, y * s, z * s}; }
};

Quat quat_at(const std::vector<double>& c, size_t i) {
  return {c[4 * i], c[4 * i + 1], c[4 * i + 2], c[4 * i + 3]};
}

void set_quat(std::vector<double>& c, size_t i, const Quat& q) {
  c[4 * i] = q.w;
  c[4 * i + 1] = q.x;
  c[4 * i + 2] = q.y;
  c[4 * i + 3] = q.z;
}

std::complex<double> cplx_at(const std::vector<double>& c, size_t i) {
  return {c[2 * i], c[2 * i + 1]};
}

void set_cplx(std::vector<double>& c, size_t i, std::complex<double> v) {
  c[2 * i] = v.real();
  c[2 * i + 1] = v.imag();
}

double sq_norm(const std::vector<double>& c) {
  double s = 0;
  for (double v : c) s += v * v;
  return s;
}

void require_model(const Space& s, const char* op) {
  if (!s.has_point_model())
    throw UnsupportedSpace(std::string(op) + ": the Cayley plane has no point model");
}

void require_unit(const Point& p) {
  if (p.space.family == Family::Circle) return;
  if (std::fabs(sq_norm(p.coords) - 1.0) > 1e-9)
    throw InvalidArgument("point coordinates are not unit norm");
}

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

// Complex hermitian inner product sum conj(x_i) y_i.
std::complex<double> herm_inner(const std::vector<double>& a, const std::vector<double>& b) {
  std::complex<double> s = 0;
  for (size_t i = 0; i < a.size() / 2; ++i) s += std::conj(cplx_at(a, i)) * cplx_at(b, i);
  return s;
}

Quat quat_inner(const std::vector<double>& a, const std::vector<double>& b) {
  Quat s;
  for (size_t i = 0; i < a.size() / 4; ++i) s = s + quat_at(a, i).conj() * quat_at(b, i);
  return s;
}

double clamp_unit(double t) { return std::clamp(t, -1.0, 1.0); }

std::vector<double> gaussian_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(static_cast<size_t>(n));
  for (double& c : v) c = gauss(rng);
  return v;
}

void normalize(std::vector<double>& v) {
  double n = std::sqrt(sq_norm(v));
  if (n < 1e-12) throw InvalidArgument("cannot normalize a near-zero vector");
  for (double& c : v) c /= n;
}

Point random_point_impl(const Space& s, std::mt19937_64& rng) {
  require_model(s, "random_point");
  if (s.family == Family::Circle) {
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    return Point{s, {uni(rng)}};
  }
  std::vector<double> v = gaussian_vector(rng, s.coordinate_count());
  normalize(v);
  return canonicalize(Point{s, std::move(v)});
}

Point antipodal_impl(const Space& s, const Point& x, std::mt19937_64& rng) {
  if (s.family == Family::Sphere) {
    std::vector<double> v = x.coords;
    for (double& c : v) c = -c;
    return Point{s, std::move(v)};
  }
  // Projective families: any unit representative orthogonal to x gives t = -1.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> v = gaussian_vector(rng, s.coordinate_count());
    if (s.family == Family::RealProjective) {
      double ip = 0;
      for (size_t i = 0; i < v.size(); ++i) ip += x.coords[i] * v[i];
      for (size_t i = 0; i < v.size(); ++i) v[i] -= ip * x.coords[i];
    } else if (s.family == Family::ComplexProjective) {
      const std::complex<double> ip = herm_inner(x.coords, v);
      for (size_t i = 0; i < v.size() / 2; ++i)
        set_cplx(v, i, cplx_at(v, i) - cplx_at(x.coords, i) * ip);
    } else {
      const Quat ip = quat_inner(x.coords, v);
      for (size_t i = 0; i < v.size() / 4; ++i)
        set_quat(v, i, quat_at(v, i) - quat_at(x.coords, i) * ip);
    }
    if (sq_norm(v) > 1e-12) {
      normalize(v);
      return canonicalize(Point{s, std::move(v)});
    }
  }
  throw Error("antipodal_sample: failed to draw an orthogonal direction");
}

}  // namespace

Space::Space(Family f, int d) : family(f), dim(d) {
  bool ok = false;
  switch (f) {
    case Family::Circle:
      ok = (d == 1);
      break;
    case Family::Sphere:
    case Family::RealProjective:
      ok = (d >= 2);
      break;
    case Family::ComplexProjective:
      ok = (d >= 4 && d % 2 == 0);
      break;
    case Family::QuaternionProjective:
      ok = (d >= 8 && d % 4 == 0);
      break;
    case Family::CayleyPlane:
      ok = (d == 16);
      break;
  }
  if (!ok)
    throw InvalidArgument("invalid dimension " + std::to_string(d) + " for family " +
                          family_name(f));
}

JacobiParams Space::params() const {
  const double alpha = (dim - 2) / 2.0;
  switch (family) {
    case Family::Circle:
    case Family::Sphere:
      return JacobiParams(alpha, alpha);
    case Family::RealProjective:
      return JacobiParams(alpha, -0.5);
    case Family::ComplexProjective:
      return JacobiParams(alpha, 0.0);
    case Family::QuaternionProjective:
      return JacobiParams(alpha, 1.0);
    case Family::CayleyPlane:
      return JacobiParams(alpha, 3.0);
  }
  throw InvalidArgument("unknown family");
}

int Space::coordinate_count() const {
  switch (family) {
    case Family::Circle:
      return 1;
    case Family::Sphere:
    case Family::RealProjective:
      return dim + 1;
    case Family::ComplexProjective:
      return 2 * (dim / 2 + 1);
    case Family::QuaternionProjective:
      return 4 * (dim / 4 + 1);
    case Family::CayleyPlane:
      throw UnsupportedSpace("the Cayley plane has no point model");
  }
  throw InvalidArgument("unknown family");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Circle:
      return "circle";
    case Family::Sphere:
      return "sphere";
    case Family::RealProjective:
      return "real_projective";
    case Family::ComplexProjective:
      return "complex_projective";
    case Family::QuaternionProjective:
      return "quaternion_projective";
    case Family::CayleyPlane:
      return "cayley";
  }
  return "unknown";
}

Family family_from_name(const std::string& name) {
  if (name == "circle") return Family::Circle;
  if (name == "sphere") return Family::Sphere;
  if (name == "real_projective") return Family::RealProjective;
  if (name == "complex_projective") return Family::ComplexProjective;
  if (name == "quaternion_projective") return Family::QuaternionProjective;
  if (name == "cayley") return Family::CayleyPlane;
  throw InvalidArgument("unknown space family '" + name + "'");
}

Point canonicalize(const Point& x) {
  require_model(x.space, "canonicalize");
  Point out = x;
  auto& c = out.coords;
  switch (x.space.family) {
    case Family::Circle:
      c[0] = reduce_angle(c[0]);
      return out;
    case Family::Sphere:
      normalize(c);
      return out;
    case Family::RealProjective: {
      normalize(c);
      for (double v : c) {
        if (std::fabs(v) > 1e-9) {
          if (v < 0)
            for (double& w : c) w = -w;
          break;
        }
      }
      return out;
    }
    case Family::ComplexProjective: {
      normalize(c);
      for (size_t i = 0; i < c.size() / 2; ++i) {
        const std::complex<double> v = cplx_at(c, i);
        if (std::abs(v) > 1e-9) {
          const std::complex<double> phase = std::conj(v) / std::abs(v);
          for (size_t j = 0; j < c.size() / 2; ++j) set_cplx(c, j, cplx_at(c, j) * phase);
          break;
        }
      }
      return out;
    }
    case Family::QuaternionProjective: {
      normalize(c);
      for (size_t i = 0; i < c.size() / 4; ++i) {
        const Quat v = quat_at(c, i);
        if (v.norm2() > 1e-18) {
          const Quat q = v.conj().scaled(1.0 / std::sqrt(v.norm2()));
          for (size_t j = 0; j < c.size() / 4; ++j) set_quat(c, j, quat_at(c, j) * q);
          break;
        }
      }
      return out;
    }
    case Family::CayleyPlane:
      break;
  }
  throw UnsupportedSpace("canonicalize: no point model");
}

Point make_point(const Space& s, std::vector<double> coords) {
  require_model(s, "make_point");
  if (static_cast<int>(coords.size()) != s.coordinate_count())
    throw InvalidArgument("expected " + std::to_string(s.coordinate_count()) +
                          " coordinates, got " + std::to_string(coords.size()));
  Point p{s, std::move(coords)};
  if (s.family != Family::Circle && std::fabs(sq_norm(p.coords) - 1.0) > 1e-9)
    throw InvalidArgument("point coordinates must be unit norm");
  return canonicalize(p);
}

double zonal_argument(const Space& s, const Point& x, const Point& y) {
  require_model(s, "zonal_argument");
  if (x.space != s || y.space != s)
    throw InvalidArgument("zonal_argument: points do not belong to the given space");
  require_unit(x);
  require_unit(y);
  switch (s.family) {
    case Family::Circle:
      return std::cos(x.coords[0] - y.coords[0]);
    case Family::Sphere: {
      double ip = 0;
      for (size_t i = 0; i < x.coords.size(); ++i) ip += x.coords[i] * y.coords[i];
      return clamp_unit(ip);
    }
    case Family::RealProjective: {
      double ip = 0;
      for (size_t i = 0; i < x.coords.size(); ++i) ip += x.coords[i] * y.coords[i];
      return clamp_unit(2.0 * ip * ip - 1.0);
    }
    case Family::ComplexProjective: {
      const double m = std::abs(herm_inner(x.coords, y.coords));
      return clamp_unit(2.0 * m * m - 1.0);
    }
    case Family::QuaternionProjective: {
      const double m2 = quat_inner(x.coords, y.coords).norm2();
      return clamp_unit(2.0 * m2 - 1.0);
    }
    case Family::CayleyPlane:
      break;
  }
  throw UnsupportedSpace("zonal_argument: no point model");
}

Point embed_circle(const Space& s, double theta) {
  require_model(s, "embed_circle");
  const double th = reduce_angle(theta);
  if (s.family == Family::Circle) return Point{s, {th}};
  std::vector<double> c(static_cast<size_t>(s.coordinate_count()), 0.0);
  if (s.family == Family::Sphere) {
    c[0] = std::cos(th);
    c[1] = std::sin(th);
    return canonicalize(Point{s, std::move(c)});
  }
  // Projective families: the model squares the inner product, so the great
  // circle is traversed at half speed.
  const double half = th / 2.0;
  switch (s.family) {
    case Family::RealProjective:
      c[0] = std::cos(half);
      c[1] = std::sin(half);
      break;
    case Family::ComplexProjective:
      c[0] = std::cos(half);
      c[2] = std::sin(half);
      break;
    case Family::QuaternionProjective:
      c[0] = std::cos(half);
      c[4] = std::sin(half);
      break;
    default:
      throw UnsupportedSpace("embed_circle: no point model");
  }
  return canonicalize(Point{s, std::move(c)});
}

Point antipodal_sample(const Space& s, const Point& x, std::uint64_t seed) {
  require_model(s, "antipodal_sample");
  if (s.family == Family::Circle)
    throw UnsupportedSpace("antipodal_sample: not defined on the circle");
  if (x.space != s) throw InvalidArgument("antipodal_sample: point not on the given space");
  require_unit(x);
  std::mt19937_64 rng(seed);
  return antipodal_impl(s, x, rng);
}

Point random_point(const Space& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_point_impl(s, rng);
}

std::vector<Point> random_points(const Space& s, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  int guard = 0;
  while (static_cast<int>(pts.size()) < n) {
    Point p = random_point_impl(s, rng);
    const bool dup = std::any_of(pts.begin(), pts.end(),
                                 [&](const Point& q) { return same_point(p, q); });
    if (!dup)
      pts.push_back(std::move(p));
    else if (++guard > 1000)
      throw Error("random_points: could not draw distinct points");
  }
  return pts;
}

bool same_point(const Point& x, const Point& y, double tol) {
  if (x.space != y.space) return false;
  return zonal_argument(x.space, x, y) >= 1.0 - tol;
}

std::vector<Space> catalog_spaces() {
  std::vector<Space> out;
  out.push_back(Space::circle());
  for (int d = 2; d <= 5; ++d) out.push_back(Space::sphere(d));
  for (int d = 2; d <= 5; ++d) out.push_back(Space::real_projective(d));
  for (int d = 4; d <= 8; d += 2) out.push_back(Space::complex_projective(d));
  for (int d = 8; d <= 12; d += 4) out.push_back(Space::quaternion_projective(d));
  out.push_back(Space::cayley_plane());
  return out;
}

std::vector<JacobiParams> catalog_params() {
  std::vector<JacobiParams> out;
  for (const Space& s : catalog_spaces()) {
    const JacobiParams p = s.params();
    const bool seen = std::any_of(out.begin(), out.end(), [&](const JacobiParams& q) {
      return q.alpha == p.alpha && q.beta == p.beta;
    });
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace zonal
