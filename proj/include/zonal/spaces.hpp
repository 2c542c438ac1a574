#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zonal/jacobi.hpp"

namespace zonal {

enum class Family {
  Circle,
  Sphere,
  RealProjective,
  ComplexProjective,
  QuaternionProjective,
  CayleyPlane,
};

/// A compact two-point homogeneous space: family plus real dimension.
/// Admissible dimensions: Circle d=1, Sphere d>=2, RealProjective d>=2,
/// ComplexProjective d in {4,6,8,...}, QuaternionProjective d in {8,12,...},
/// CayleyPlane d=16.
struct Space {
  Family family;
  int dim;

  Space(Family f, int d);

  static Space circle() { return Space(Family::Circle, 1); }
  static Space sphere(int d) { return Space(Family::Sphere, d); }
  static Space real_projective(int d) { return Space(Family::RealProjective, d); }
  static Space complex_projective(int d) { return Space(Family::ComplexProjective, d); }
  static Space quaternion_projective(int d) { return Space(Family::QuaternionProjective, d); }
  static Space cayley_plane() { return Space(Family::CayleyPlane, 16); }

  /// alpha = (d-2)/2; beta per family.
  JacobiParams params() const;

  /// The Cayley plane is catalog-only: no coordinate model.
  bool has_point_model() const { return family != Family::CayleyPlane; }

  /// Number of stored real coordinates per point.
  int coordinate_count() const;

  bool operator==(const Space& other) const = default;
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Point of a space in its concrete coordinate model. Coordinates are flat
/// doubles: Circle stores one angle; Sphere/RealProjective d+1 reals;
/// ComplexProjective d/2+1 (re,im) pairs; QuaternionProjective d/4+1
/// (w,x,y,z) quadruples.
struct Point {
  Space space;
  std::vector<double> coords;
};

/// Canonical representative: unit norm, first nonzero coordinate positive
/// real (sign flip, global phase, or right unit quaternion as appropriate).
/// Circle angles are reduced to [0, 2*pi).
Point canonicalize(const Point& x);

/// Builds a point from raw coordinates, validating length and unit norm,
/// and canonicalizes it.
Point make_point(const Space& s, std::vector<double> coords);

/// The scalar t = cos(|xy|/2) through which every isotropic kernel acts:
/// Circle cos(theta_x - theta_y); Sphere <x,y>; RealProjective 2<x,y>^2 - 1;
/// Complex/QuaternionProjective 2|<x,y>|^2 - 1. Equals 1 iff x = y in the
/// space, -1 exactly on the antipodal manifold.
double zonal_argument(const Space& s, const Point& x, const Point& y);

/// Isometric circle embedding: theta maps to a point with
/// zonal_argument(embed(t1), embed(t2)) = cos(t1 - t2).
Point embed_circle(const Space& s, double theta);

/// A point y with zonal_argument(x, y) = -1. Unique (-x) on spheres; a
/// seeded random orthogonal representative on projective spaces.
Point antipodal_sample(const Space& s, const Point& x, std::uint64_t seed);

/// Seeded uniform random point (normalized Gaussian coordinates).
Point random_point(const Space& s, std::uint64_t seed);

/// n pairwise distinct seeded random points.
std::vector<Point> random_points(const Space& s, int n, std::uint64_t seed);

/// Equality as points of the space (representative-invariant).
bool same_point(const Point& x, const Point& y, double tol = 1e-9);

/// Every space family/dimension combination exercised by the test suites.
std::vector<Space> catalog_spaces();

/// The distinct (alpha, beta) pairs of catalog_spaces().
std::vector<JacobiParams> catalog_params();

}  // namespace zonal
