#pragma once

#include <functional>
#include <vector>

#include "latgap/lattice.hpp"
#include "latgap/point.hpp"

namespace latgap {

// Closed Euclidean ball; the squared radius is stored exactly.
struct Ball {
  Rat radius_sq;
  Point center;

  int dim() const { return center.dim(); }

  static Ball origin(int dim, const Rat& radius) {
    if (radius <= 0) throw std::invalid_argument("ball radius must be positive");
    return Ball{radius * radius, Point::zero(dim)};
  }
  static Ball origin_r2(int dim, const Rat& radius_sq) {
    if (radius_sq <= 0) throw std::invalid_argument("ball radius must be positive");
    return Ball{radius_sq, Point::zero(dim)};
  }
};

// Convex polytope given by its vertices.
struct VPolytope {
  std::vector<Point> vertices;

  int dim() const { return vertices.empty() ? 0 : vertices[0].dim(); }
};

VPolytope make_polytope(std::vector<Point> vertices);

// Exact membership test for conv(vertices): affine-hull equalities plus the
// facet system of the projected full-dimensional hull, all precomputed in
// integer arithmetic.
class PolytopeMembership {
 public:
  explicit PolytopeMembership(const VPolytope& poly);

  bool contains(const Point& p) const;
  // Fast path for integer candidates.
  bool contains_integer(const IntVec& p) const;

 private:
  int dim_;
  Point base_;
  // rows (a, b) meaning a . x == b and a . x <= b respectively, in the
  // original coordinates, with integer entries.
  std::vector<std::pair<IntVec, Int>> equalities_;
  std::vector<std::pair<IntVec, Int>> facets_;
};

// All lattice points p with ||p - center||^2 <= radius_sq, exactly.
// The basis is LLL-reduced internally; recursion bounds are seeded from
// doubles and corrected against exact rational predicates, so no point is
// missed and none is spurious.
PointSet points_in_ball(const LatticeBasis& basis, const Ball& ball);
long long count_points_in_ball(const LatticeBasis& basis, const Ball& ball);

// Core visitor: calls fn once per lattice point inside the ball, with the
// coefficient vector relative to the (already reduced) basis it enumerates.
void for_each_point_in_ball(const LatticeBasis& basis, const Ball& ball,
                            const std::function<void(const IntVec&)>& fn);

// All integer points in the convex hull of the vertices (closed).
PointSet integer_points_in_polytope(const VPolytope& poly);

// All lattice points in the polytope (candidates from a circumscribed ball).
PointSet lattice_points_in_polytope(const LatticeBasis& basis, const VPolytope& poly);

// Volume of the n-ball of radius r, relative accuracy well under 1e-12.
double ball_volume(int n, double r);
double ball_volume_r2(int n, const Rat& radius_sq);

struct ShortestVector {
  Rat norm_sq;
  Point vec;
};

// Exact shortest nonzero vector by full enumeration inside the LLL bound.
ShortestVector shortest_vector(const LatticeBasis& basis);

}  // namespace latgap
