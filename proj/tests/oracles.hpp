#pragma once

// Brute-force reference implementations used to cross-check the library.
// These deliberately avoid the library's enumeration, membership and sumset
// code paths: coefficient boxes come from dual-norm bounds, membership from a
// phase-1 simplex, and deduplication from ordered containers keyed by exact
// coordinate strings.

#include <set>
#include <string>
#include <vector>

#include "latgap/enumerate.hpp"
#include "latgap/gap.hpp"
#include "latgap/lattice.hpp"
#include "latgap/point.hpp"

namespace oracle {

using latgap::Ball;
using latgap::Gap;
using latgap::Int;
using latgap::LatticeBasis;
using latgap::Point;
using latgap::PointSet;
using latgap::Rat;
using latgap::VPolytope;

// Canonical string key of a rational vector.
std::string key_of(const std::vector<Rat>& coords);
std::string key_of(const Point& p);

// Lattice points with ||p - center||^2 <= radius_sq by exhaustive search over
// the exact coefficient box implied by dual-norm bounds.  Throws if the box
// exceeds max_candidates.
std::vector<Point> points_in_ball(const LatticeBasis& basis, const Ball& ball,
                                  long long max_candidates = 2'000'000);

// Integer points in conv(vertices) via bounding box and exact phase-1 simplex
// feasibility of {lambda >= 0, V lambda = p, sum lambda = 1}.
std::vector<Point> integer_points_in_polytope(const VPolytope& poly,
                                              long long max_candidates = 2'000'000);

// Is p a convex combination of the given points?  Exact simplex.
bool in_convex_hull(const std::vector<Point>& vertices, const Point& p);

// Pairwise sums, deduplicated through an ordered set of coordinate keys.
std::vector<Point> minkowski_sum(const std::vector<Point>& a, const std::vector<Point>& b);

// Distinct GAP points by direct odometer evaluation.
std::vector<Point> gap_points(const Gap& g);

// |a intersect g| by enumerating the GAP and matching keys.
long long intersect_count(const std::vector<Point>& a, const Gap& g);

std::vector<Point> to_points(const PointSet& s);
std::set<std::string> key_set(const std::vector<Point>& pts);

}  // namespace oracle
