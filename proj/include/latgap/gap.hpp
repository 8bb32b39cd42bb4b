#pragma once

#include <functional>
#include <vector>

#include "latgap/point.hpp"

namespace latgap {

// Generalized arithmetic progression: points x0 + sum_i alpha_i * gen_i with
// integer alpha_i in [lo_i, hi_i].
struct Gap {
  Point x0;
  std::vector<Point> gens;
  std::vector<long long> lo;
  std::vector<long long> hi;

  int dim() const { return static_cast<int>(gens.size()); }  // d
  int ambient_dim() const { return x0.dim(); }
};

Gap make_gap(Point x0, std::vector<Point> gens, std::vector<long long> lo,
             std::vector<long long> hi);

constexpr long long kDefaultGapCap = 10'000'000;

// Multiset size: product of (hi_i - lo_i + 1); 1 for d = 0.
Int gap_size_multiset(const Gap& g);

// The set of distinct points; throws std::runtime_error("GAP too large to
// enumerate") when the multiset size exceeds cap.
PointSet gap_points(const Gap& g, long long cap = kDefaultGapCap);

// |a intersect points(g)| counting distinct points.  Uses exact integer
// feasibility per point of a when the generators have full column rank, and
// falls back to enumeration (subject to cap) otherwise.
long long intersect_count(const PointSet& a, const Gap& g, long long cap = kDefaultGapCap);

// Exact membership of one point.
bool gap_contains(const Gap& g, const Point& p, long long cap = kDefaultGapCap);

// Permutes dimensions so that hi_i - lo_i is non-increasing (stable on ties).
Gap sort_dims_nonincreasing(const Gap& g);

// Fixes dimensions fixed_from..d (1-indexed) at the integers t, leaving a
// GAP of dimension fixed_from - 1.  fixed_from may be d + 1 with empty t,
// which returns g unchanged.
Gap restrict_gap(const Gap& g, int fixed_from, const std::vector<long long>& t);

// Iterates the whole restriction family over the box of dimensions cut..d.
void for_each_restriction(
    const Gap& g, int cut,
    const std::function<void(const std::vector<long long>&, const Gap&)>& fn);

// GAP written as phi(Z^d intersect box) + shift with a symmetric box.
struct GapLatticeImage {
  int lattice_dim = 0;
  std::vector<Rat> box_halfwidths;
  std::vector<Point> phi_columns;
  Point shift;
};

// Requires every side length hi_i - lo_i to be even; throws
// std::invalid_argument("conversion requires even side lengths") otherwise.
GapLatticeImage gap_as_lattice_image(const Gap& g);

// phi(Z^d intersect box) + shift, for round-trip verification.
PointSet gap_image_points(const GapLatticeImage& img, long long cap = kDefaultGapCap);

}  // namespace latgap
