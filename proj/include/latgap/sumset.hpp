#pragma once

#include "latgap/point.hpp"

namespace latgap {

// Exact Minkowski sum {x + y : x in a, y in b}, deduplicated.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

struct DoublingReport {
  long long size_a = 0;
  long long size_aa = 0;
  Rat doubling;  // size_aa / size_a, exact
};

// Throws std::invalid_argument("empty set has no doubling factor") for empty input.
DoublingReport doubling_factor(const PointSet& a);

// Translate every point by t.
PointSet translate(const PointSet& a, const Point& t);

}  // namespace latgap
