#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "latgap/rational.hpp"

namespace latgap {

// A point of R^n with exact rational coordinates.
struct Point {
  std::vector<Rat> coords;

  Point() = default;
  explicit Point(std::vector<Rat> c) : coords(std::move(c)) {}
  static Point zero(int dim) { return Point(std::vector<Rat>(dim, Rat(0))); }

  int dim() const { return static_cast<int>(coords.size()); }
  const Rat& operator[](int i) const { return coords[i]; }
  Rat& operator[](int i) { return coords[i]; }

  bool operator==(const Point& o) const { return coords == o.coords; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

void require_same_dim(const Point& a, const Point& b);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(const Rat& s, const Point& a);

Rat dot(const Point& a, const Point& b);
Rat norm_sq(const Point& a);

// Lexicographic order on coordinates; total and exact.
bool lex_less(const Point& a, const Point& b);

// Deduplicated finite set of points sharing an ambient dimension.  Stored as
// integer coordinate rows over one common denominator so that bulk operations
// (sumsets, enumeration output) stay in integer arithmetic.
class PointSet {
 public:
  explicit PointSet(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  // Returns true if the point was newly inserted.
  bool insert(const Point& p);
  bool contains(const Point& p) const;

  Point at(std::size_t i) const;  // insertion order

  // Indices sorted by lexicographic coordinate order (canonical output order).
  std::vector<std::size_t> sorted_order() const;
  std::vector<Point> sorted_points() const;

  bool set_equal(const PointSet& o) const;

  // Raw access for integer fast paths.  Row i holds dim() numerators over den().
  const Int& den() const { return den_; }
  const Int* row(std::size_t i) const { return &flat_[i * dim_]; }
  // Rescales the common denominator to a multiple of d.
  void rescale_to(const Int& d);
  // Inserts a numerator row already expressed over den(); returns true if new.
  bool insert_row(const Int* coords);
  void reserve(std::size_t n);

 private:
  std::uint64_t hash_row(const Int* coords) const;
  bool row_equal(std::size_t i, const Int* coords) const;

  int dim_;
  Int den_;
  std::size_t count_ = 0;
  std::vector<Int> flat_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

PointSet make_point_set(int dim, const std::vector<Point>& pts);

}  // namespace latgap
