#include "latgap/point.hpp"

#include <algorithm>
#include <stdexcept>

namespace latgap {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Point operator-(const Point& a) {
  Point r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

Point operator*(const Rat& s, const Point& a) {
  Point r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

Rat dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Rat s(0);
  for (int i = 0; i < a.dim(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

Rat norm_sq(const Point& a) { return dot(a, a); }

bool lex_less(const Point& a, const Point& b) {
  require_same_dim(a, b);
  for (int i = 0; i < a.dim(); ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

PointSet::PointSet(int dim) : dim_(dim), den_(1) {
  if (dim < 1) throw std::invalid_argument("PointSet dimension must be >= 1");
}

std::uint64_t PointSet::hash_row(const Int* coords) const {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (int i = 0; i < dim_; ++i) h = hash_int(coords[i], h);
  return h;
}

bool PointSet::row_equal(std::size_t i, const Int* coords) const {
  const Int* r = row(i);
  for (int k = 0; k < dim_; ++k) {
    if (cmp(r[k], coords[k]) != 0) return false;
  }
  return true;
}

void PointSet::rescale_to(const Int& d) {
  Int g;
  mpz_lcm(g.get_mpz_t(), den_.get_mpz_t(), d.get_mpz_t());
  if (g == den_) return;
  Int f = g / den_;
  for (auto& v : flat_) v *= f;
  den_ = g;
  // Hashes change with the representation; rebuild the index.
  buckets_.clear();
  for (std::size_t i = 0; i < count_; ++i) {
    buckets_[hash_row(row(i))].push_back(static_cast<std::uint32_t>(i));
  }
}

bool PointSet::insert_row(const Int* coords) {
  std::uint64_t h = hash_row(coords);
  auto& bucket = buckets_[h];
  for (std::uint32_t idx : bucket) {
    if (row_equal(idx, coords)) return false;
  }
  bucket.push_back(static_cast<std::uint32_t>(count_));
  for (int k = 0; k < dim_; ++k) flat_.push_back(coords[k]);
  ++count_;
  return true;
}

void PointSet::reserve(std::size_t n) {
  flat_.reserve(n * dim_);
  buckets_.reserve(n * 2);
}

bool PointSet::insert(const Point& p) {
  if (p.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  Int need(1);
  for (const auto& c : p.coords) {
    mpz_lcm(need.get_mpz_t(), need.get_mpz_t(), c.get_den().get_mpz_t());
  }
  rescale_to(need);
  std::vector<Int> coords(dim_);
  for (int i = 0; i < dim_; ++i) {
    Rat scaled = p.coords[i] * Rat(den_);
    coords[i] = scaled.get_num();  // exact: den_ is a multiple of the coordinate denominator
  }
  return insert_row(coords.data());
}

bool PointSet::contains(const Point& p) const {
  if (p.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  std::vector<Int> coords(dim_);
  for (int i = 0; i < dim_; ++i) {
    Rat scaled = p.coords[i] * Rat(den_);
    if (scaled.get_den() != 1) return false;
    coords[i] = scaled.get_num();
  }
  std::uint64_t h = hash_row(coords.data());
  auto it = buckets_.find(h);
  if (it == buckets_.end()) return false;
  for (std::uint32_t idx : it->second) {
    if (row_equal(idx, coords.data())) return true;
  }
  return false;
}

Point PointSet::at(std::size_t i) const {
  Point p;
  p.coords.resize(dim_);
  const Int* r = row(i);
  for (int k = 0; k < dim_; ++k) {
    Rat q(r[k], den_);
    q.canonicalize();
    p.coords[k] = q;
  }
  return p;
}

std::vector<std::size_t> PointSet::sorted_order() const {
  std::vector<std::size_t> order(count_);
  for (std::size_t i = 0; i < count_; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    const Int* ra = row(a);
    const Int* rb = row(b);
    for (int k = 0; k < dim_; ++k) {
      int c = cmp(ra[k], rb[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return order;
}

std::vector<Point> PointSet::sorted_points() const {
  std::vector<Point> pts;
  pts.reserve(count_);
  for (std::size_t i : sorted_order()) pts.push_back(at(i));
  return pts;
}

bool PointSet::set_equal(const PointSet& o) const {
  if (dim_ != o.dim_ || count_ != o.count_) return false;
  for (std::size_t i = 0; i < count_; ++i) {
    if (!o.contains(at(i))) return false;
  }
  return true;
}

PointSet make_point_set(int dim, const std::vector<Point>& pts) {
  PointSet s(dim);
  for (const auto& p : pts) s.insert(p);
  return s;
}

}  // namespace latgap
