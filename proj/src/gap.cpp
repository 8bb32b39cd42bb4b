#include "latgap/gap.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "latgap/matq.hpp"

namespace latgap {

Gap make_gap(Point x0, std::vector<Point> gens, std::vector<long long> lo,
             std::vector<long long> hi) {
  std::size_t d = gens.size();
  if (lo.size() != d || hi.size() != d) throw std::invalid_argument("GAP bound lists must match dimension");
  for (const auto& g : gens) {
    if (g.dim() != x0.dim()) throw std::invalid_argument("dimension mismatch");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("GAP bounds require lo <= hi");
  }
  return Gap{std::move(x0), std::move(gens), std::move(lo), std::move(hi)};
}

Int gap_size_multiset(const Gap& g) {
  Int size(1);
  for (int i = 0; i < g.dim(); ++i) {
    size *= int_of(g.hi[i] - g.lo[i] + 1);
  }
  return size;
}

namespace {

void require_within_cap(const Gap& g, long long cap) {
  if (gap_size_multiset(g) > int_of(cap)) throw std::runtime_error("GAP too large to enumerate");
}

// Odometer over the coefficient box with incremental point updates.
void for_each_gap_point(const Gap& g, const std::function<void(const IntVec&)>& fn,
                        const IntVec& base, const std::vector<IntVec>& gen_num) {
  int d = g.dim();
  int n = g.ambient_dim();
  std::vector<long long> alpha(d);
  IntVec row = base;
  for (int i = 0; i < d; ++i) {
    alpha[i] = g.lo[i];
    if (g.lo[i] != 0) {
      for (int k = 0; k < n; ++k) row[k] += int_of(g.lo[i]) * gen_num[i][k];
    }
  }
  for (;;) {
    fn(row);
    int i = 0;
    while (i < d) {
      if (alpha[i] < g.hi[i]) {
        ++alpha[i];
        for (int k = 0; k < n; ++k) row[k] += gen_num[i][k];
        break;
      }
      Int span = int_of(g.hi[i] - g.lo[i]);
      alpha[i] = g.lo[i];
      for (int k = 0; k < n; ++k) row[k] -= span * gen_num[i][k];
      ++i;
    }
    if (i == d) break;
  }
}

struct ScaledGap {
  Int den;
  IntVec base;
  std::vector<IntVec> gen_num;
};

ScaledGap scale_gap(const Gap& g) {
  int d = g.dim();
  int n = g.ambient_dim();
  ScaledGap s;
  s.den = 1;
  for (const auto& q : g.x0.coords) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), q.get_den().get_mpz_t());
  for (const auto& gen : g.gens)
    for (const auto& q : gen.coords) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), q.get_den().get_mpz_t());
  s.base.resize(n);
  for (int k = 0; k < n; ++k) s.base[k] = Rat(g.x0[k] * Rat(s.den)).get_num();
  s.gen_num.assign(d, IntVec(n));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < n; ++k) s.gen_num[i][k] = Rat(g.gens[i][k] * Rat(s.den)).get_num();
  return s;
}

// Exact integer-feasibility membership when the generators have full column
// rank: solve for the unique rational coefficient vector and check bounds.
class FullRankMembership {
 public:
  explicit FullRankMembership(const Gap& g) : g_(&g) {
    int n = g.ambient_dim();
    int d = g.dim();
    RatMat x(n, RatVec(d));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) x[i][j] = g.gens[j][i];
    // Pivot rows: d independent rows of the generator matrix.
    RatMat a = x;
    row_index_.resize(n);
    std::iota(row_index_.begin(), row_index_.end(), 0);
    int prow = 0;
    for (int col = 0; col < d && prow < n; ++col) {
      int sel = -1;
      for (int i = prow; i < n; ++i)
        if (a[i][col] != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      std::swap(a[prow], a[sel]);
      std::swap(row_index_[prow], row_index_[sel]);
      Rat inv = 1 / a[prow][col];
      for (int j = col; j < d; ++j) a[prow][j] *= inv;
      for (int i = 0; i < n; ++i) {
        if (i == prow || a[i][col] == 0) continue;
        Rat f = a[i][col];
        for (int j = col; j < d; ++j) a[i][j] -= f * a[prow][j];
      }
      ++prow;
    }
    ok_ = (prow == d);
    if (!ok_) return;
    // Inverse of the pivot-row square submatrix.
    RatMat sq(d, RatVec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) sq[i][j] = x[row_index_[i]][j];
    inv_ = inverse(sq);
  }

  bool full_rank() const { return ok_; }

  bool contains(const Point& p) const {
    const Gap& g = *g_;
    int n = g.ambient_dim();
    int d = g.dim();
    RatVec rhs(d);
    for (int i = 0; i < d; ++i) rhs[i] = p[row_index_[i]] - g.x0[row_index_[i]];
    RatVec alpha = mat_vec(inv_, rhs);
    for (int j = 0; j < d; ++j) {
      if (alpha[j].get_den() != 1) return false;
      Int a = alpha[j].get_num();
      if (a < int_of(g.lo[j]) || a > int_of(g.hi[j])) return false;
    }
    // Consistency on the remaining rows.
    for (int i = 0; i < n; ++i) {
      Rat s = g.x0[i];
      for (int j = 0; j < d; ++j) s += alpha[j] * g.gens[j][i];
      if (s != p[i]) return false;
    }
    return true;
  }

 private:
  const Gap* g_;
  bool ok_ = false;
  RatMat inv_;
  std::vector<int> row_index_;
};

}  // namespace

PointSet gap_points(const Gap& g, long long cap) {
  require_within_cap(g, cap);
  int n = g.ambient_dim();
  PointSet out(n);
  if (g.dim() == 0) {
    out.insert(g.x0);
    return out;
  }
  ScaledGap s = scale_gap(g);
  out.rescale_to(s.den);
  for_each_gap_point(g, [&](const IntVec& row) { out.insert_row(row.data()); }, s.base, s.gen_num);
  return out;
}

Gap sort_dims_nonincreasing(const Gap& g) {
  int d = g.dim();
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return (g.hi[a] - g.lo[a]) > (g.hi[b] - g.lo[b]);
  });
  Gap out;
  out.x0 = g.x0;
  out.gens.reserve(d);
  for (int i : idx) {
    out.gens.push_back(g.gens[i]);
    out.lo.push_back(g.lo[i]);
    out.hi.push_back(g.hi[i]);
  }
  return out;
}

Gap restrict_gap(const Gap& g, int fixed_from, const std::vector<long long>& t) {
  int d = g.dim();
  if (fixed_from < 1 || fixed_from > d + 1) throw std::invalid_argument("restriction index out of range");
  if (fixed_from == d + 1) {
    if (!t.empty()) throw std::invalid_argument("restriction values out of bounds");
    return g;  // nothing to fix
  }
  int k = fixed_from;
  if (static_cast<int>(t.size()) != d - k + 1) {
    throw std::invalid_argument("restriction values must cover dimensions k..d");
  }
  Gap out;
  out.x0 = g.x0;
  for (int i = k - 1; i < d; ++i) {
    long long ti = t[i - (k - 1)];
    if (ti < g.lo[i] || ti > g.hi[i]) throw std::invalid_argument("restriction values out of bounds");
    if (ti != 0) {
      Rat f(static_cast<long>(ti));
      for (int c = 0; c < g.ambient_dim(); ++c) out.x0[c] += f * g.gens[i][c];
    }
  }
  out.gens.assign(g.gens.begin(), g.gens.begin() + (k - 1));
  out.lo.assign(g.lo.begin(), g.lo.begin() + (k - 1));
  out.hi.assign(g.hi.begin(), g.hi.begin() + (k - 1));
  return out;
}

void for_each_restriction(
    const Gap& g, int cut,
    const std::function<void(const std::vector<long long>&, const Gap&)>& fn) {
  int d = g.dim();
  if (cut < 1 || cut > d + 1) throw std::invalid_argument("restriction index out of range");
  int m = d - cut + 1;
  std::vector<long long> t(m);
  for (int i = 0; i < m; ++i) t[i] = g.lo[cut - 1 + i];
  for (;;) {
    fn(t, restrict_gap(g, cut, t));
    int i = 0;
    while (i < m) {
      if (t[i] < g.hi[cut - 1 + i]) {
        ++t[i];
        break;
      }
      t[i] = g.lo[cut - 1 + i];
      ++i;
    }
    if (i == m) break;
  }
}

bool gap_contains(const Gap& g, const Point& p, long long cap) {
  if (p.dim() != g.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  if (g.dim() == 0) return p == g.x0;
  FullRankMembership fm(g);
  if (fm.full_rank()) return fm.contains(p);
  return gap_points(g, cap).contains(p);
}

long long intersect_count(const PointSet& a, const Gap& g, long long cap) {
  if (a.dim() != g.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  if (a.empty()) return 0;
  if (g.dim() == 0) return a.contains(g.x0) ? 1 : 0;

  FullRankMembership fm(g);
  long long count = 0;
  if (fm.full_rank()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (fm.contains(a.at(i))) ++count;
    }
    return count;
  }
  PointSet pts = gap_points(g, cap);
  // Iterate the smaller side.
  if (pts.size() <= a.size()) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (a.contains(pts.at(i))) ++count;
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (pts.contains(a.at(i))) ++count;
    }
  }
  return count;
}

GapLatticeImage gap_as_lattice_image(const Gap& g) {
  for (int i = 0; i < g.dim(); ++i) {
    if ((g.hi[i] - g.lo[i]) % 2 != 0) {
      throw std::invalid_argument("conversion requires even side lengths");
    }
  }
  GapLatticeImage img;
  img.lattice_dim = g.dim();
  img.shift = g.x0;
  for (int i = 0; i < g.dim(); ++i) {
    img.box_halfwidths.push_back(Rat(static_cast<long>((g.hi[i] - g.lo[i]) / 2)));
    img.phi_columns.push_back(g.gens[i]);
    long long mid = (g.lo[i] + g.hi[i]) / 2;
    if (mid != 0) {
      Rat f(static_cast<long>(mid));
      for (int c = 0; c < g.ambient_dim(); ++c) img.shift[c] += f * g.gens[i][c];
    }
  }
  return img;
}

PointSet gap_image_points(const GapLatticeImage& img, long long cap) {
  // Rebuild as a GAP centered at the shift and reuse the enumerator.
  Gap g;
  g.x0 = img.shift;
  g.gens = img.phi_columns;
  for (const auto& h : img.box_halfwidths) {
    Int hw = rat_floor(h);
    g.lo.push_back(-hw.get_si());
    g.hi.push_back(hw.get_si());
  }
  return gap_points(g, cap);
}

}  // namespace latgap
