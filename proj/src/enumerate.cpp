#include "latgap/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace latgap {

namespace {

constexpr long long kEnumerationCap = 20'000'000;

struct GsData {
  RatMat mu;       // mu[i][j], j < i
  RatVec bstar_sq;
};

GsData gs_from_gram(const RatMat& g) {
  int d = static_cast<int>(g.size());
  GsData gs;
  gs.mu.assign(d, RatVec(d, Rat(0)));
  gs.bstar_sq.assign(d, Rat(0));
  RatMat r(d, RatVec(d, Rat(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rat s = g[i][j];
      for (int k = 0; k < j; ++k) s -= gs.mu[j][k] * r[i][k];
      r[i][j] = s;
      if (j < i) gs.mu[i][j] = s / gs.bstar_sq[j];
    }
    gs.bstar_sq[i] = r[i][i];
    if (gs.bstar_sq[i] <= 0) throw std::invalid_argument("degenerate basis");
  }
  return gs;
}

// Depth-first Fincke-Pohst over exact rational Gram-Schmidt data.
// Visits every integer coefficient vector x with
//   sum_i (x_i - e_i + s_i)^2 * bstar_i <= budget,
// where s_i collects the mu-projections of the already-fixed levels.
class BallSearch {
 public:
  BallSearch(const GsData& gs, RatVec center_coords, Rat budget)
      : gs_(gs),
        d_(static_cast<int>(gs.bstar_sq.size())),
        center_(std::move(center_coords)),
        budget_(std::move(budget)) {}

  void run(const std::function<void(const IntVec&)>& fn) {
    if (budget_ < 0) return;
    x_.assign(d_, Int(0));
    // shift_[level][j]: accumulated mu-projection onto level j from levels > level.
    shift_.assign(d_ + 1, RatVec(d_, Rat(0)));
    visits_ = 0;
    descend(d_ - 1, budget_, fn);
  }

 private:
  void descend(int level, const Rat& remaining, const std::function<void(const IntVec&)>& fn) {
    if (level < 0) {
      fn(x_);
      return;
    }
    if (++visits_ > kEnumerationCap) throw std::runtime_error("enumeration cap exceeded");

    const Rat c = center_[level] - shift_[level + 1][level];
    const Rat& b = gs_.bstar_sq[level];
    Int lo = ceil_center_minus_sqrt(c, remaining, b);
    Int hi = floor_center_plus_sqrt(c, remaining, b);
    for (Int xi = lo; xi <= hi; ++xi) {
      Rat y = Rat(xi) - c;
      Rat next = remaining - y * y * b;
      if (next < 0) continue;  // exact guard; cannot trigger inside [lo, hi]
      x_[level] = xi;
      RatVec& below = shift_[level];
      const RatVec& above = shift_[level + 1];
      Rat offs = Rat(xi) - center_[level];
      for (int j = 0; j < level; ++j) {
        below[j] = above[j] + gs_.mu[level][j] * offs;
      }
      descend(level - 1, next, fn);
    }
  }

  const GsData& gs_;
  int d_;
  RatVec center_;
  Rat budget_;
  IntVec x_;
  std::vector<RatVec> shift_;
  long long visits_ = 0;
};

// Squared distance from the ball center to the basis span, plus the
// coordinates of the orthogonal projection in the basis.
struct CenterSplit {
  RatVec coords;
  Rat perp_sq;
};

CenterSplit split_center(const LatticeBasis& basis, const Point& center) {
  int d = basis.rank();
  RatVec bt_c(d);
  for (int j = 0; j < d; ++j) bt_c[j] = dot(basis.columns[j], center);
  RatMat g = gram(basis);
  auto e = solve(g, bt_c);
  if (!e) throw std::logic_error("gram solve failed");
  Point proj = Point::zero(basis.ambient_dim());
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < basis.ambient_dim(); ++i) proj[i] += (*e)[j] * basis.columns[j][i];
  }
  return CenterSplit{std::move(*e), norm_sq(center - proj)};
}

}  // namespace

VPolytope make_polytope(std::vector<Point> vertices) {
  if (vertices.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  int n = vertices[0].dim();
  for (const auto& v : vertices) {
    if (v.dim() != n) throw std::invalid_argument("dimension mismatch");
  }
  return VPolytope{std::move(vertices)};
}

void for_each_point_in_ball(const LatticeBasis& basis, const Ball& ball,
                            const std::function<void(const IntVec&)>& fn) {
  if (ball.dim() != basis.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  CenterSplit cs = split_center(basis, ball.center);
  Rat budget = ball.radius_sq - cs.perp_sq;
  if (budget < 0) return;
  GsData gs = gs_from_gram(gram(basis));
  BallSearch search(gs, cs.coords, budget);
  search.run(fn);
}

PointSet points_in_ball(const LatticeBasis& basis, const Ball& ball) {
  LatticeBasis reduced = lll_reduce(basis);
  PointSet out(basis.ambient_dim());

  // Integer numerators of the reduced basis columns over one denominator,
  // so each emitted point is assembled in integer arithmetic.
  int n = basis.ambient_dim();
  int d = reduced.rank();
  Int den(1);
  for (const auto& col : reduced.columns)
    for (const auto& q : col.coords)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<IntVec> colnum(d, IntVec(n));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) {
      Rat s = reduced.columns[j][i] * Rat(den);
      colnum[j][i] = s.get_num();
    }
  out.rescale_to(den);

  IntVec row(n);
  for_each_point_in_ball(reduced, ball, [&](const IntVec& x) {
    for (int i = 0; i < n; ++i) row[i] = 0;
    for (int j = 0; j < d; ++j) {
      if (x[j] == 0) continue;
      for (int i = 0; i < n; ++i) row[i] += x[j] * colnum[j][i];
    }
    out.insert_row(row.data());
  });
  return out;
}

long long count_points_in_ball(const LatticeBasis& basis, const Ball& ball) {
  LatticeBasis reduced = lll_reduce(basis);
  long long count = 0;
  for_each_point_in_ball(reduced, ball, [&](const IntVec&) { ++count; });
  return count;
}

PolytopeMembership::PolytopeMembership(const VPolytope& poly) : dim_(poly.dim()) {
  const auto& v = poly.vertices;
  base_ = v[0];
  int m = static_cast<int>(v.size());

  // Affine hull: row space of the difference vectors.
  RatMat diffs;
  for (int j = 1; j < m; ++j) diffs.push_back((v[j] - base_).coords);

  std::vector<int> pivot_coords;
  int k = 0;
  if (!diffs.empty()) {
    // Recover pivot coordinates from an rref-style elimination.
    RatMat a = diffs;
    int rows = static_cast<int>(a.size());
    int prow = 0;
    for (int col = 0; col < dim_ && prow < rows; ++col) {
      int sel = -1;
      for (int i = prow; i < rows; ++i)
        if (a[i][col] != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      std::swap(a[prow], a[sel]);
      Rat inv = 1 / a[prow][col];
      for (int j = col; j < dim_; ++j) a[prow][j] *= inv;
      for (int i = 0; i < rows; ++i) {
        if (i == prow || a[i][col] == 0) continue;
        Rat f = a[i][col];
        for (int j = col; j < dim_; ++j) a[i][j] -= f * a[prow][j];
      }
      pivot_coords.push_back(col);
      ++prow;
    }
    k = prow;
  }

  // Equalities: primitive integer normals orthogonal to the hull directions,
  // with offsets through the base vertex.
  {
    RatMat dmat = diffs.empty() ? RatMat{RatVec(dim_, Rat(0))} : diffs;
    for (const auto& nvec : nullspace(dmat)) {
      IntVec a = primitive_integer(nvec);
      RatVec arat(dim_);
      for (int i = 0; i < dim_; ++i) arat[i] = Rat(a[i]);
      Rat brat(0);
      for (int i = 0; i < dim_; ++i) brat += arat[i] * base_[i];
      // Scale (a, b) jointly to integers.
      Int bden = brat.get_den();
      for (auto& c : a) c *= bden;
      equalities_.push_back({std::move(a), Int(brat.get_num())});
    }
  }

  if (k == 0) return;  // single point: equalities pin every coordinate

  // Facets of the projection onto the pivot coordinates, where the hull is
  // full-dimensional.
  std::vector<RatVec> proj(m, RatVec(k));
  for (int j = 0; j < m; ++j)
    for (int t = 0; t < k; ++t) proj[j][t] = v[j][pivot_coords[t]];

  std::vector<int> subset(k);
  std::map<std::pair<IntVec, Int>, bool> seen;

  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      // Hyperplane through the chosen vertices (if affinely independent).
      RatMat rows;
      for (int t = 1; t < k; ++t) {
        RatVec r(k);
        for (int j = 0; j < k; ++j) r[j] = proj[subset[t]][j] - proj[subset[0]][j];
        rows.push_back(std::move(r));
      }
      if (rows.empty()) rows.push_back(RatVec(k, Rat(0)));
      auto normals = nullspace(rows);
      if (normals.size() != 1) return;  // degenerate subset
      IntVec a = primitive_integer(normals[0]);
      Rat b(0);
      for (int j = 0; j < k; ++j) b += Rat(a[j]) * proj[subset[0]][j];
      // Which side are the remaining vertices on?
      bool all_le = true, all_ge = true;
      for (int j = 0; j < m; ++j) {
        Rat s(0);
        for (int t = 0; t < k; ++t) s += Rat(a[t]) * proj[j][t];
        if (s > b) all_le = false;
        if (s < b) all_ge = false;
      }
      if (!all_le && !all_ge) return;
      if (all_ge && !all_le) {
        for (auto& c : a) c = -c;
        b = -b;
      }
      Int bden = b.get_den();
      IntVec akey = a;
      for (auto& c : akey) c *= bden;
      auto key = std::make_pair(akey, Int(b.get_num()));
      if (seen.emplace(key, true).second) {
        // Lift the facet back to the original coordinates.
        IntVec lifted(dim_, Int(0));
        for (int t = 0; t < k; ++t) lifted[pivot_coords[t]] = key.first[t];
        facets_.push_back({std::move(lifted), key.second});
      }
      return;
    }
    for (int i = start; i <= m - (k - depth); ++i) {
      subset[depth] = i;
      choose(i + 1, depth + 1);
    }
  };

  double combos = 1;
  for (int t = 0; t < k; ++t) combos *= static_cast<double>(m - t) / (t + 1);
  if (combos > 2e6) throw std::runtime_error("polytope has too many vertices for facet enumeration");
  choose(0, 0);
}

bool PolytopeMembership::contains(const Point& p) const {
  if (p.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [a, b] : equalities_) {
    Rat s(0);
    for (int i = 0; i < dim_; ++i) s += Rat(a[i]) * p[i];
    if (s != Rat(b)) return false;
  }
  if (facets_.empty()) {
    // Zero-dimensional hull: equalities pinned the affine hull; compare to base.
    return p == base_;
  }
  for (const auto& [a, b] : facets_) {
    Rat s(0);
    for (int i = 0; i < dim_; ++i) s += Rat(a[i]) * p[i];
    if (s > Rat(b)) return false;
  }
  return true;
}

bool PolytopeMembership::contains_integer(const IntVec& p) const {
  Int s;
  for (const auto& [a, b] : equalities_) {
    s = 0;
    for (int i = 0; i < dim_; ++i) s += a[i] * p[i];
    if (s != b) return false;
  }
  if (facets_.empty()) {
    for (int i = 0; i < dim_; ++i) {
      if (Rat(p[i]) != base_[i]) return false;
    }
    return true;
  }
  for (const auto& [a, b] : facets_) {
    s = 0;
    for (int i = 0; i < dim_; ++i) s += a[i] * p[i];
    if (s > b) return false;
  }
  return true;
}

PointSet integer_points_in_polytope(const VPolytope& poly) {
  int n = poly.dim();
  PolytopeMembership member(poly);

  IntVec lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rat mn = poly.vertices[0][i], mx = poly.vertices[0][i];
    for (const auto& v : poly.vertices) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = rat_ceil(mn);
    hi[i] = rat_floor(mx);
  }

  PointSet out(n);
  double box = 1;
  for (int i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) return out;
    box *= to_double(Rat(hi[i] - lo[i] + 1));
  }
  if (box > 1e8) throw std::runtime_error("polytope bounding box too large");

  IntVec p = lo;
  for (;;) {
    if (member.contains_integer(p)) out.insert_row(p.data());
    int i = 0;
    while (i < n) {
      p[i] += 1;
      if (p[i] <= hi[i]) break;
      p[i] = lo[i];
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

PointSet lattice_points_in_polytope(const LatticeBasis& basis, const VPolytope& poly) {
  if (poly.dim() != basis.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  PolytopeMembership member(poly);

  // Circumscribed ball about the vertex centroid.
  int n = poly.dim();
  Point centroid = Point::zero(n);
  for (const auto& v : poly.vertices) centroid = centroid + v;
  Rat inv(1, static_cast<unsigned long>(poly.vertices.size()));
  for (auto& c : centroid.coords) c *= inv;
  Rat r2(0);
  for (const auto& v : poly.vertices) {
    Rat d2 = norm_sq(v - centroid);
    if (d2 > r2) r2 = d2;
  }

  PointSet out(n);
  if (r2 == 0) {
    if (membership(basis, centroid)) out.insert(centroid);
    return out;
  }
  PointSet candidates = points_in_ball(basis, Ball{r2, centroid});
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Point p = candidates.at(i);
    if (member.contains(p)) out.insert(p);
  }
  return out;
}

double ball_volume(int n, double r) {
  if (n < 1 || !(r > 0)) throw std::invalid_argument("ball_volume needs n >= 1, r > 0");
  // V_k = V_{k-2} * 2*pi*r^2 / k, V_0 = 1, V_1 = 2r.
  const long double pi = 3.14159265358979323846264338327950288L;
  long double rr = static_cast<long double>(r) * r;
  long double v = (n % 2 == 0) ? 1.0L : 2.0L * r;
  for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) {
    v *= 2.0L * pi * rr / k;
  }
  return static_cast<double>(v);
}

double ball_volume_r2(int n, const Rat& radius_sq) {
  return ball_volume(n, std::sqrt(to_double(radius_sq)));
}

ShortestVector shortest_vector(const LatticeBasis& basis) {
  LatticeBasis reduced = lll_reduce(basis);
  ShortestVector best{norm_sq(reduced.columns[0]), reduced.columns[0]};
  for (const auto& c : reduced.columns) {
    Rat nsq = norm_sq(c);
    if (nsq < best.norm_sq) best = {nsq, c};
  }
  Ball ball = Ball::origin_r2(basis.ambient_dim(), best.norm_sq);
  for_each_point_in_ball(reduced, ball, [&](const IntVec& x) {
    bool zero = true;
    for (const auto& xi : x)
      if (xi != 0) {
        zero = false;
        break;
      }
    if (zero) return;
    Point p = lattice_point(reduced, x);
    Rat nsq = norm_sq(p);
    if (nsq < best.norm_sq || (nsq == best.norm_sq && lex_less(p, best.vec))) {
      best.norm_sq = nsq;
      best.vec = p;
    }
  });
  return best;
}

}  // namespace latgap
