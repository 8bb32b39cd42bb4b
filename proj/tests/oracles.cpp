#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {

using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

// Local Gaussian elimination (kept separate from the library's).
RatMat gauss_inverse(RatMat a) {
  int n = static_cast<int>(a.size());
  RatMat inv(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) throw std::domain_error("singular");
    std::swap(a[col], a[sel]);
    std::swap(inv[col], inv[sel]);
    Rat piv = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= piv;
      inv[col][j] /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

long long isqrt_floor(const Rat& v) {
  // Largest k >= 0 with k^2 <= v, by stepping (v is small here).
  if (v < 0) return -1;
  long long k = 0;
  while (latgap::rat_of((k + 1) * (k + 1)) <= v) ++k;
  return k;
}

}  // namespace

std::string key_of(const std::vector<Rat>& coords) {
  std::string s;
  for (const auto& c : coords) {
    Rat q = c;
    q.canonicalize();
    s += q.get_str();
    s += ";";
  }
  return s;
}

std::string key_of(const Point& p) { return key_of(p.coords); }

std::vector<Point> points_in_ball(const LatticeBasis& basis, const Ball& ball,
                                  long long max_candidates) {
  int n = basis.ambient_dim();
  int d = basis.rank();

  // Gram and its inverse.
  RatMat g(d, RatVec(d, Rat(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g[i][j] = dot(basis.columns[i], basis.columns[j]);
  RatMat ginv = gauss_inverse(g);

  // Coefficient offset of the center: e = G^-1 B^T c.
  RatVec btc(d, Rat(0));
  for (int j = 0; j < d; ++j) btc[j] = dot(basis.columns[j], ball.center);
  RatVec e(d, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) e[i] += ginv[i][j] * btc[j];

  // |c_i - e_i| <= r * sqrt((G^-1)_ii) for points within distance r of center.
  std::vector<long long> lo(d), hi(d);
  long long candidates = 1;
  for (int i = 0; i < d; ++i) {
    Rat bound_sq = ball.radius_sq * ginv[i][i];
    long long w = isqrt_floor(bound_sq) + 1;
    // e_i is rational; conservative integer window around it.
    long long center_floor = static_cast<long long>(latgap::rat_floor(e[i]).get_si());
    lo[i] = center_floor - w;
    hi[i] = center_floor + w + 1;
    candidates *= (hi[i] - lo[i] + 1);
    if (candidates > max_candidates) throw std::runtime_error("oracle box too large");
  }

  std::set<std::string> seen;
  std::vector<Point> out;
  std::vector<long long> c(lo);
  for (;;) {
    Point p = Point::zero(n);
    for (int j = 0; j < d; ++j) {
      if (c[j] == 0) continue;
      Rat f = latgap::rat_of(c[j]);
      for (int i = 0; i < n; ++i) p[i] += f * basis.columns[j][i];
    }
    if (norm_sq(p - ball.center) <= ball.radius_sq) {
      if (seen.insert(key_of(p)).second) out.push_back(std::move(p));
    }
    int i = 0;
    while (i < d) {
      if (c[i] < hi[i]) {
        ++c[i];
        break;
      }
      c[i] = lo[i];
      ++i;
    }
    if (i == d) break;
  }
  return out;
}

bool in_convex_hull(const std::vector<Point>& vertices, const Point& p) {
  // Phase-1 simplex for {lambda >= 0 : V lambda = p, 1.lambda = 1}.
  int n = p.dim();
  int m = static_cast<int>(vertices.size());
  int rows = n + 1;
  int cols = m + rows;  // lambdas + artificials

  // Tableau rows: [A | I | b], minimizing the sum of artificials.
  RatMat t(rows, RatVec(cols + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = vertices[j][i];
    t[i][cols] = p[i];
  }
  for (int j = 0; j < m; ++j) t[n][j] = 1;
  t[n][cols] = 1;
  for (int i = 0; i < rows; ++i) {
    if (t[i][cols] < 0) {
      for (int j = 0; j <= cols; ++j) t[i][j] = -t[i][j];
    }
    t[i][m + i] = 1;
  }

  std::vector<int> basis_col(rows);
  for (int i = 0; i < rows; ++i) basis_col[i] = m + i;

  // Objective row: cost of artificials.
  RatVec obj(cols + 1, Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j <= cols; ++j) obj[j] += t[i][j];
  for (int i = 0; i < rows; ++i) obj[m + i] = 0;

  for (;;) {
    // Bland's rule: first column with positive reduced cost.
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      bool artificial = j >= m;
      if (artificial) continue;
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio(0);
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_col[i] < basis_col[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) break;  // unbounded cannot happen in phase 1
    Rat piv = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    {
      Rat f = obj[enter];
      if (f != 0)
        for (int j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis_col[leave] = enter;
  }
  return obj[cols] == 0;
}

std::vector<Point> integer_points_in_polytope(const VPolytope& poly, long long max_candidates) {
  int n = poly.dim();
  std::vector<long long> lo(n), hi(n);
  long long candidates = 1;
  for (int i = 0; i < n; ++i) {
    Rat mn = poly.vertices[0][i], mx = poly.vertices[0][i];
    for (const auto& v : poly.vertices) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = static_cast<long long>(latgap::rat_ceil(mn).get_si());
    hi[i] = static_cast<long long>(latgap::rat_floor(mx).get_si());
    if (lo[i] > hi[i]) return {};
    candidates *= (hi[i] - lo[i] + 1);
    if (candidates > max_candidates) throw std::runtime_error("oracle box too large");
  }

  std::vector<Point> out;
  std::vector<long long> c(lo);
  for (;;) {
    Point p = Point::zero(n);
    for (int i = 0; i < n; ++i) p[i] = latgap::rat_of(c[i]);
    if (in_convex_hull(poly.vertices, p)) out.push_back(std::move(p));
    int i = 0;
    while (i < n) {
      if (c[i] < hi[i]) {
        ++c[i];
        break;
      }
      c[i] = lo[i];
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

std::vector<Point> minkowski_sum(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::set<std::string> seen;
  std::vector<Point> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Point s = x + y;
      if (seen.insert(key_of(s)).second) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Point> gap_points(const Gap& g) {
  int d = g.dim();
  std::set<std::string> seen;
  std::vector<Point> out;
  std::vector<long long> alpha(g.lo.begin(), g.lo.end());
  for (;;) {
    Point p = g.x0;
    for (int i = 0; i < d; ++i) {
      if (alpha[i] == 0) continue;
      Rat f = latgap::rat_of(alpha[i]);
      for (int c = 0; c < g.ambient_dim(); ++c) p[c] += f * g.gens[i][c];
    }
    if (seen.insert(key_of(p)).second) out.push_back(std::move(p));
    int i = 0;
    while (i < d) {
      if (alpha[i] < g.hi[i]) {
        ++alpha[i];
        break;
      }
      alpha[i] = g.lo[i];
      ++i;
    }
    if (i == d) break;
  }
  return out;
}

long long intersect_count(const std::vector<Point>& a, const Gap& g) {
  auto keys = key_set(oracle::gap_points(g));
  long long count = 0;
  for (const auto& p : a) {
    if (keys.count(key_of(p))) ++count;
  }
  return count;
}

std::vector<Point> to_points(const PointSet& s) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.at(i));
  return out;
}

std::set<std::string> key_set(const std::vector<Point>& pts) {
  std::set<std::string> keys;
  for (const auto& p : pts) keys.insert(key_of(p));
  return keys;
}

}  // namespace oracle
