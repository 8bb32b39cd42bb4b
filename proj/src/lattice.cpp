#include "latgap/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace latgap {

LatticeBasis LatticeBasis::standard(int n) {
  std::vector<Point> cols;
  cols.reserve(n);
  for (int i = 0; i < n; ++i) {
    Point e = Point::zero(n);
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  return LatticeBasis{std::move(cols)};
}

LatticeBasis LatticeBasis::diagonal(const std::vector<Rat>& diag) {
  int n = static_cast<int>(diag.size());
  std::vector<Point> cols;
  cols.reserve(n);
  for (int i = 0; i < n; ++i) {
    Point e = Point::zero(n);
    e[i] = diag[i];
    cols.push_back(std::move(e));
  }
  return make_basis(std::move(cols));
}

LatticeBasis make_basis(std::vector<Point> columns) {
  if (columns.empty()) throw std::invalid_argument("degenerate basis");
  int n = columns[0].dim();
  int d = static_cast<int>(columns.size());
  if (d > n) throw std::invalid_argument("degenerate basis");
  for (const auto& c : columns) {
    if (c.dim() != n) throw std::invalid_argument("dimension mismatch");
  }
  LatticeBasis b{std::move(columns)};
  if (gram_det(b) == 0) throw std::invalid_argument("degenerate basis");
  return b;
}

Subspace make_subspace(std::vector<Point> spanning) {
  if (spanning.empty()) throw std::invalid_argument("empty subspace");
  int n = spanning[0].dim();
  RatMat rows;
  for (const auto& p : spanning) {
    if (p.dim() != n) throw std::invalid_argument("dimension mismatch");
    rows.push_back(p.coords);
  }
  if (rank(rows) != static_cast<int>(spanning.size())) {
    throw std::invalid_argument("spanning vectors linearly dependent");
  }
  return Subspace{std::move(spanning)};
}

RatMat gram(const LatticeBasis& basis) {
  int d = basis.rank();
  RatMat g(d, RatVec(d));
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      g[i][j] = dot(basis.columns[i], basis.columns[j]);
      if (j != i) g[j][i] = g[i][j];
    }
  }
  return g;
}

Rat gram_det(const LatticeBasis& basis) { return det(gram(basis)); }

Interval determinant(const LatticeBasis& basis) {
  Rat g = gram_det(basis);
  if (g <= 0) throw std::invalid_argument("degenerate basis");
  return sqrt_enclosure(g);
}

namespace {

// Gram-Schmidt data over the exact Gram matrix: mu[i][j] (j < i) and
// bstar_sq[i] = ||b_i*||^2.
struct GramSchmidt {
  RatMat mu;
  RatVec bstar_sq;
};

GramSchmidt gram_schmidt(const RatMat& g) {
  int d = static_cast<int>(g.size());
  GramSchmidt gs;
  gs.mu.assign(d, RatVec(d, Rat(0)));
  gs.bstar_sq.assign(d, Rat(0));
  // r[i][j] = <b_i, b_j*>
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

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis, const Rat& delta) {
  if (!(delta > Rat(1, 4) && delta < 1)) {
    throw std::invalid_argument("LLL delta must lie in (1/4, 1)");
  }
  std::vector<Point> b = basis.columns;
  int d = static_cast<int>(b.size());
  if (d == 1) return basis;

  auto recompute = [&]() { return gram_schmidt(gram(LatticeBasis{b})); };
  GramSchmidt gs = recompute();

  int k = 1;
  while (k < d) {
    // Size-reduce b_k against b_{k-1}, ..., b_0.
    for (int j = k - 1; j >= 0; --j) {
      Int r = rat_round(gs.mu[k][j]);
      if (r != 0) {
        for (int t = 0; t < b[k].dim(); ++t) b[k][t] -= Rat(r) * b[j][t];
        for (int t = 0; t < j; ++t) gs.mu[k][t] -= Rat(r) * gs.mu[j][t];
        gs.mu[k][j] -= Rat(r);
      }
    }
    Rat lhs = gs.bstar_sq[k];
    Rat rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.bstar_sq[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs = recompute();
      k = std::max(k - 1, 1);
    }
  }
  return LatticeBasis{std::move(b)};
}

bool lovasz_condition_holds(const LatticeBasis& basis, const Rat& delta) {
  GramSchmidt gs = gram_schmidt(gram(basis));
  for (int k = 1; k < basis.rank(); ++k) {
    Rat rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.bstar_sq[k - 1];
    if (gs.bstar_sq[k] < rhs) return false;
  }
  return true;
}

std::optional<RatVec> coords_in_span(const LatticeBasis& basis, const Point& p) {
  if (p.dim() != basis.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  int n = basis.ambient_dim();
  int d = basis.rank();
  RatMat a(n, RatVec(d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = basis.columns[j][i];
  return solve(std::move(a), p.coords);
}

bool membership(const LatticeBasis& basis, const Point& p) {
  auto c = coords_in_span(basis, p);
  if (!c) return false;
  for (const auto& q : *c) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

LatticeBasis sublattice_in_subspace(const LatticeBasis& basis, const Subspace& w) {
  if (w.ambient_dim() != basis.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  int d = basis.rank();
  int k = w.dim();

  // Rational coordinates of the spanning vectors in this basis.  Spanning
  // vectors need not be lattice points themselves; the subspace is a lattice
  // subspace as long as it lies in the span and the saturated intersection
  // below reaches full rank (always, for rational spans).
  RatMat ut(k, RatVec(d));
  for (int j = 0; j < k; ++j) {
    auto c = coords_in_span(basis, w.spanning[j]);
    if (!c) throw std::invalid_argument("not a lattice subspace");
    for (int i = 0; i < d; ++i) ut[j][i] = (*c)[i];
  }

  // Constraints cutting out span(coords) inside Q^d: rows orthogonal to it.
  std::vector<RatVec> ortho = nullspace(std::move(ut));

  IntMat constraints;
  for (const auto& v : ortho) constraints.push_back(primitive_integer(v));

  IntMat kernel;  // d x k, saturated
  if (constraints.empty()) {
    kernel.assign(d, IntVec(d, Int(0)));
    for (int i = 0; i < d; ++i) kernel[i][i] = 1;
  } else {
    kernel = integer_kernel(constraints);
  }

  // Canonicalize the coefficient basis via HNF (column operations preserve
  // the lattice it generates).
  HnfResult canon = hermite_normal_form(kernel);
  int got = canon.rank;
  if (got != k) throw std::logic_error("saturation rank mismatch");

  std::vector<Point> cols;
  cols.reserve(k);
  for (int j = 0; j < k; ++j) {
    IntVec z(d);
    for (int i = 0; i < d; ++i) z[i] = canon.h[i][j];
    cols.push_back(lattice_point(basis, z));
  }
  return make_basis(std::move(cols));
}

LatticeBasis dual_basis(const LatticeBasis& basis) {
  RatMat ginv = inverse(gram(basis));
  int n = basis.ambient_dim();
  int d = basis.rank();
  std::vector<Point> cols(d, Point::zero(n));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < n; ++i) {
      Rat s(0);
      for (int k = 0; k < d; ++k) s += basis.columns[k][i] * ginv[k][j];
      cols[j][i] = s;
    }
  }
  return make_basis(std::move(cols));
}

LatticeBasis apply_column_transform(const LatticeBasis& basis, const IntMat& u) {
  int d = basis.rank();
  int n = basis.ambient_dim();
  int cols_out = static_cast<int>(u[0].size());
  std::vector<Point> cols(cols_out, Point::zero(n));
  for (int j = 0; j < cols_out; ++j) {
    for (int k = 0; k < d; ++k) {
      if (u[k][j] == 0) continue;
      Rat f{u[k][j]};
      for (int i = 0; i < n; ++i) cols[j][i] += f * basis.columns[k][i];
    }
  }
  return make_basis(std::move(cols));
}

IntMat random_unimodular(int d, Rng& rng, int ops) {
  IntMat u(d, IntVec(d, Int(0)));
  for (int i = 0; i < d; ++i) u[i][i] = 1;
  if (d == 1) {
    if (rng.below(2) == 0) u[0][0] = -1;
    return u;
  }
  for (int step = 0; step < ops; ++step) {
    int kind = static_cast<int>(rng.below(3));
    int i = static_cast<int>(rng.below(d));
    int j = static_cast<int>(rng.below(d - 1));
    if (j >= i) ++j;
    if (kind == 0) {
      for (int r = 0; r < d; ++r) std::swap(u[r][i], u[r][j]);
    } else if (kind == 1) {
      for (int r = 0; r < d; ++r) u[r][i] = -u[r][i];
    } else {
      Int c(static_cast<long>(rng.int_in(-3, 3)));
      for (int r = 0; r < d; ++r) u[r][i] += c * u[r][j];
    }
  }
  return u;
}

Point lattice_point(const LatticeBasis& basis, const IntVec& coeffs) {
  int n = basis.ambient_dim();
  Point p = Point::zero(n);
  for (int j = 0; j < basis.rank(); ++j) {
    if (coeffs[j] == 0) continue;
    Rat f{coeffs[j]};
    for (int i = 0; i < n; ++i) p[i] += f * basis.columns[j][i];
  }
  return p;
}

}  // namespace latgap
