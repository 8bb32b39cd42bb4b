#include "latgap/matq.hpp"

#include <stdexcept>
#include <utility>

namespace latgap {

RatMat rat_identity(int n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  RatMat c(a.size(), RatVec(b[0].size(), Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

namespace {

struct Rref {
  RatMat mat;
  std::vector<int> pivot_cols;
};

Rref rref(RatMat a) {
  Rref r;
  if (a.empty()) return r;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int sel = -1;
    for (int i = prow; i < rows; ++i) {
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[prow], a[sel]);
    Rat inv = 1 / a[prow][col];
    for (int j = col; j < cols; ++j) a[prow][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == prow || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[prow][j];
    }
    r.pivot_cols.push_back(col);
    ++prow;
  }
  r.mat = std::move(a);
  return r;
}

}  // namespace

int rank(RatMat a) { return static_cast<int>(rref(std::move(a)).pivot_cols.size()); }

Rat det(RatMat a) {
  int n = static_cast<int>(a.size());
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i) {
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return Rat(0);
    if (sel != col) {
      std::swap(a[col], a[sel]);
      d = -d;
    }
    d *= a[col][col];
    Rat inv = 1 / a[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] * inv;
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return d;
}

std::optional<RatVec> solve(RatMat a, RatVec b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  Rref r = rref(std::move(a));
  RatVec x(cols, Rat(0));
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
    int col = r.pivot_cols[k];
    if (col == cols) return std::nullopt;  // pivot in the augmented column
    x[col] = r.mat[k][cols];
  }
  return x;
}

std::vector<RatVec> nullspace(RatMat a) {
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  Rref r = rref(std::move(a));
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
      v[r.pivot_cols[k]] = -r.mat[k][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat inverse(RatMat a) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  Rref r = rref(std::move(a));
  if (static_cast<int>(r.pivot_cols.size()) != n || r.pivot_cols.back() != n - 1) {
    throw std::domain_error("singular matrix");
  }
  RatMat inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = r.mat[i][n + j];
  return inv;
}

IntVec primitive_integer(const RatVec& v) {
  Int den(1);
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  IntVec z(v.size());
  Int g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(den);
    z[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g == 0) return z;  // all-zero vector
  int lead_sign = 0;
  for (const auto& c : z) {
    if (c != 0) {
      lead_sign = sgn(c);
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

HnfResult hermite_normal_form(const IntMat& a) {
  HnfResult res;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  res.h = a;
  res.u.assign(cols, IntVec(cols, Int(0)));
  for (int i = 0; i < cols; ++i) res.u[i][i] = 1;
  if (cols == 0) return res;

  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(res.h[r][i], res.h[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(res.u[r][i], res.u[r][j]);
  };
  auto col_axpy = [&](int dst, int src, const Int& f) {
    // column dst -= f * column src
    for (int r = 0; r < rows; ++r) res.h[r][dst] -= f * res.h[r][src];
    for (int r = 0; r < cols; ++r) res.u[r][dst] -= f * res.u[r][src];
  };
  auto col_negate = [&](int j) {
    for (int r = 0; r < rows; ++r) res.h[r][j] = -res.h[r][j];
    for (int r = 0; r < cols; ++r) res.u[r][j] = -res.u[r][j];
  };

  int pcol = 0;
  for (int row = 0; row < rows && pcol < cols; ++row) {
    // Euclidean elimination across columns pcol..cols-1 on this row.
    for (;;) {
      int nonzero = -1;
      for (int j = pcol; j < cols; ++j) {
        if (res.h[row][j] != 0 &&
            (nonzero < 0 || mpz_cmpabs(res.h[row][j].get_mpz_t(),
                                       res.h[row][nonzero].get_mpz_t()) < 0)) {
          nonzero = j;
        }
      }
      if (nonzero < 0) break;  // row is zero past pcol
      col_swap(pcol, nonzero);
      bool done = true;
      for (int j = pcol + 1; j < cols; ++j) {
        if (res.h[row][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), res.h[row][j].get_mpz_t(), res.h[row][pcol].get_mpz_t());
        col_axpy(j, pcol, q);
        if (res.h[row][j] != 0) done = false;
      }
      if (done) break;
    }
    if (res.h[row][pcol] == 0) continue;
    if (res.h[row][pcol] < 0) col_negate(pcol);
    // Reduce entries left of the pivot into [0, pivot).
    for (int j = 0; j < pcol; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), res.h[row][j].get_mpz_t(), res.h[row][pcol].get_mpz_t());
      if (q != 0) col_axpy(j, pcol, q);
    }
    ++pcol;
  }
  res.rank = pcol;
  return res;
}

IntMat integer_kernel(const IntMat& a) {
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  HnfResult r = hermite_normal_form(a);
  // Kernel = span of the U columns matched to zero columns of H.
  IntMat kernel(cols);
  for (int i = 0; i < cols; ++i) {
    kernel[i].reserve(cols - r.rank);
    for (int j = r.rank; j < cols; ++j) kernel[i].push_back(r.u[i][j]);
  }
  return kernel;
}

}  // namespace latgap
