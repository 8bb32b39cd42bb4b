#pragma once

#include <optional>
#include <vector>

#include "latgap/matq.hpp"
#include "latgap/point.hpp"
#include "latgap/rng.hpp"

namespace latgap {

// Basis of a rank-d lattice in R^n: d linearly independent rational columns.
struct LatticeBasis {
  std::vector<Point> columns;

  int ambient_dim() const { return columns.empty() ? 0 : columns[0].dim(); }
  int rank() const { return static_cast<int>(columns.size()); }

  static LatticeBasis standard(int n);  // Z^n
  static LatticeBasis diagonal(const std::vector<Rat>& diag);
};

// Validates invariants (1 <= d <= n, independence); throws
// std::invalid_argument("degenerate basis") otherwise.
LatticeBasis make_basis(std::vector<Point> columns);

// Linear subspace spanned by linearly independent rational vectors.
struct Subspace {
  std::vector<Point> spanning;

  int ambient_dim() const { return spanning.empty() ? 0 : spanning[0].dim(); }
  int dim() const { return static_cast<int>(spanning.size()); }
};

Subspace make_subspace(std::vector<Point> spanning);

// Exact Gram matrix G_ij = <b_i, b_j>.
RatMat gram(const LatticeBasis& basis);

// det(G) as an exact rational (> 0 for a valid basis).
Rat gram_det(const LatticeBasis& basis);

// det(lattice) = sqrt(det(G)) as a certified enclosure of width <= 2^-63.
Interval determinant(const LatticeBasis& basis);

// Lenstra-Lenstra-Lovasz reduction in exact rational arithmetic.
// delta must lie in (1/4, 1).
LatticeBasis lll_reduce(const LatticeBasis& basis, const Rat& delta = Rat(99, 100));

bool lovasz_condition_holds(const LatticeBasis& basis, const Rat& delta);

// Rational coordinates of p in the column span, or nullopt if p is outside it.
std::optional<RatVec> coords_in_span(const LatticeBasis& basis, const Point& p);

// True iff p is an integer combination of the basis columns.
bool membership(const LatticeBasis& basis, const Point& p);

// Basis of the saturated intersection of the lattice with span(w).  Every
// spanning vector of w must be a lattice point; otherwise throws
// std::invalid_argument("not a lattice subspace").  The returned basis is the
// HNF-canonical one (in coefficient coordinates).
LatticeBasis sublattice_in_subspace(const LatticeBasis& basis, const Subspace& w);

// Dual basis within the column span: columns D with <d_i, b_j> = delta_ij.
LatticeBasis dual_basis(const LatticeBasis& basis);

// basis * u for an integer column-operation matrix u (d x d).
LatticeBasis apply_column_transform(const LatticeBasis& basis, const IntMat& u);

// Random unimodular integer matrix built from elementary column operations.
IntMat random_unimodular(int d, Rng& rng, int ops = 12);

Point lattice_point(const LatticeBasis& basis, const IntVec& coeffs);

}  // namespace latgap
