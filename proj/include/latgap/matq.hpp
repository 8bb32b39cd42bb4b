#pragma once

#include <optional>
#include <vector>

#include "latgap/rational.hpp"

namespace latgap {

// Dense exact-rational matrices, row major.  Dimensions here are tiny
// (desk scale), so plain Gaussian elimination is used throughout.
using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<std::vector<Int>>;
using IntVec = std::vector<Int>;

RatMat rat_identity(int n);
RatMat transpose(const RatMat& a);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& x);

int rank(RatMat a);
Rat det(RatMat a);

// Solves A x = b; returns nullopt when inconsistent.  When the system is
// underdetermined, free variables are set to zero.
std::optional<RatVec> solve(RatMat a, RatVec b);

// Basis of {x : A x = 0}.
std::vector<RatVec> nullspace(RatMat a);

// Inverse of a square nonsingular matrix; throws std::domain_error otherwise.
RatMat inverse(RatMat a);

// Clears denominators of a rational vector to a primitive integer vector
// (gcd of entries 1, first nonzero entry positive).
IntVec primitive_integer(const RatVec& v);

// Column-style Hermite normal form: returns H = A * U with U unimodular,
// H in canonical column echelon form (pivots positive, entries left of a
// pivot reduced into [0, pivot), columns after the last pivot zero).
struct HnfResult {
  IntMat h;
  IntMat u;  // square, det +-1
  int rank = 0;
};
HnfResult hermite_normal_form(const IntMat& a);

// Basis (as columns) of {z integer : A z = 0}; the result is saturated.
IntMat integer_kernel(const IntMat& a);

}  // namespace latgap
