#pragma once

#include <variant>
#include <vector>

#include "latgap/enumerate.hpp"
#include "latgap/gap.hpp"
#include "latgap/lattice.hpp"
#include "latgap/random_lattice.hpp"
#include "latgap/report.hpp"
#include "latgap/sumset.hpp"

namespace latgap {

using SymmetricBody = std::variant<Ball, VPolytope>;

// |A+A| <= 5^n |A| for A = lattice points in a symmetric convex body, plus
// the exact containment A+A inside the lattice points of the doubled body.
// Throws std::invalid_argument("Claim 1 requires a symmetric body") for
// asymmetric input.
ExperimentReport check_claim1(const LatticeBasis& basis, const SymmetricBody& body,
                              int max_dim = 4);

// The non-symmetric tetrahedron-like body with |A| = 4N+2 and
// |A+A| >= (2N+1)^2.
ExperimentReport check_nonsymmetric(long long n_param);
VPolytope counterexample_body(long long n_param);

// |lattice cap ball(r)| >= 2^-n vol(ball(r)) for determinant <= 1.
ExperimentReport check_blichfeldt(const LatticeBasis& basis, const Rat& r);

// Point count in an (n/2)-dimensional lattice subspace against the
// reverse-Minkowski corollary bound with an estimated c1.
ExperimentReport check_corollary_count(const LatticeBasis& basis, const Subspace& w,
                                       const Rat& r, double c1_est);

// Rational upper bound on n^(5/4) with relative error < 2^-60 (the squared
// main-experiment radius).
Rat main_radius_sq(int n);

// |A| >= n^(n/8) at the main-experiment radius (reported with an explicit
// large-n caveat).
ExperimentReport check_minkbound(const LatticeBasis& basis, int n);

struct ProofChainOptions {
  int w_dim = -1;            // slab dimension; -1 means floor(n/2)
  long long cap = kDefaultGapCap;
  int max_per_t_reports = 64;
};

// Per-link verification of the restriction argument:
//   (i)   |A cap G| <= sum_t |A cap G_t|
//   (ii)  |A cap G_t| <= points of A in the affine slab through G_t
//   (iii) family size and multiset partition identities
//   (iv)  tail product <= |G|^(1-(cut-1)/d) (exact, via integer powers)
// plus the non-gating pointwise 2^n comparison, which is asymptotic.
std::vector<ExperimentReport> check_proof_chain(const LatticeBasis& basis,
                                                const Rat& radius_sq, const Gap& g, int cut,
                                                const ProofChainOptions& opts = {});

struct MainExperimentResult {
  Json summary;
  std::vector<ExperimentReport> reports;
  bool all_gating_pass = true;
  Rat max_ratio;  // max over the family of |A cap G| / |A|
};

// Samples a lattice, builds A at radius n^(5/8), generates a random GAP
// family with d <= c*n and |G| <= |A|, and runs the proof chain on each.
MainExperimentResult run_main_experiment(const RandomLatticeConfig& cfg, int gap_family_size,
                                         double c, int max_n = 6);

// Deterministic pseudo-random GAP used by the main experiment (exposed for
// tests): generators with entries in {-3..3}, geometric side lengths with
// mean 4, total multiset size at most max_size.
Gap random_gap(int ambient_dim, int max_dim, const Int& max_size, Rng& rng,
               const PointSet* anchor = nullptr);

bool all_gating_pass(const std::vector<ExperimentReport>& reports);

}  // namespace latgap
