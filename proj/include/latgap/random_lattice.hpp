#pragma once

#include <cstdint>

#include "latgap/enumerate.hpp"
#include "latgap/lattice.hpp"
#include "latgap/report.hpp"
#include "latgap/rng.hpp"

namespace latgap {

struct RandomLatticeConfig {
  int n = 2;
  Int p = Int(1000003);
  std::uint64_t seed = 0;
};

// Validates n >= 2, p prime >= 101.
RandomLatticeConfig make_random_lattice_config(int n, Int p, std::uint64_t seed);

Int default_prime();  // smallest prime >= 10^6

// Congruence lattice {z in Z^n : z = t*v (mod p)} scaled to determinant one.
// The scale is a rational approximation of det^(-1/n), rounded down so that
// the scaled determinant lies in [1 - 1e-9, 1].
struct RandomLatticeSample {
  LatticeBasis basis;          // scaled, determinant within 1e-9 of one
  LatticeBasis integer_basis;  // the unscaled congruence lattice
  Rat scale;                   // basis = scale * integer_basis
  IntVec residue;              // the drawn v, entries in [0, p)
};

RandomLatticeSample sample_random_lattice_full(const RandomLatticeConfig& cfg);
LatticeBasis sample_random_lattice(const RandomLatticeConfig& cfg);

struct SiegelReport {
  int n = 0;
  Int p;
  std::uint64_t seed = 0;
  int trials = 0;
  double volume = 0;        // requested region volume
  double volume_exact = 0;  // volume of the rational-radius ball actually used
  double mean = 0;
  double stderr_mean = 0;
  double deviation = 0;  // mean - volume_exact
};

// Empirical mean of nonzero-point counts in an origin-centered ball of the
// given volume; the mean-value identity predicts the volume itself.
SiegelReport siegel_mean_value_check(const RandomLatticeConfig& cfg, double region_volume,
                                     int trials);
Json siegel_report_to_json(const SiegelReport& r);

struct SubdetStatistic {
  int dim_w = 0;
  Interval min_normalized_det;      // min det(L cap W)^(1/dim_w) over the family
  long long candidates_examined = 0;
  bool exact = false;               // exhaustive regime vs heuristic upper bound
};

// Minimum normalized sub-determinant.  Exact (exhaustive) for dim_w in
// {1, n-1, n} -- hence for every dimension when n <= 3 -- via shortest-vector
// enumeration and duality; otherwise a heuristic upper bound obtained from
// subspaces spanned by reduced-basis vectors and enumerated short vectors.
SubdetStatistic min_subdet_statistics(const LatticeBasis& basis, int dim_w, int effort);

// R = min over dim_w of min_subdet_statistics; exact iff every dimension was.
struct SubdetSummary {
  Interval r_value;
  bool exact = false;
  long long candidates_examined = 0;
};
SubdetSummary min_subdet_all_dims(const LatticeBasis& basis, int effort);

// Point-count bound (3/2)exp(500 (log n * r/R)^2) for r >= R, evaluated in
// log space.  Throws std::invalid_argument("hypothesis r >= R not met").
ExperimentReport check_reverse_minkowski(const LatticeBasis& basis, const Rat& r,
                                         int effort = 40);

}  // namespace latgap
