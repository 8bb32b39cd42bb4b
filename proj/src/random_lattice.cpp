#include "latgap/random_lattice.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace latgap {

RandomLatticeConfig make_random_lattice_config(int n, Int p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random lattice dimension must be >= 2");
  if (p < 101) throw std::invalid_argument("modulus must be a prime >= 101");
  if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw std::invalid_argument("modulus must be a prime >= 101");
  }
  return RandomLatticeConfig{n, std::move(p), seed};
}

Int default_prime() {
  Int p(1000000);
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p;  // 1000003
}

namespace {

// Scale s = 2^k / ceil(p^((n-1)/n) * 2^k): s^n * p^(n-1) lies in [1 - n*2^-k, 1].
Rat determinant_one_scale(const Int& p, int n) {
  constexpr unsigned long k = 40;
  Int t;
  mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n - 1));
  t <<= k * static_cast<unsigned long>(n);
  Int root;
  int exact = mpz_root(root.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(n));
  if (!exact) root += 1;
  Rat s(Int(1) << k, root);
  s.canonicalize();
  return s;
}

IntVec draw_residue(int n, const Int& p, Rng& rng) {
  // p fits comfortably in 64 bits at desk scale.
  unsigned long pl = p.get_ui();
  IntVec v(n);
  for (;;) {
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      unsigned long c = static_cast<unsigned long>(rng.below(pl));
      v[i] = c;
      if (c != 0) nonzero = true;
    }
    if (nonzero) return v;
  }
}

LatticeBasis congruence_basis(const IntVec& v, const Int& p) {
  int n = static_cast<int>(v.size());
  int lead = -1;
  for (int i = 0; i < n; ++i) {
    if (v[i] != 0) {
      lead = i;
      break;
    }
  }
  // Normalize so the leading coordinate is 1 mod p.
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), v[lead].get_mpz_t(), p.get_mpz_t()) == 0) {
    throw std::logic_error("residue not invertible");
  }
  std::vector<Point> cols;
  Point gen = Point::zero(n);
  for (int i = 0; i < n; ++i) {
    Int c = (v[i] * inv) % p;
    gen[i] = Rat(c);
  }
  cols.push_back(std::move(gen));
  for (int j = 0; j < n; ++j) {
    if (j == lead) continue;
    Point e = Point::zero(n);
    e[j] = Rat(p);
    cols.push_back(std::move(e));
  }
  return make_basis(std::move(cols));
}

}  // namespace

RandomLatticeSample sample_random_lattice_full(const RandomLatticeConfig& cfg) {
  Rng rng = Rng::stream(cfg.seed, 0);
  IntVec v = draw_residue(cfg.n, cfg.p, rng);
  LatticeBasis integer_basis = congruence_basis(v, cfg.p);
  Rat s = determinant_one_scale(cfg.p, cfg.n);
  std::vector<Point> scaled;
  scaled.reserve(integer_basis.columns.size());
  for (const auto& col : integer_basis.columns) scaled.push_back(s * col);
  RandomLatticeSample sample{make_basis(std::move(scaled)), std::move(integer_basis), s,
                             std::move(v)};
  return sample;
}

LatticeBasis sample_random_lattice(const RandomLatticeConfig& cfg) {
  return sample_random_lattice_full(cfg).basis;
}

SiegelReport siegel_mean_value_check(const RandomLatticeConfig& cfg, double region_volume,
                                     int trials) {
  if (trials < 100) throw std::invalid_argument("siegel check requires trials >= 100");
  if (!(region_volume > 0)) throw std::invalid_argument("region volume must be positive");
  int n = cfg.n;

  // Rational radius^2 whose ball volume matches region_volume to double precision.
  double unit = ball_volume(n, 1.0);
  double r2d = std::pow(region_volume / unit, 2.0 / n);
  Rat r2;
  mpq_set_d(r2.get_mpq_t(), r2d);
  double volume_exact = ball_volume_r2(n, r2);

  Rat scale = determinant_one_scale(cfg.p, n);
  // Count in the unscaled integer lattice with radius^2 / scale^2 (exact).
  Rat r2_int = r2 / (scale * scale);
  Ball ball = Ball::origin_r2(n, r2_int);

  double sum = 0, sumsq = 0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(trial));
    IntVec v = draw_residue(n, cfg.p, rng);
    LatticeBasis lat = congruence_basis(v, cfg.p);
    long long cnt = count_points_in_ball(lat, ball) - 1;  // exclude the origin
    double x = static_cast<double>(cnt);
    sum += x;
    sumsq += x * x;
  }
  double mean = sum / trials;
  double var = (sumsq - trials * mean * mean) / (trials - 1);
  if (var < 0) var = 0;

  SiegelReport rep;
  rep.n = n;
  rep.p = cfg.p;
  rep.seed = cfg.seed;
  rep.trials = trials;
  rep.volume = region_volume;
  rep.volume_exact = volume_exact;
  rep.mean = mean;
  rep.stderr_mean = std::sqrt(var / trials);
  rep.deviation = mean - volume_exact;
  return rep;
}

Json siegel_report_to_json(const SiegelReport& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["p"] = r.p.get_str();
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["volume"] = round_real(r.volume);
  j["volume_exact"] = round_real(r.volume_exact);
  j["mean"] = round_real(r.mean);
  j["stderr"] = round_real(r.stderr_mean);
  j["deviation"] = round_real(r.deviation);
  return j;
}

namespace {

// Exact minimum via shortest-vector enumeration for the three closed-form
// dimensions: 1 (primal SVP), n-1 (dual SVP and duality), n (determinant).
bool exact_min_subdet(const LatticeBasis& basis, int dim_w, Interval* out,
                      long long* candidates) {
  int n = basis.rank();
  if (dim_w == n) {
    *out = root_enclosure(gram_det(basis), 2 * static_cast<unsigned>(n));
    *candidates = 1;
    return true;
  }
  if (dim_w == 1) {
    ShortestVector sv = shortest_vector(basis);
    *out = sqrt_enclosure(sv.norm_sq);
    *candidates = 1;
    return true;
  }
  if (dim_w == n - 1) {
    // min det(L cap W) over hyperplane subspaces = det(L) * lambda1(dual).
    ShortestVector sv = shortest_vector(dual_basis(basis));
    Rat det_sq = gram_det(basis) * sv.norm_sq;  // (det * ||u*||)^2
    *out = root_enclosure(det_sq, 2 * static_cast<unsigned>(dim_w));
    *candidates = 1;
    return true;
  }
  return false;
}

}  // namespace

SubdetStatistic min_subdet_statistics(const LatticeBasis& basis, int dim_w, int effort) {
  int n = basis.rank();
  if (dim_w < 1 || dim_w > n) throw std::invalid_argument("subspace dimension out of range");

  SubdetStatistic stat;
  stat.dim_w = dim_w;
  if (exact_min_subdet(basis, dim_w, &stat.min_normalized_det, &stat.candidates_examined)) {
    stat.exact = true;
    return stat;
  }

  // Heuristic: pool of reduced basis vectors and short lattice vectors.
  LatticeBasis reduced = lll_reduce(basis);
  Rat pool_r2(0);
  for (const auto& c : reduced.columns) {
    Rat nsq = norm_sq(c);
    if (nsq > pool_r2) pool_r2 = nsq;
  }
  std::vector<Point> pool;
  for_each_point_in_ball(reduced, Ball::origin_r2(basis.ambient_dim(), pool_r2),
                         [&](const IntVec& x) {
                           bool zero = true;
                           for (const auto& xi : x)
                             if (xi != 0) {
                               zero = false;
                               break;
                             }
                           if (!zero) pool.push_back(lattice_point(reduced, x));
                         });
  std::sort(pool.begin(), pool.end(), [](const Point& a, const Point& b) {
    Rat na = norm_sq(a), nb = norm_sq(b);
    if (na != nb) return na < nb;
    return lex_less(a, b);
  });
  // Keep one representative per +-pair, capped by effort.
  std::vector<Point> vectors;
  for (const auto& p : pool) {
    bool dup = false;
    for (const auto& q : vectors) {
      if (p == q || p == -q) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    vectors.push_back(p);
    if (static_cast<int>(vectors.size()) >= std::max(effort, n)) break;
  }

  bool have = false;
  Interval best{Rat(0), Rat(0)};
  long long examined = 0;
  std::vector<int> subset(dim_w);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (examined > 200000) return;
    if (depth == dim_w) {
      std::vector<Point> span;
      span.reserve(dim_w);
      for (int i : subset) span.push_back(vectors[i]);
      RatMat rows;
      for (const auto& p : span) rows.push_back(p.coords);
      if (rank(rows) != dim_w) return;
      ++examined;
      LatticeBasis sub = sublattice_in_subspace(basis, Subspace{span});
      Interval nd = root_enclosure(gram_det(sub), 2 * static_cast<unsigned>(dim_w));
      if (!have || nd.hi < best.hi) {
        best = nd;
        have = true;
      }
      return;
    }
    for (int i = start; i < static_cast<int>(vectors.size()); ++i) {
      subset[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  if (!have) throw std::logic_error("no candidate subspace found");
  stat.min_normalized_det = best;
  stat.candidates_examined = examined;
  stat.exact = false;
  return stat;
}

SubdetSummary min_subdet_all_dims(const LatticeBasis& basis, int effort) {
  int n = basis.rank();
  SubdetSummary summary;
  summary.exact = true;
  bool have = false;
  for (int k = 1; k <= n; ++k) {
    SubdetStatistic s = min_subdet_statistics(basis, k, effort);
    summary.candidates_examined += s.candidates_examined;
    if (!s.exact) summary.exact = false;
    if (!have || s.min_normalized_det.hi < summary.r_value.hi) {
      summary.r_value = s.min_normalized_det;
      have = true;
    }
  }
  return summary;
}

ExperimentReport check_reverse_minkowski(const LatticeBasis& basis, const Rat& r, int effort) {
  int n = basis.rank();
  if (n < 2) throw std::invalid_argument("reverse Minkowski check requires n >= 2");
  auto t0 = std::chrono::steady_clock::now();

  SubdetSummary rmin = min_subdet_all_dims(basis, effort);
  // Sound hypothesis value: every normalized sub-determinant is >= r_value.lo.
  Rat r_used = rmin.r_value.lo;
  if (r < r_used) throw std::invalid_argument("hypothesis r >= R not met");

  Ball ball = Ball::origin_r2(basis.ambient_dim(), r * r);
  long long count = count_points_in_ball(basis, ball);

  double ratio = to_double(r / r_used);
  double logn = std::log(static_cast<double>(n));
  double ln_rhs = std::log(1.5) + 500.0 * (logn * ratio) * (logn * ratio);
  bool overflow = ln_rhs > 700.0;
  double rhs = overflow ? std::numeric_limits<double>::max() : 1.5 * std::exp(500.0 * (logn * ratio) * (logn * ratio));

  Json inputs = Json::object();
  inputs["n"] = n;
  inputs["r"] = format_rational(r);
  inputs["R"] = round_real(rmin.r_value.mid());
  inputs["R_exact"] = rmin.exact;
  inputs["candidates_examined"] = rmin.candidates_examined;
  inputs["rhs_log_e"] = round_real(ln_rhs);
  if (overflow) inputs["rhs_capped"] = true;

  ExperimentReport rep;
  rep.name = "reverse_minkowski";
  rep.inputs = std::move(inputs);
  rep.lhs = Scalar::count(count);
  rep.rhs = Scalar::real(rhs);
  rep.relation = Relation::le;
  // In log space: count <= exp(ln_rhs)?
  rep.pass = std::log(std::max(1.0, static_cast<double>(count))) <= ln_rhs + 1e-9;
  if (!rep.pass && !rmin.exact) {
    rep.notes.push_back("inconclusive: heuristic R is an upper bound on the true minimum");
    rep.gating = false;
  }
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace latgap
