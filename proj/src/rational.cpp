#include "latgap/rational.hpp"

#include <cmath>

namespace latgap {

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int rat_round(const Rat& q) {
  // round half away from zero: floor((2p + q)/2q) style, done via floor(q + 1/2)
  // adjusted for negatives so that round(-1/2) = -1.
  if (q >= 0) {
    return rat_floor(q + Rat(1, 2));
  }
  return rat_ceil(q - Rat(1, 2));
}

Rat parse_rational(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("cannot parse rational: " + s);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + s);
  }
  q.canonicalize();
  return q;
}

std::string format_rational(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Interval sqrt_enclosure(const Rat& q) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return {Rat(0), Rat(0)};

  // Exact case: both numerator and denominator perfect squares.
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat r(sn, sd);
    r.canonicalize();
    return {r, r};
  }

  // r = floor(sqrt(floor(q * 4^m))) gives sqrt(q) in [r, r+2] / 2^m.
  constexpr unsigned long m = 64;
  Int scaled = (num << (2 * m)) / den;
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Int two_m = Int(1) << m;
  Rat lo(root, two_m);
  Rat hi(root + 2, two_m);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Interval root_enclosure(const Rat& q, unsigned k) {
  if (k == 0) throw std::domain_error("zeroth root");
  if (q < 0) throw std::domain_error("root of negative rational");
  if (q == 0) return {Rat(0), Rat(0)};
  if (k == 1) return {q, q};
  if (k == 2) return sqrt_enclosure(q);

  const Int& num = q.get_num();
  const Int& den = q.get_den();
  {
    Int rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k);
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k);
    if (exact_n && exact_d) {
      Rat r(rn, rd);
      r.canonicalize();
      return {r, r};
    }
  }
  // y = floor((floor(q * 2^(k*m)))^(1/k)) encloses q^(1/k)*2^m in [y, y+1).
  constexpr unsigned long m = 64;
  Int scaled = (num << (k * m)) / den;
  Int root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);
  Int two_m = Int(1) << m;
  Rat lo(root, two_m);
  Rat hi(root + 1, two_m);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

namespace {

// Exact predicate x <= c + sqrt(t/b), monotone decreasing in x.
bool below_upper(const Int& x, const Rat& c, const Rat& t, const Rat& b) {
  Rat d = Rat(x) - c;
  if (d <= 0) return true;
  return b * d * d <= t;
}

}  // namespace

Int floor_center_plus_sqrt(const Rat& c, const Rat& t, const Rat& b) {
  if (t < 0) throw std::domain_error("negative radicand");
  if (b <= 0) throw std::domain_error("nonpositive divisor");
  double guess = to_double(c) + std::sqrt(to_double(t) / to_double(b));
  Int x;
  if (std::isfinite(guess) && std::abs(guess) < 9e18) {
    mpz_set_d(x.get_mpz_t(), std::floor(guess));
  } else {
    x = rat_floor(c);
  }
  while (below_upper(x + 1, c, t, b)) x += 1;
  while (!below_upper(x, c, t, b)) x -= 1;
  return x;
}

Int ceil_center_minus_sqrt(const Rat& c, const Rat& t, const Rat& b) {
  return -floor_center_plus_sqrt(-c, t, b);
}

std::uint64_t hash_int(const Int& z, std::uint64_t seed) {
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
  };
  std::uint64_t h = seed;
  int sign = mpz_sgn(z.get_mpz_t());
  h = mix(h, static_cast<std::uint64_t>(sign + 1));
  std::size_t n = mpz_size(z.get_mpz_t());
  const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) {
    h = mix(h, static_cast<std::uint64_t>(limbs[i]));
  }
  return h;
}

}  // namespace latgap
