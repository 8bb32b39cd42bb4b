#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latgap {

using Rat = mpq_class;
using Int = mpz_class;

// Floor, ceiling and nearest-integer (half away from zero) of a rational.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
Int rat_round(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

// GMP's C++ classes take long, not long long (identical on LP64).
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

// Parses "p/q" or "p"; throws std::invalid_argument on garbage.
Rat parse_rational(const std::string& s);
std::string format_rational(const Rat& q);

// A closed interval [lo, hi] with exact rational endpoints, used to report
// values such as sqrt(det) that are irrational in general.
struct Interval {
  Rat lo;
  Rat hi;

  Rat width() const { return hi - lo; }
  double mid() const { return to_double((lo + hi) / 2); }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  // Certified comparisons: true only when the relation holds for every
  // point of both intervals.
  bool certainly_le(const Rat& x) const { return hi <= x; }
  bool certainly_ge(const Rat& x) const { return lo >= x; }
};

// Enclosure of sqrt(q) with width <= 2^-63 (exact point interval when q is
// the square of a rational). Throws std::domain_error for q < 0.
Interval sqrt_enclosure(const Rat& q);

// Enclosure of q^(1/k) with width <= 2^-64, q >= 0, k >= 1.
Interval root_enclosure(const Rat& q, unsigned k);

// Largest integer x with x <= c + sqrt(t/b) and smallest with x >= c - sqrt(t/b),
// for rationals c, t >= 0, b > 0.  Seeds from doubles, then corrects against the
// exact predicate b*(x-c)^2 <= t, so results are exact for any magnitudes.
Int floor_center_plus_sqrt(const Rat& c, const Rat& t, const Rat& b);
Int ceil_center_minus_sqrt(const Rat& c, const Rat& t, const Rat& b);

// FNV/splitmix-style hash over the limbs of an mpz (sign-sensitive).
std::uint64_t hash_int(const Int& z, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace latgap
