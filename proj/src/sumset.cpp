#include "latgap/sumset.hpp"

#include <stdexcept>

#include "latgap/matq.hpp"

namespace latgap {

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  int n = a.dim();

  Int den;
  mpz_lcm(den.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  Int fa = den / a.den();
  Int fb = den / b.den();

  // Pre-scale both operands onto the common denominator once.
  auto scaled = [n](const PointSet& s, const Int& f) {
    std::vector<Int> flat(s.size() * n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Int* r = s.row(i);
      for (int k = 0; k < n; ++k) flat[i * n + k] = r[k] * f;
    }
    return flat;
  };
  std::vector<Int> sa = scaled(a, fa);
  std::vector<Int> sb = scaled(b, fb);

  PointSet out(n);
  out.rescale_to(den);
  out.reserve(a.size() + b.size());
  IntVec row(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Int* ra = &sa[i * n];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Int* rb = &sb[j * n];
      for (int k = 0; k < n; ++k) row[k] = ra[k] + rb[k];
      out.insert_row(row.data());
    }
  }
  return out;
}

DoublingReport doubling_factor(const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("empty set has no doubling factor");
  PointSet aa = minkowski_sum(a, a);
  DoublingReport r;
  r.size_a = static_cast<long long>(a.size());
  r.size_aa = static_cast<long long>(aa.size());
  r.doubling = Rat(static_cast<long>(r.size_aa), static_cast<long>(r.size_a));
  r.doubling.canonicalize();
  return r;
}

PointSet translate(const PointSet& a, const Point& t) {
  if (a.dim() != t.dim()) throw std::invalid_argument("dimension mismatch");
  PointSet out(a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) out.insert(a.at(i) + t);
  return out;
}

}  // namespace latgap
