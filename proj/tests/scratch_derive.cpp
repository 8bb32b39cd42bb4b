// Scratch utility used while pinning expected values; not part of the suite.
#include <iostream>

#include "latgap/experiments.hpp"
#include "oracles.hpp"

using namespace latgap;

int main() {
  // Ball counts on Z^2 / Z^3.
  auto z2 = LatticeBasis::standard(2);
  auto z3 = LatticeBasis::standard(3);

  auto b_r2 = Ball::origin(2, Rat(2));
  auto a13 = oracle::points_in_ball(z2, b_r2);
  std::cout << "Z2 r=2 count: " << a13.size() << "\n";
  auto aa = oracle::minkowski_sum(a13, a13);
  std::cout << "Z2 r=2 |A+A|: " << aa.size() << "\n";

  std::cout << "Z2 r=5 count: " << oracle::points_in_ball(z2, Ball::origin(2, Rat(5))).size()
            << "\n";
  std::cout << "Z3 r=1 count: " << oracle::points_in_ball(z3, Ball::origin(3, Rat(1))).size()
            << "\n";
  std::cout << "Z3 r=3/2 count: "
            << oracle::points_in_ball(z3, Ball::origin(3, Rat(3, 2))).size() << "\n";
  std::cout << "Z3 r=2 count: " << oracle::points_in_ball(z3, Ball::origin(3, Rat(2))).size()
            << "\n";

  // Ball r=1 on Z^2, then the sumset (5 points -> 13 sums).
  auto a5 = oracle::points_in_ball(z2, Ball::origin(2, Rat(1)));
  std::cout << "Z2 r=1 count: " << a5.size()
            << " sumset: " << oracle::minkowski_sum(a5, a5).size() << "\n";

  // Counterexample body.
  for (long long N : {1, 2, 5}) {
    auto body = counterexample_body(N);
    auto a = oracle::integer_points_in_polytope(body);
    auto s = oracle::minkowski_sum(a, a);
    std::cout << "nonsym N=" << N << " |A|=" << a.size() << " |A+A|=" << s.size() << "\n";
  }

  // Cross polytope |x|+|y| <= 3.
  VPolytope cross = make_polytope({Point({Rat(3), Rat(0)}), Point({Rat(-3), Rat(0)}),
                                   Point({Rat(0), Rat(3)}), Point({Rat(0), Rat(-3)})});
  std::cout << "cross3 count: " << oracle::integer_points_in_polytope(cross).size() << "\n";

  // Minkbound counts.
  for (int n : {2, 3}) {
    Rat r2 = main_radius_sq(n);
    auto zn = LatticeBasis::standard(n);
    auto pts = oracle::points_in_ball(zn, Ball::origin_r2(n, r2));
    std::cout << "minkbound n=" << n << " radius_sq~" << to_double(r2)
              << " count=" << pts.size() << "\n";
  }

  // Z2 lattice {(1,0),(10^6,1)} LLL.
  auto skew = make_basis({Point({Rat(1), Rat(0)}), Point({Rat(1000000), Rat(1)})});
  auto red = lll_reduce(skew);
  std::cout << "skew reduced norms:";
  for (auto& c : red.columns) std::cout << " " << format_rational(norm_sq(c));
  std::cout << "\n";

  // Determinant sqrt(3) check.
  auto b3 = make_basis({Point({Rat(1), Rat(1), Rat(0)}), Point({Rat(0), Rat(1), Rat(1)})});
  auto det3 = determinant(b3);
  std::cout << "det enclosure: [" << format_rational(det3.lo) << ", (width "
            << to_double(det3.width()) << ")] mid=" << det3.mid() << "\n";

  // Sublattice examples.
  {
    auto z2b = LatticeBasis::standard(2);
    auto sub = sublattice_in_subspace(z2b, make_subspace({Point({Rat(1), Rat(1)})}));
    std::cout << "Z2 cap span(1,1): det mid " << determinant(sub).mid() << "\n";
    auto l2 = make_basis({Point({Rat(2), Rat(0)}), Point({Rat(1), Rat(1)})});
    auto sub2 = sublattice_in_subspace(l2, make_subspace({Point({Rat(1), Rat(0)})}));
    std::cout << "saturated gen: " << format_rational(sub2.columns[0][0]) << ","
              << format_rational(sub2.columns[0][1]) << "\n";
  }

  // Siegel smoke at n=2.
  {
    auto cfg = make_random_lattice_config(2, Int(100003), 7);
    auto rep = siegel_mean_value_check(cfg, 1.0, 400);
    std::cout << "siegel n=2 vol=1: mean=" << rep.mean << " stderr=" << rep.stderr_mean
              << "\n";
  }
  return 0;
}
