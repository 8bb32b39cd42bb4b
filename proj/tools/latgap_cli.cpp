// Command-line interface: lattice/GAP utilities plus the named experiment
// verbs, all emitting JSON (or CSV summaries) with deterministic seeding.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "latgap/experiments.hpp"
#include "latgap/json_io.hpp"

using namespace latgap;

namespace {

struct LatticeSource {
  std::string in_file;
  int zn = 0;
  int sample_n = 0;
  std::string sample_p = "1000003";
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", in_file, "lattice basis JSON file");
    cmd->add_option("--zn", zn, "use the integer lattice Z^n");
    cmd->add_option("--sample-n", sample_n, "sample a random determinant-one lattice of this dimension");
    cmd->add_option("--p", sample_p, "prime modulus for sampling");
    cmd->add_option("--seed", seed, "sampler seed");
  }

  LatticeBasis resolve() const {
    if (!in_file.empty()) return basis_from_json(load_json_file(in_file));
    if (zn > 0) return LatticeBasis::standard(zn);
    if (sample_n > 0) {
      auto cfg = make_random_lattice_config(sample_n, Int(sample_p), seed);
      return sample_random_lattice(cfg);
    }
    throw CLI::ValidationError("lattice", "provide one of --in, --zn, --sample-n");
  }
};

void emit(const Json& j, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out_file, j);
  }
}

int finish_reports(std::vector<ExperimentReport> reports, const std::string& out_file,
                   bool csv) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const ExperimentReport& a, const ExperimentReport& b) {
                     if (a.name != b.name) return a.name < b.name;
                     return a.seed < b.seed;
                   });
  if (csv) {
    std::cout << report_csv_header() << "\n";
    for (const auto& r : reports) std::cout << report_csv_row(r) << "\n";
    if (!out_file.empty()) {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      write_json_file(out_file, arr);
    }
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    emit(reports.size() == 1 ? report_to_json(reports[0]) : arr, out_file);
  }
  return all_gating_pass(reports) ? 0 : 1;
}

Rat parse_rat_arg(const std::string& s) { return parse_rational(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice point counting, sumsets and GAP experiments"};
  app.require_subcommand(1);

  std::string out_file;
  bool csv = false;
  app.add_option("--out", out_file, "write JSON output to this file")->configurable(false);
  app.add_flag("--csv", csv, "print reports as CSV");

  int exit_code = 0;

  // --- plumbing verbs -------------------------------------------------
  auto* det_cmd = app.add_subcommand("det", "lattice determinant with certified enclosure");
  LatticeSource det_src;
  det_src.attach(det_cmd);
  det_cmd->callback([&] {
    LatticeBasis b = det_src.resolve();
    Interval d = determinant(b);
    Json j = Json::object();
    j["det"] = round_real(d.mid());
    j["enclosure"] = Json::array({format_rational(d.lo), format_rational(d.hi)});
    j["gram_det"] = format_rational(gram_det(b));
    emit(j, out_file);
  });

  auto* points_cmd = app.add_subcommand("points", "lattice points in a ball");
  LatticeSource points_src;
  points_src.attach(points_cmd);
  std::string radius_str, radius_sq_str;
  bool count_only = false;
  points_cmd->add_option("--radius", radius_str, "ball radius (rational)");
  points_cmd->add_option("--radius-sq", radius_sq_str, "squared ball radius (rational)");
  points_cmd->add_flag("--count-only", count_only, "print the count without materializing");
  points_cmd->callback([&] {
    LatticeBasis b = points_src.resolve();
    Rat r2;
    if (!radius_sq_str.empty()) r2 = parse_rat_arg(radius_sq_str);
    else if (!radius_str.empty()) {
      Rat r = parse_rat_arg(radius_str);
      r2 = r * r;
    } else throw CLI::ValidationError("points", "provide --radius or --radius-sq");
    Ball ball = Ball::origin_r2(b.ambient_dim(), r2);
    if (count_only) {
      Json j = Json::object();
      j["count"] = count_points_in_ball(b, ball);
      emit(j, out_file);
    } else {
      emit(pointset_to_json(points_in_ball(b, ball)), out_file);
    }
  });

  auto* poly_cmd = app.add_subcommand("polypoints", "integer points in a V-polytope");
  std::string poly_in;
  bool poly_count_only = false;
  poly_cmd->add_option("--in", poly_in, "polytope JSON file")->required();
  poly_cmd->add_flag("--count-only", poly_count_only);
  poly_cmd->callback([&] {
    VPolytope p = polytope_from_json(load_json_file(poly_in));
    PointSet pts = integer_points_in_polytope(p);
    if (poly_count_only) {
      Json j = Json::object();
      j["count"] = pts.size();
      emit(j, out_file);
    } else {
      emit(pointset_to_json(pts), out_file);
    }
  });

  auto* sumset_cmd = app.add_subcommand("sumset", "Minkowski sumset of point sets");
  std::string sum_a, sum_b;
  sumset_cmd->add_option("--in", sum_a, "point set JSON file")->required();
  sumset_cmd->add_option("--b", sum_b, "second point set (defaults to the first)");
  sumset_cmd->callback([&] {
    PointSet a = pointset_from_json(load_json_file(sum_a));
    PointSet b = sum_b.empty() ? a : pointset_from_json(load_json_file(sum_b));
    emit(pointset_to_json(minkowski_sum(a, b)), out_file);
  });

  auto* doubling_cmd = app.add_subcommand("doubling", "doubling factor |A+A|/|A|");
  std::string doubling_in;
  doubling_cmd->add_option("--in", doubling_in, "point set JSON file")->required();
  doubling_cmd->callback([&] {
    PointSet a = pointset_from_json(load_json_file(doubling_in));
    emit(doubling_to_json(doubling_factor(a)), out_file);
  });

  // --- gap verbs ------------------------------------------------------
  auto* gap_cmd = app.add_subcommand("gap", "generalized arithmetic progression tools");
  gap_cmd->require_subcommand(1);
  std::string gap_in;
  gap_cmd->add_option("--in", gap_in, "GAP JSON file")->required();

  auto* gap_points_cmd = gap_cmd->add_subcommand("points", "distinct points of the GAP");
  gap_points_cmd->callback([&] {
    Gap g = gap_from_json(load_json_file(gap_in));
    emit(pointset_to_json(gap_points(g)), out_file);
  });

  auto* gap_size_cmd = gap_cmd->add_subcommand("size", "multiset size and distinct count");
  gap_size_cmd->callback([&] {
    Gap g = gap_from_json(load_json_file(gap_in));
    Json j = Json::object();
    Int ms = gap_size_multiset(g);
    j["multiset_size"] = ms.fits_slong_p() ? Json(ms.get_si()) : Json(ms.get_str());
    if (ms <= kDefaultGapCap) j["distinct_points"] = gap_points(g).size();
    emit(j, out_file);
  });

  auto* gap_restrict_cmd = gap_cmd->add_subcommand("restrict", "fix trailing dimensions");
  int cut = 1;
  std::vector<long long> t_values;
  gap_restrict_cmd->add_option("--cut", cut, "first fixed dimension (1-indexed)")->required();
  gap_restrict_cmd->add_option("--t", t_values, "values for dimensions cut..d (omit to list the family)");
  gap_restrict_cmd->callback([&] {
    Gap g = gap_from_json(load_json_file(gap_in));
    if (!t_values.empty() || cut == g.dim() + 1) {
      emit(gap_to_json(restrict_gap(g, cut, t_values)), out_file);
    } else {
      Json arr = Json::array();
      for_each_restriction(g, cut, [&](const std::vector<long long>& t, const Gap& gt) {
        Json e = Json::object();
        e["t"] = t;
        e["gap"] = gap_to_json(gt);
        arr.push_back(std::move(e));
      });
      emit(arr, out_file);
    }
  });

  // --- random lattice verbs -------------------------------------------
  auto* randlat_cmd = app.add_subcommand("randlat", "random determinant-one lattices");
  randlat_cmd->require_subcommand(1);

  auto* sample_cmd = randlat_cmd->add_subcommand("sample", "sample one lattice");
  int rl_n = 3;
  std::string rl_p = "1000003";
  std::uint64_t rl_seed = 0;
  sample_cmd->add_option("--n", rl_n, "dimension")->required();
  sample_cmd->add_option("--p", rl_p, "prime modulus");
  sample_cmd->add_option("--seed", rl_seed, "seed");
  sample_cmd->callback([&] {
    auto cfg = make_random_lattice_config(rl_n, Int(rl_p), rl_seed);
    emit(basis_to_json(sample_random_lattice(cfg)), out_file);
  });

  auto* siegel_cmd = randlat_cmd->add_subcommand("siegel", "mean-value sampler validation");
  int sg_n = 3;
  std::string sg_p = "1000003";
  std::uint64_t sg_seed = 0;
  double sg_vol = 1.0;
  int sg_trials = 2000;
  siegel_cmd->add_option("--n", sg_n, "dimension")->required();
  siegel_cmd->add_option("--vol", sg_vol, "ball volume")->required();
  siegel_cmd->add_option("--trials", sg_trials, "number of trials");
  siegel_cmd->add_option("--p", sg_p, "prime modulus");
  siegel_cmd->add_option("--seed", sg_seed, "seed");
  siegel_cmd->callback([&] {
    auto cfg = make_random_lattice_config(sg_n, Int(sg_p), sg_seed);
    SiegelReport rep = siegel_mean_value_check(cfg, sg_vol, sg_trials);
    emit(siegel_report_to_json(rep), out_file);
    if (std::abs(rep.deviation) > 4 * rep.stderr_mean) exit_code = 1;
  });

  auto* subdet_cmd = randlat_cmd->add_subcommand("subdet", "minimum normalized sub-determinant");
  LatticeSource subdet_src;
  subdet_src.attach(subdet_cmd);
  int subdet_dim = 1;
  int subdet_effort = 40;
  subdet_cmd->add_option("--dim-w", subdet_dim, "subspace dimension")->required();
  subdet_cmd->add_option("--effort", subdet_effort, "candidate pool size");
  subdet_cmd->callback([&] {
    LatticeBasis b = subdet_src.resolve();
    SubdetStatistic s = min_subdet_statistics(b, subdet_dim, subdet_effort);
    Json j = Json::object();
    j["dim_w"] = s.dim_w;
    j["min_normalized_det"] = round_real(s.min_normalized_det.mid());
    j["enclosure"] = Json::array(
        {format_rational(s.min_normalized_det.lo), format_rational(s.min_normalized_det.hi)});
    j["candidates_examined"] = s.candidates_examined;
    j["exact"] = s.exact;
    emit(j, out_file);
  });

  // --- experiment verbs -------------------------------------------------
  auto* claim1_cmd = app.add_subcommand("claim1", "sumset doubling bound for symmetric bodies");
  LatticeSource claim1_src;
  claim1_src.attach(claim1_cmd);
  std::string claim1_radius, claim1_poly;
  int claim1_maxdim = 4;
  claim1_cmd->add_option("--radius", claim1_radius, "ball radius (rational)");
  claim1_cmd->add_option("--body", claim1_poly, "symmetric polytope JSON file");
  claim1_cmd->add_option("--max-dim", claim1_maxdim, "dimension guard");
  claim1_cmd->callback([&] {
    LatticeBasis b = claim1_src.resolve();
    SymmetricBody body;
    if (!claim1_poly.empty()) {
      body = polytope_from_json(load_json_file(claim1_poly));
    } else if (!claim1_radius.empty()) {
      Rat r = parse_rat_arg(claim1_radius);
      body = Ball::origin(b.ambient_dim(), r);
    } else {
      throw CLI::ValidationError("claim1", "provide --radius or --body");
    }
    exit_code = finish_reports({check_claim1(b, body, claim1_maxdim)}, out_file, csv);
  });

  auto* nonsym_cmd = app.add_subcommand("nonsym", "non-symmetric counterexample sizes");
  long long nonsym_N = 1;
  nonsym_cmd->add_option("--N", nonsym_N, "body parameter")->required();
  nonsym_cmd->callback(
      [&] { exit_code = finish_reports({check_nonsymmetric(nonsym_N)}, out_file, csv); });

  auto* blich_cmd = app.add_subcommand("blichfeldt", "point-count lower bound for det <= 1");
  LatticeSource blich_src;
  blich_src.attach(blich_cmd);
  std::string blich_radius;
  blich_cmd->add_option("--radius", blich_radius, "ball radius (rational)")->required();
  blich_cmd->callback([&] {
    LatticeBasis b = blich_src.resolve();
    exit_code = finish_reports({check_blichfeldt(b, parse_rat_arg(blich_radius))}, out_file, csv);
  });

  auto* coroll_cmd = app.add_subcommand("corollary", "subspace point-count bound");
  LatticeSource coroll_src;
  coroll_src.attach(coroll_cmd);
  std::string coroll_w, coroll_radius;
  int coroll_axes = 0;
  double coroll_c1 = 1.0;
  coroll_cmd->add_option("--w", coroll_w, "subspace JSON file");
  coroll_cmd->add_option("--axes", coroll_axes, "use the first k coordinate axes as W");
  coroll_cmd->add_option("--radius", coroll_radius, "ball radius (rational)")->required();
  coroll_cmd->add_option("--c1", coroll_c1, "estimated constant c1");
  coroll_cmd->callback([&] {
    LatticeBasis b = coroll_src.resolve();
    Subspace w;
    if (!coroll_w.empty()) {
      w = subspace_from_json(load_json_file(coroll_w));
    } else if (coroll_axes > 0) {
      std::vector<Point> sp;
      for (int i = 0; i < coroll_axes; ++i) {
        Point e = Point::zero(b.ambient_dim());
        e[i] = 1;
        sp.push_back(std::move(e));
      }
      w = make_subspace(std::move(sp));
    } else {
      throw CLI::ValidationError("corollary", "provide --w or --axes");
    }
    exit_code = finish_reports(
        {check_corollary_count(b, w, parse_rat_arg(coroll_radius), coroll_c1)}, out_file, csv);
  });

  auto* mink_cmd = app.add_subcommand("minkbound", "|A| lower bound at the main radius");
  LatticeSource mink_src;
  mink_src.attach(mink_cmd);
  mink_cmd->callback([&] {
    LatticeBasis b = mink_src.resolve();
    exit_code = finish_reports({check_minkbound(b, b.ambient_dim())}, out_file, csv);
  });

  auto* rmink_cmd = app.add_subcommand("rminkowski", "reverse Minkowski point-count bound");
  LatticeSource rmink_src;
  rmink_src.attach(rmink_cmd);
  std::string rmink_radius;
  int rmink_effort = 40;
  rmink_cmd->add_option("--radius", rmink_radius, "ball radius (rational)")->required();
  rmink_cmd->add_option("--effort", rmink_effort, "candidate pool size");
  rmink_cmd->callback([&] {
    LatticeBasis b = rmink_src.resolve();
    exit_code = finish_reports({check_reverse_minkowski(b, parse_rat_arg(rmink_radius), rmink_effort)},
                               out_file, csv);
  });

  auto* chain_cmd = app.add_subcommand("proofchain", "restriction-argument link checks");
  LatticeSource chain_src;
  chain_src.attach(chain_cmd);
  std::string chain_gap, chain_radius, chain_radius_sq;
  int chain_cut = 1;
  int chain_wdim = -1;
  chain_cmd->add_option("--gap", chain_gap, "GAP JSON file")->required();
  chain_cmd->add_option("--radius", chain_radius, "ball radius (rational)");
  chain_cmd->add_option("--radius-sq", chain_radius_sq, "squared ball radius (rational)");
  chain_cmd->add_option("--cut", chain_cut, "first fixed dimension (1-indexed)")->required();
  chain_cmd->add_option("--w-dim", chain_wdim, "slab dimension (default floor(n/2))");
  chain_cmd->callback([&] {
    LatticeBasis b = chain_src.resolve();
    Rat r2;
    if (!chain_radius_sq.empty()) r2 = parse_rat_arg(chain_radius_sq);
    else if (!chain_radius.empty()) {
      Rat r = parse_rat_arg(chain_radius);
      r2 = r * r;
    } else throw CLI::ValidationError("proofchain", "provide --radius or --radius-sq");
    Gap g = sort_dims_nonincreasing(gap_from_json(load_json_file(chain_gap)));
    ProofChainOptions opts;
    opts.w_dim = chain_wdim;
    exit_code = finish_reports(check_proof_chain(b, r2, g, chain_cut, opts), out_file, csv);
  });

  auto* main_cmd = app.add_subcommand("main", "random-GAP family experiment");
  int main_n = 2;
  int main_gaps = 100;
  std::uint64_t main_seed = 0;
  double main_c = 1.0;
  std::string main_p = "1000003";
  bool main_full = false;
  main_cmd->add_option("--n", main_n, "dimension")->required();
  main_cmd->add_option("--gaps", main_gaps, "GAP family size");
  main_cmd->add_option("--seed", main_seed, "seed");
  main_cmd->add_option("--c", main_c, "dimension slack constant (>= 1)");
  main_cmd->add_option("--p", main_p, "prime modulus");
  main_cmd->add_flag("--full", main_full, "include every per-link report in the output");
  main_cmd->callback([&] {
    auto cfg = make_random_lattice_config(main_n, Int(main_p), main_seed);
    MainExperimentResult res = run_main_experiment(cfg, main_gaps, main_c);
    if (csv) {
      std::cout << report_csv_header() << "\n";
      for (const auto& r : res.reports) std::cout << report_csv_row(r) << "\n";
    }
    if (main_full) {
      Json j = Json::object();
      j["summary"] = res.summary;
      Json arr = Json::array();
      for (const auto& r : res.reports) arr.push_back(report_to_json(r));
      j["reports"] = arr;
      emit(j, out_file);
    } else {
      emit(res.summary, out_file);
    }
    exit_code = res.all_gating_pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
