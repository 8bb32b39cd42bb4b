#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "latgap/rational.hpp"

namespace latgap {

using Json = nlohmann::ordered_json;

// Either an exact integer or a 12-significant-digit real.
struct Scalar {
  bool is_int = true;
  Int i;
  double f = 0.0;

  static Scalar integer(Int v) { return Scalar{true, std::move(v), 0.0}; }
  static Scalar count(long long v) { return Scalar{true, Int(static_cast<long>(v)), 0.0}; }
  static Scalar real(double v) { return Scalar{false, Int(0), v}; }

  double as_double() const { return is_int ? i.get_d() : f; }
};

enum class Relation { le, ge, eq };

std::string relation_symbol(Relation r);

// Integer comparisons are exact; comparisons involving a real side allow a
// relative tolerance on the real operand.
bool relation_holds(const Scalar& lhs, const Scalar& rhs, Relation rel,
                    double real_rel_tol = 1e-9);

// One named inequality check with both sides recorded.
struct ExperimentReport {
  std::string name;
  Json inputs = Json::object();
  Scalar lhs;
  Scalar rhs;
  Relation relation = Relation::le;
  bool pass = false;
  std::uint64_t seed = 0;
  long long runtime_ms = 0;
  // Asymptotic statements are reported but never decide success.
  bool gating = true;
  std::vector<std::string> notes;
};

ExperimentReport make_report(std::string name, Json inputs, Scalar lhs, Scalar rhs,
                             Relation rel, std::uint64_t seed = 0);

// Round-half-even, 12 significant digits.
std::string format_real(double v);
double round_real(double v);

Json scalar_to_json(const Scalar& s);
Json report_to_json(const ExperimentReport& r);
std::string report_csv_header();
std::string report_csv_row(const ExperimentReport& r);

}  // namespace latgap
