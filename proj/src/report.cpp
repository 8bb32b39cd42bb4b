#include "latgap/report.hpp"

#include <cmath>
#include <cstdio>

namespace latgap {

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "==";
  }
  return "?";
}

bool relation_holds(const Scalar& lhs, const Scalar& rhs, Relation rel, double real_rel_tol) {
  if (lhs.is_int && rhs.is_int) {
    int c = cmp(lhs.i, rhs.i);
    switch (rel) {
      case Relation::le: return c <= 0;
      case Relation::ge: return c >= 0;
      case Relation::eq: return c == 0;
    }
  }
  double l = lhs.as_double();
  double r = rhs.as_double();
  double slack = real_rel_tol * std::max(1.0, std::abs(r));
  switch (rel) {
    case Relation::le: return l <= r + slack;
    case Relation::ge: return l >= r - slack;
    case Relation::eq: return std::abs(l - r) <= slack;
  }
  return false;
}

ExperimentReport make_report(std::string name, Json inputs, Scalar lhs, Scalar rhs,
                             Relation rel, std::uint64_t seed) {
  ExperimentReport rep;
  rep.name = std::move(name);
  rep.inputs = std::move(inputs);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.relation = rel;
  rep.pass = relation_holds(rep.lhs, rep.rhs, rel);
  rep.seed = seed;
  return rep;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round_real(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

Json scalar_to_json(const Scalar& s) {
  if (s.is_int) {
    if (s.i.fits_slong_p()) return Json(static_cast<long long>(s.i.get_si()));
    return Json(s.i.get_str());
  }
  return Json(round_real(s.f));
}

Json report_to_json(const ExperimentReport& r) {
  Json j = Json::object();
  j["name"] = r.name;
  j["inputs"] = r.inputs;
  j["lhs"] = scalar_to_json(r.lhs);
  j["rhs"] = scalar_to_json(r.rhs);
  j["relation"] = relation_symbol(r.relation);
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  j["runtime_ms"] = r.runtime_ms;
  j["gating"] = r.gating;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string report_csv_header() {
  return "name,lhs,rhs,relation,pass,seed,runtime_ms,gating";
}

namespace {
std::string scalar_csv(const Scalar& s) {
  if (s.is_int) return s.i.get_str();
  return format_real(s.f);
}
}  // namespace

std::string report_csv_row(const ExperimentReport& r) {
  std::string row = r.name;
  row += ",";
  row += scalar_csv(r.lhs);
  row += ",";
  row += scalar_csv(r.rhs);
  row += ",";
  row += relation_symbol(r.relation);
  row += ",";
  row += r.pass ? "true" : "false";
  row += ",";
  row += std::to_string(r.seed);
  row += ",";
  row += std::to_string(r.runtime_ms);
  row += ",";
  row += r.gating ? "true" : "false";
  return row;
}

}  // namespace latgap
