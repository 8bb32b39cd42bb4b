#include "latgap/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace latgap {

namespace {

Json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

Json rat_to_json(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return Json::array({int_to_json(c.get_num()), int_to_json(c.get_den())});
}

Rat rat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
  Int num = int_from_json(j[0]);
  Int den = int_from_json(j[1]);
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords) arr.push_back(rat_to_json(c));
  return arr;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("point must be a nonempty array");
  Point p;
  p.coords.reserve(j.size());
  for (const auto& c : j) p.coords.push_back(rat_from_json(c));
  return p;
}

Json basis_to_json(const LatticeBasis& b) {
  Json j = Json::object();
  j["dim"] = b.ambient_dim();
  Json cols = Json::array();
  for (const auto& c : b.columns) cols.push_back(point_to_json(c));
  j["columns"] = cols;
  return j;
}

LatticeBasis basis_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("columns")) {
    throw std::invalid_argument("lattice basis needs fields dim and columns");
  }
  int n = j["dim"].get<int>();
  std::vector<Point> cols;
  for (const auto& c : j["columns"]) {
    Point p = point_from_json(c);
    if (p.dim() != n) throw std::invalid_argument("dimension mismatch");
    cols.push_back(std::move(p));
  }
  return make_basis(std::move(cols));
}

Json pointset_to_json(const PointSet& s) {
  Json arr = Json::array();
  for (const auto& p : s.sorted_points()) arr.push_back(point_to_json(p));
  return arr;
}

PointSet pointset_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("point set must be a nonempty array");
  Point first = point_from_json(j[0]);
  PointSet s(first.dim());
  s.insert(first);
  for (std::size_t i = 1; i < j.size(); ++i) s.insert(point_from_json(j[i]));
  return s;
}

Json gap_to_json(const Gap& g) {
  Json j = Json::object();
  j["x0"] = point_to_json(g.x0);
  Json gens = Json::array();
  for (const auto& v : g.gens) gens.push_back(point_to_json(v));
  j["gens"] = gens;
  j["lo"] = g.lo;
  j["hi"] = g.hi;
  return j;
}

Gap gap_from_json(const Json& j) {
  for (const char* field : {"x0", "gens", "lo", "hi"}) {
    if (!j.contains(field)) throw std::invalid_argument("GAP needs fields x0, gens, lo, hi");
  }
  Point x0 = point_from_json(j["x0"]);
  std::vector<Point> gens;
  for (const auto& v : j["gens"]) gens.push_back(point_from_json(v));
  std::vector<long long> lo = j["lo"].get<std::vector<long long>>();
  std::vector<long long> hi = j["hi"].get<std::vector<long long>>();
  return make_gap(std::move(x0), std::move(gens), std::move(lo), std::move(hi));
}

Json subspace_to_json(const Subspace& w) {
  Json j = Json::object();
  Json arr = Json::array();
  for (const auto& p : w.spanning) arr.push_back(point_to_json(p));
  j["spanning"] = arr;
  return j;
}

Subspace subspace_from_json(const Json& j) {
  if (!j.contains("spanning")) throw std::invalid_argument("subspace needs field spanning");
  std::vector<Point> pts;
  for (const auto& p : j["spanning"]) pts.push_back(point_from_json(p));
  return make_subspace(std::move(pts));
}

Json polytope_to_json(const VPolytope& p) {
  Json j = Json::object();
  Json arr = Json::array();
  for (const auto& v : p.vertices) arr.push_back(point_to_json(v));
  j["vertices"] = arr;
  return j;
}

VPolytope polytope_from_json(const Json& j) {
  if (!j.contains("vertices")) throw std::invalid_argument("polytope needs field vertices");
  std::vector<Point> verts;
  for (const auto& v : j["vertices"]) verts.push_back(point_from_json(v));
  return make_polytope(std::move(verts));
}

Json doubling_to_json(const DoublingReport& r) {
  Json j = Json::object();
  j["size_a"] = r.size_a;
  j["size_aa"] = r.size_aa;
  j["doubling"] = rat_to_json(r.doubling);
  j["doubling_real"] = round_real(to_double(r.doubling));
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << "\n";
}

}  // namespace latgap
