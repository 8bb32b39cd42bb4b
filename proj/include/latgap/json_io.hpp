#pragma once

#include "latgap/enumerate.hpp"
#include "latgap/gap.hpp"
#include "latgap/lattice.hpp"
#include "latgap/report.hpp"
#include "latgap/sumset.hpp"

namespace latgap {

// Rationals serialize as [num, den] in lowest terms with den > 0; values
// beyond 64 bits fall back to decimal strings.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

// {"dim": n, "columns": [[[num,den], ...], ...]}
Json basis_to_json(const LatticeBasis& b);
LatticeBasis basis_from_json(const Json& j);

// Sorted array of coordinate vectors.
Json pointset_to_json(const PointSet& s);
PointSet pointset_from_json(const Json& j);

// {"x0": ..., "gens": [...], "lo": [...], "hi": [...]}
Json gap_to_json(const Gap& g);
Gap gap_from_json(const Json& j);

// {"spanning": [...]}
Json subspace_to_json(const Subspace& w);
Subspace subspace_from_json(const Json& j);

// {"vertices": [...]}
Json polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const Json& j);

Json doubling_to_json(const DoublingReport& r);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace latgap
