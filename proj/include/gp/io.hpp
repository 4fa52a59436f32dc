#pragma once

#include <optional>
#include <string>

#include "gp/construction.hpp"
#include "gp/lattice.hpp"
#include "gp/monotone.hpp"
#include "gp/solver.hpp"

namespace gp::io {

// Shared point-set formats.
//   JSON: {"dim": n, "points": [[c1,...,cn], ...]} with an optional
//         "convention" marker ("paper-1-based" for box data).
//   CSV:  header x1,...,xn, one point per row.

std::string points_to_json(const PointSet& s, const std::optional<std::string>& convention = {});
PointSet points_from_json(const std::string& text);

std::string points_to_csv(const PointSet& s);
PointSet points_from_csv(const std::string& text);

/// Load from a file path ("-" reads stdin). Format by extension, otherwise
/// sniffed: JSON if the first non-space byte is '{'.
PointSet load_points(const std::string& path);

/// Row-per-coordinate CSV of an extremal set, one header row of indices and
/// one row per coordinate:
///   i,1,2,...,N
///   x_{i,1},...
std::string table_csv(const ExtremalSet& x);

std::string witness_to_json(const WitnessTriple& t);
/// Witness plus the per-coordinate reduction trace of the extractor.
std::string witness_search_to_json(const WitnessSearch& search, bool include_trace);

/// "box:4x4", "torus:8x8x8", "lattice:3".
GridSpec parse_grid(const std::string& text);

struct SolveReport {
  const GridSpec& grid;
  const SolveResult& result;
  SolveMode mode;
  bool include_stats = false;  // nodes / elapsed vary with threads and wall time
};
std::string solve_report_to_json(const SolveReport& report);

}  // namespace gp::io
