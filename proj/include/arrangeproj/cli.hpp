#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arrangeproj/combinatorics.hpp"
#include "arrangeproj/geometry.hpp"
#include "arrangeproj/polynomial.hpp"

namespace arrangeproj::cli {

// ---------------------------------------------------------------- graph files
//
//   # comment
//   n 3
//   e 1 2
//   e 2 3
//
// One `n` line before any `e` line; 1 <= i < j <= n; no duplicate edges.

/// Throws ParseError, RangeError or DuplicateEdge, each carrying the line number.
Graph parse_graph(const std::string& text);
/// Throws std::runtime_error if the file cannot be read, else as parse_graph.
Graph parse_graph_file(const std::filesystem::path& path);
/// Canonical text: `n` line then edges in lexicographic order.
std::string serialize_graph(const Graph& g);
/// "n=3 e=1-2,2-3" for report lines.
std::string describe_graph(const Graph& g);

/// Human form then machine form, each newline-terminated:
///   q^3 - 3q^2 + 2q
///   coeffs_ascending=[0,2,-3,1]
std::string emit_polynomial(const IntPolynomial& p);

/// Comma-separated rationals ("16,4,1" or "1/2,-3"). Throws InvalidPoint.
RationalPoint parse_point(const std::string& csv);

// ---------------------------------------------------------------- commands

enum class Method { chromatic, mobius, projection, product };

/// Throws std::invalid_argument for an unknown name.
Method parse_method(const std::string& name);

/// `point` overrides graphical_generic_point(n) for the projection method and
/// must pass validate_point_graphical. Throws NotNUI for `product` on a
/// non-NUI graph, InvalidPoint for a rejected point.
std::string cmd_charpoly(const Graph& g, Method method, const std::optional<RationalPoint>& point = {});

/// One row per acyclic orientation: arcs, source components, pd, projection
/// point, and the lex-min extension when the graph is NUI.
std::string cmd_regions(const Graph& g, const std::optional<RationalPoint>& point = {});

enum class Family { all_graphs, nui, braid };
Family parse_family(const std::string& name);
std::string family_name(Family f);

struct VerifyOptions {
  Family family = Family::braid;
  int max_n = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 10;
};

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  bool passed = true;
  std::optional<std::string> counterexample;  // first failure
  double seconds = 0;
};

struct VerificationReport {
  VerifyOptions options;
  std::vector<std::string> notes;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Deterministic for fixed options; wall time appears only when asked for.
  std::string to_text(bool with_timing = false) const;
};

/// Default ceiling on max_n: 6, or 5 for exhaustive all-graphs runs.
/// ARRANGEPROJ_MAX_N replaces both when set.
int max_n_ceiling(Family family);

/// Throws CeilingExceeded when options.max_n is above max_n_ceiling.
VerificationReport cmd_verify(const VerifyOptions& options);

/// SVG of the section of A_G by the plane x1 + x2 + x3 = 0: one line per
/// hyperplane, a label per region, v's image, and each region's projection
/// point with its pd. Throws UnsupportedDimension unless n == 3.
std::string cmd_render(const Graph& g, const std::optional<RationalPoint>& point = {});

}  // namespace arrangeproj::cli
