#pragma once

#include <string>
#include <vector>

#include "symlap/entropy.hpp"
#include "symlap/graph.hpp"

namespace symlap {

/// Margins at or above this count as holding. Applies to strict
/// inequalities too, so a boundary tie passes and is flagged.
inline constexpr double kMarginTol = -1e-10;

/// One evaluated inequality, oriented so that it holds when margin >= 0.
/// `lhs` and `rhs` are the two sides as written; margin is the larger
/// expected side minus the smaller.
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool strict = false;
  bool holds = false;
  /// Strict inequality that passed only through the tolerance.
  bool boundary = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;

  bool all_hold() const noexcept;
  const BoundCheck& at(const std::string& name) const;
};

/// lhs >= rhs (or lhs > rhs when strict).
BoundCheck check_at_least(std::string name, double lhs, double rhs, bool strict);
/// lhs <= rhs (or lhs < rhs when strict).
BoundCheck check_at_most(std::string name, double lhs, double rhs, bool strict);

/// Von Neumann entropy of the n-cycle, eigensolved once per n.
double cycle_vn(int n);
/// log(2n/3)
double cycle_renyi2(int n);

/// Renyi-2 entropy from the squared entries of the symmetric Laplacian:
/// -log(sum_ij L_ij^2 / n^2).
double renyi2_entrywise(const Graph& g);

/// Checks "renyi2_lower" H_2 >= log(n^2/(n + sum 1/sqrt d_i)), "renyi2_floor_above_half" that
/// bound > log n - log 2, "renyi2_vs_cycle" H_2 > log(2n/3) - log(4/3) and "vn_vs_cycle"
/// H > H(C_n) - log(4 sqrt 2 / 3). Requires connected, n >= 3.
BoundReport theorem2_check(const Graph& g);

/// "p=<order>" H_p(G) <= H_p(K_n) for each order in the grid and "vn_max"
/// H(G) <= log(n-1). Throws RangeError for orders below 1.
BoundReport theorem1_check(const Graph& g, const std::vector<double>& p_grid);

/// "lower" 0 <= H - H_2 and "upper" H - H_2 <= log(2)/2.
BoundReport lemma5_check(const Graph& g);

struct Lemma6Vertex {
  Vertex vertex = 0;
  /// (1/d_i) sum_{j ~ i} 1/d_j
  double lhs = 0.0;
  /// 1/sqrt(d_i)
  double rhs = 0.0;
  bool holds = false;
};

struct Lemma6Report {
  std::vector<Lemma6Vertex> vertices;
  /// Sum of the per-vertex sides, the form that feeds the Renyi-2 bound.
  double aggregate_lhs = 0.0;
  double aggregate_rhs = 0.0;
  bool aggregate_holds = false;

  int vertex_failures() const noexcept;
};

/// Per-vertex and summed neighbour-inverse-degree inequality, 1e-12 slack.
Lemma6Report lemma6_check(const Graph& g);

struct StarComparison {
  int n = 0;
  double star_vn_closed = 0.0;
  double star_vn_eigen = 0.0;
  double cycle_vn = 0.0;
  /// H(star) - H(cycle); strictly positive expected.
  BoundCheck cycle_below_star;
  /// H_2(K_{n-k,k}) eigensolved for k = 1..n-1.
  std::vector<double> bipartite_renyi2;
  double bipartite_renyi2_closed = 0.0;
  double cycle_renyi2 = 0.0;
  /// H_2(K_{n-k,k}) >= H_2(C_n) for every k.
  BoundCheck bipartite_above_cycle;
  /// log(n-1) - H(star)
  double gap_to_max = 0.0;
};

/// Requires n >= 4.
StarComparison star_comparison(int n);

struct Violation {
  Bitmask bitmask = 0;
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct ScanOptions {
  std::vector<double> p_grid{1.0, 2.0, 3.0};
  int threads = 1;
  /// Required for n = 7.
  bool allow_large = false;
};

/// Findings that never count as violations.
struct ScanInformational {
  long lemma6_vertex_failures = 0;
  long lemma6_graphs_with_failure = 0;
  long lemma6_aggregate_failures = 0;
  /// Strict inequalities that held only within the tolerance.
  long boundary_passes = 0;
};

struct ScanResult {
  int n = 0;
  long graph_count = 0;
  std::vector<double> p_grid;
  double min_vn = 0.0;
  Bitmask argmin_vn = 0;
  double max_vn = 0.0;
  Bitmask argmax_vn = 0;
  double min_renyi2 = 0.0;
  Bitmask argmin_renyi2 = 0;
  /// Sorted by bitmask, then by check order.
  std::vector<Violation> violations;
  ScanInformational informational;
};

/// Exhaustive verification over every connected graph on n vertices
/// (3 <= n <= 6, or 7 with allow_large). Each graph runs theorem1_check,
/// theorem2_check, lemma5_check, lemma6_check (informational) and the
/// construction identities: spectrum of the symmetric Laplacian inside
/// [0, 2], a simple zero eigenvalue, S S^T = 2L for the doubled incidence,
/// and the entrywise Renyi-2 route (plus the regular-graph closed form).
/// Partitions of the bitmask range are merged in bitmask order, so the
/// result does not depend on `threads`.
ScanResult scan(int n, const ScanOptions& options = {});

}  // namespace symlap
