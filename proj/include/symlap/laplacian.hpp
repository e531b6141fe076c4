#pragma once

#include <span>
#include <vector>

#include "symlap/graph.hpp"
#include "symlap/linalg.hpp"

namespace symlap {

/// Directed version of an undirected edge.
struct Arc {
  Vertex source = 0;
  Vertex sink = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Vertex-by-edge incidence matrix: column e has +1 at its source row and
/// -1 at its sink row. Columns follow g.edges() order.
struct OrientedIncidence {
  Matrix m_matrix;
  std::vector<Arc> orientation;
};

/// L = D - A
SymMatrix combinatorial(const Graph& g);
/// L+ = D + A
SymMatrix positive(const Graph& g);

/// D^{-1/2} L D^{-1/2}, computed by matrix products and cross-checked
/// against the entrywise form (symmetric_entrywise) to 1e-14. Throws
/// PreconditionError when any vertex is isolated.
SymMatrix symmetric(const Graph& g);
/// Unit diagonal, -1/sqrt(d_i d_j) between neighbours, zero elsewhere.
SymMatrix symmetric_entrywise(const Graph& g);
/// D^{-1/2} L+ D^{-1/2} = 2I - symmetric(g).
SymMatrix positive_symmetric(const Graph& g);

/// Default orientation: the smaller endpoint is the source.
OrientedIncidence incidence(const Graph& g);
/// `sources[e]` picks the source endpoint of g.edges()[e]; it must be one
/// of that edge's endpoints.
OrientedIncidence incidence(const Graph& g, std::span<const Vertex> sources);

/// S = D^{-1/2} M. S S^T equals symmetric(g) for every orientation.
Matrix normalized_incidence(const Graph& g, const OrientedIncidence& inc);

/// Edge-doubled normalized incidence, n x 2m. Columns are the arcs (i, j)
/// with i < j in lexicographic order, then the reversed arcs (j, i) in
/// lexicographic order. Column (i, j) is v_i/sqrt(d_i) - v_j/sqrt(d_j) and
/// its reverse is the negation, so S S^T = 2 * symmetric(g).
struct DoubledIncidence {
  Matrix s_bar;
  std::vector<Arc> arcs;
};
DoubledIncidence doubled_incidence(const Graph& g);

}  // namespace symlap
