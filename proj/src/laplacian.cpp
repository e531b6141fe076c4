#include "symlap/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symlap/error.hpp"

namespace symlap {

namespace {

constexpr double kEntrywiseAgreement = 1e-14;

void require_no_isolated(const Graph& g) {
  for (Vertex i = 0; i < g.n(); ++i)
    if (g.degree(i) == 0)
      throw PreconditionError("vertex " + std::to_string(i) +
                              " is isolated; the symmetric Laplacian needs every degree >= 1");
}

SymMatrix degree_plus_sign_adjacency(const Graph& g, double sign) {
  SymMatrix out(g.n());
  for (Vertex i = 0; i < g.n(); ++i) out.set(i, i, g.degree(i));
  for (const auto& e : g.edges()) out.set(e.u, e.v, sign);
  return out;
}

Matrix inv_sqrt_degree(const Graph& g) {
  Matrix d(g.n(), g.n());
  for (Vertex i = 0; i < g.n(); ++i) d(i, i) = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
  return d;
}

SymMatrix conjugate_by_inv_sqrt_degree(const Graph& g, const SymMatrix& a) {
  const Matrix d = inv_sqrt_degree(g);
  // Products of diagonal scalings are symmetric up to rounding; mirror the upper half.
  return SymMatrix::from_matrix(multiply(multiply(d, a.to_matrix()), d), 1e-15);
}

}  // namespace

SymMatrix combinatorial(const Graph& g) { return degree_plus_sign_adjacency(g, -1.0); }

SymMatrix positive(const Graph& g) { return degree_plus_sign_adjacency(g, 1.0); }

SymMatrix symmetric_entrywise(const Graph& g) {
  require_no_isolated(g);
  SymMatrix out(g.n());
  for (Vertex i = 0; i < g.n(); ++i) out.set(i, i, 1.0);
  for (const auto& e : g.edges())
    out.set(e.u, e.v, -1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v)));
  return out;
}

SymMatrix symmetric(const Graph& g) {
  require_no_isolated(g);
  SymMatrix product = conjugate_by_inv_sqrt_degree(g, combinatorial(g));
  const double gap = max_abs_diff(product, symmetric_entrywise(g));
  if (gap > kEntrywiseAgreement)
    throw IdentityError("symmetric Laplacian: product and entrywise forms differ by " + std::to_string(gap));
  return product;
}

SymMatrix positive_symmetric(const Graph& g) {
  require_no_isolated(g);
  return conjugate_by_inv_sqrt_degree(g, positive(g));
}

OrientedIncidence incidence(const Graph& g) {
  std::vector<Vertex> sources;
  sources.reserve(g.edges().size());
  for (const auto& e : g.edges()) sources.push_back(e.u);
  return incidence(g, sources);
}

OrientedIncidence incidence(const Graph& g, std::span<const Vertex> sources) {
  if (sources.size() != g.edges().size())
    throw DimensionError("incidence: " + std::to_string(sources.size()) + " sources for " +
                         std::to_string(g.m()) + " edges");
  OrientedIncidence out{Matrix(g.n(), g.m()), {}};
  out.orientation.reserve(sources.size());
  for (int k = 0; k < g.m(); ++k) {
    const Edge& e = g.edges()[static_cast<std::size_t>(k)];
    const Vertex src = sources[static_cast<std::size_t>(k)];
    if (src != e.u && src != e.v)
      throw RangeError("incidence: vertex " + std::to_string(src) + " is not an endpoint of edge " +
                       std::to_string(k));
    const Vertex snk = src == e.u ? e.v : e.u;
    out.m_matrix(src, k) = 1.0;
    out.m_matrix(snk, k) = -1.0;
    out.orientation.push_back({src, snk});
  }
  return out;
}

Matrix normalized_incidence(const Graph& g, const OrientedIncidence& inc) {
  require_no_isolated(g);
  return multiply(inv_sqrt_degree(g), inc.m_matrix);
}

DoubledIncidence doubled_incidence(const Graph& g) {
  require_no_isolated(g);
  const int m = g.m();
  DoubledIncidence out{Matrix(g.n(), 2 * m), {}};
  out.arcs.reserve(static_cast<std::size_t>(2 * m));
  for (const auto& e : g.edges()) out.arcs.push_back({e.u, e.v});
  std::vector<Arc> reversed;
  for (const auto& e : g.edges()) reversed.push_back({e.v, e.u});
  std::sort(reversed.begin(), reversed.end());
  out.arcs.insert(out.arcs.end(), reversed.begin(), reversed.end());

  for (int col = 0; col < 2 * m; ++col) {
    const Arc& a = out.arcs[static_cast<std::size_t>(col)];
    // Forward arc (i<j) carries +(v_i/sqrt(d_i) - v_j/sqrt(d_j)); its reverse carries the negation,
    // which is the same expression with the roles of source and sink swapped.
    out.s_bar(a.source, col) = 1.0 / std::sqrt(static_cast<double>(g.degree(a.source)));
    out.s_bar(a.sink, col) = -1.0 / std::sqrt(static_cast<double>(g.degree(a.sink)));
  }
  return out;
}

}  // namespace symlap
