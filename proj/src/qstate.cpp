#include "symlap/qstate.hpp"

#include <cmath>
#include <string>

#include "symlap/entropy.hpp"
#include "symlap/error.hpp"
#include "symlap/laplacian.hpp"

namespace symlap {

namespace {

constexpr double kUnitTrace = 1e-12;

void require_state_size(const Graph& g) {
  if (g.n() > kMaxStateVertices)
    throw RangeError("pure-state construction supports n <= " + std::to_string(kMaxStateVertices) +
                     " (state dimension n^3), got n=" + std::to_string(g.n()));
}

}  // namespace

PureState PureState::normalized() const {
  PureState out = *this;
  if (norm == 0.0) throw SpectrumError("cannot normalize the zero vector");
  for (double& a : out.amplitudes) a /= norm;
  out.norm = norm2(out.amplitudes);
  return out;
}

DensityMatrix::DensityMatrix(SymMatrix matrix) : matrix_(std::move(matrix)) {
  const double tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kUnitTrace)
    throw SpectrumError("density matrix trace is " + std::to_string(tr) + ", expected 1");
  spectrum_ = clamp_psd(jacobi_eigen(matrix_));
}

void require_connected(const Graph& g) {
  if (g.n() < 2) throw PreconditionError("graph needs at least two vertices");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

PureState psi(const Graph& g) {
  require_connected(g);
  require_state_size(g);
  const int n = g.n();
  PureState out;
  out.n = n;
  out.amplitudes.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  const double half_root = 1.0 / std::sqrt(2.0);
  for (const auto& e : g.edges()) {
    const double ci = half_root / std::sqrt(static_cast<double>(g.degree(e.u)));
    const double cj = -half_root / std::sqrt(static_cast<double>(g.degree(e.v)));
    out.amplitudes[out.index(e.u, e.u, e.v)] += ci;
    out.amplitudes[out.index(e.u, e.v, e.u)] -= ci;
    out.amplitudes[out.index(e.v, e.u, e.v)] += cj;
    out.amplitudes[out.index(e.v, e.v, e.u)] -= cj;
  }
  out.norm = norm2(out.amplitudes);
  return out;
}

DensityMatrix rho_v(const Graph& g) {
  require_connected(g);
  return DensityMatrix(symmetric(g).scaled(1.0 / g.n()));
}

DensityMatrix rho_e(const Graph& g) {
  require_connected(g);
  return DensityMatrix(positive_symmetric(g).scaled(1.0 / g.n()));
}

Lemma1Report verify_lemma1(const Graph& g, double tol) {
  const PureState state = psi(g);
  const int n = g.n();
  const int arcs = n * n;

  Lemma1Report r;
  const SymMatrix tr_e = partial_trace_pure(state.amplitudes, n, arcs, Keep::first);
  r.trE_residual = max_abs_diff(tr_e, symmetric(g));
  r.trE_matches = r.trE_residual < tol;

  const SymMatrix tr_v = partial_trace_pure(state.amplitudes, n, arcs, Keep::second);
  const Spectrum tr_v_spec = jacobi_eigen(tr_v);
  const Spectrum tr_e_spec = jacobi_eigen(tr_e);
  r.trV_spectrum = nonzero_values(tr_v_spec, kNonzeroThreshold);
  r.lplus_spectrum = nonzero_values(jacobi_eigen(positive_symmetric(g)), kNonzeroThreshold);
  r.trV_isospectral = multiset_distance(r.trV_spectrum, r.lplus_spectrum) < kNonzeroThreshold;

  const auto tr_e_nonzero = nonzero_values(tr_e_spec, kNonzeroThreshold);
  r.schmidt_gap = multiset_distance(tr_e_nonzero, r.trV_spectrum);

  const double inv_n = 1.0 / n;
  auto scaled_spectrum = [&](const Spectrum& s) {
    Spectrum out = s;
    for (double& v : out.values) v *= inv_n;
    return out;
  };
  r.entropy_gap = std::abs(von_neumann(scaled_spectrum(tr_e_spec)) - von_neumann(scaled_spectrum(tr_v_spec)));
  return r;
}

SymMatrix trace_out_edges_dense(const Graph& g) {
  if (g.n() > 4) throw RangeError("dense partial-trace path is limited to n <= 4");
  const PureState state = psi(g);
  return partial_trace(outer(state.amplitudes), g.n(), g.n() * g.n(), Keep::first);
}

Lemma1Tally tally_lemma1(int n) {
  Lemma1Tally t;
  t.n = n;
  for_each_connected(n, [&](const Graph& g) {
    const Lemma1Report r = verify_lemma1(g);
    ++t.graphs;
    if (!r.trE_matches) ++t.trE_failures;
    t.max_trE_residual = std::max(t.max_trE_residual, r.trE_residual);
    t.max_entropy_gap = std::max(t.max_entropy_gap, r.entropy_gap);
    const bool bip = is_bipartite(g);
    if (bip)
      ++(r.trV_isospectral ? t.bipartite_agree : t.bipartite_disagree);
    else
      ++(r.trV_isospectral ? t.nonbipartite_agree : t.nonbipartite_disagree);
  });
  return t;
}

}  // namespace symlap
