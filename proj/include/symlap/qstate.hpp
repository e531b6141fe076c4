#pragma once

#include <vector>

#include "symlap/graph.hpp"
#include "symlap/linalg.hpp"

namespace symlap {

/// Real vector in H_V (x) H_V (x) H_V, dimension n^3. Composite index is
/// vertex * n^2 + arc_source * n + arc_sink.
struct PureState {
  int n = 0;
  std::vector<double> amplitudes;
  /// Euclidean norm of `amplitudes`.
  double norm = 0.0;

  std::size_t index(Vertex vertex, Vertex arc_source, Vertex arc_sink) const noexcept {
    const auto nn = static_cast<std::size_t>(n);
    return static_cast<std::size_t>(vertex) * nn * nn + static_cast<std::size_t>(arc_source) * nn +
           static_cast<std::size_t>(arc_sink);
  }

  /// Rescaled to unit norm.
  PureState normalized() const;
};

/// Unit-trace, symmetric, PSD operator.
class DensityMatrix {
 public:
  /// Validates trace 1 within 1e-12 and PSD (after clamping at -1e-10).
  explicit DensityMatrix(SymMatrix matrix);

  const SymMatrix& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return matrix_.dim(); }
  /// Clamped eigenvalues, non-increasing.
  const Spectrum& spectrum() const noexcept { return spectrum_; }

 private:
  SymMatrix matrix_;
  Spectrum spectrum_;
};

/// Throws PreconditionError unless g is connected with n >= 2.
void require_connected(const Graph& g);

/// psi_G = (1/sqrt 2) sum over arcs (i,j), i<j, of
/// (v_i/sqrt(d_i) - v_j/sqrt(d_j)) (x) (v_ij - v_ji). Unnormalized:
/// its squared norm is n. Requires n <= 7.
PureState psi(const Graph& g);

/// symmetric(g) / n
DensityMatrix rho_v(const Graph& g);
/// positive_symmetric(g) / n
DensityMatrix rho_e(const Graph& g);

inline constexpr double kNonzeroThreshold = 1e-9;
inline constexpr int kMaxStateVertices = 7;

struct Lemma1Report {
  /// Tracing the edge factor out of psi psi^T reproduces the symmetric
  /// Laplacian.
  bool trE_matches = false;
  double trE_residual = 0.0;
  /// Nonzero spectrum of the n^2 x n^2 operator left after tracing out the
  /// vertex factor.
  std::vector<double> trV_spectrum;
  /// Nonzero spectrum of positive_symmetric(g).
  std::vector<double> lplus_spectrum;
  /// trV_spectrum equals lplus_spectrum as multisets (within 1e-9).
  bool trV_isospectral = false;
  /// Largest gap between the nonzero spectra of the two partial traces.
  double schmidt_gap = 0.0;
  /// |H(Tr_E) - H(Tr_V)| for the normalized state, in nats.
  double entropy_gap = 0.0;
};

/// Runs both partial traces of psi psi^T by direct contraction of the
/// state vector. Never throws on a failed comparison; callers decide.
Lemma1Report verify_lemma1(const Graph& g, double tol = 1e-12);

/// Tr_E computed from the full n^3 x n^3 density matrix, for
/// cross-validation of the contraction path. Requires n <= 4.
SymMatrix trace_out_edges_dense(const Graph& g);

/// Tally of verify_lemma1 over every connected graph on n vertices.
struct Lemma1Tally {
  int n = 0;
  long graphs = 0;
  long trE_failures = 0;
  double max_trE_residual = 0.0;
  double max_entropy_gap = 0.0;
  long bipartite_agree = 0;
  long bipartite_disagree = 0;
  long nonbipartite_agree = 0;
  long nonbipartite_disagree = 0;
};

Lemma1Tally tally_lemma1(int n);

}  // namespace symlap
