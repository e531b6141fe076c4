#pragma once

#include <map>
#include <span>
#include <vector>

#include "symlap/graph.hpp"
#include "symlap/linalg.hpp"

namespace symlap {

class DensityMatrix;

/// Entropies are computed in nats and divided by log 2 for base two.
enum class LogBase { e, two };

double to_base(double nats, LogBase base) noexcept;
const char* base_name(LogBase base) noexcept;

/// Non-negative entries summing to 1 within 1e-10.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> values);
  static ProbabilityVector uniform(int n);
  /// Clamped eigenvalues of a density spectrum.
  static ProbabilityVector from_spectrum(const Spectrum& s);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

inline constexpr double kProbabilitySumTol = 1e-10;
inline constexpr double kRankThreshold = 1e-9;

/// -sum l log l with 0 log 0 = 0.
double von_neumann(const ProbabilityVector& p, LogBase base = LogBase::e);
/// Clamps eigenvalues at -1e-10 first; throws SpectrumError when the trace
/// is not 1.
double von_neumann(const Spectrum& s, LogBase base = LogBase::e);
double von_neumann(const DensityMatrix& rho, LogBase base = LogBase::e);

/// 1/(1-p) log sum l^p. p = 1 is the Von Neumann entropy and p = 0 is the
/// log of the number of entries above `rank_eps`. For 0 < p < 1 entries at or
/// below `rank_eps` count as zero. Throws RangeError for p < 0.
double renyi(const ProbabilityVector& prob, double p, LogBase base = LogBase::e,
             double rank_eps = kRankThreshold);
double renyi(const Spectrum& s, double p, LogBase base = LogBase::e, double rank_eps = kRankThreshold);
double renyi(const DensityMatrix& rho, double p, LogBase base = LogBase::e,
             double rank_eps = kRankThreshold);

/// Von Neumann minus Renyi-2 entropy of rho_V(g).
double structural(const Graph& g, LogBase base = LogBase::e);

struct EntropyReport {
  int n = 0;
  int m = 0;
  std::vector<int> degrees;
  /// Spectrum of rho_V, clamped, non-increasing.
  Spectrum spectrum;
  double vn = 0.0;
  /// Requested orders plus p = 2.
  std::map<double, double> renyi;
  double structural = 0.0;
  LogBase base = LogBase::e;
};

struct SpectralConfig {
  LogBase base = LogBase::e;
  double eig_tol = kDefaultEigenTol;
  double rank_eps = kRankThreshold;
};

/// Full pipeline for one connected graph.
EntropyReport entropy_report(const Graph& g, std::span<const double> orders, const SpectralConfig& cfg = {});

enum class ClosedForm {
  /// log(n-1): complete graph K_n.
  complete_vn,
  /// log(n / (1 + 1/k)): any k-regular graph on n vertices.
  regular_renyi2,
  /// log n - (2/n) log 2: complete bipartite K_{n-k,k}, any split.
  bipartite_vn,
  /// -log((n+2)/n^2): complete bipartite K_{n-k,k}, any split.
  bipartite_renyi2,
};

/// Closed-form entropy in nats. `k` is read only for regular_renyi2.
double closed_form(ClosedForm form, int n, int k = 0);

/// True when `b` majorizes `a` (a is majorized by b): after sorting both
/// non-increasing, every prefix sum of a is at most that of b. Prefix
/// comparisons allow 1e-12 slack. Throws DimensionError on length mismatch.
bool majorizes(const ProbabilityVector& a, const ProbabilityVector& b);

}  // namespace symlap
