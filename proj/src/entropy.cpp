#include "symlap/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "symlap/error.hpp"
#include "symlap/qstate.hpp"

namespace symlap {

namespace {

constexpr double kPrefixSlack = 1e-12;

double renyi_nats(const std::vector<double>& values, double p, double rank_eps) {
  if (p < 0.0 || std::isnan(p)) throw RangeError("renyi: order p must be >= 0, got " + std::to_string(p));
  if (p == 0.0) {
    const auto rank = std::count_if(values.begin(), values.end(), [&](double v) { return v > rank_eps; });
    return std::log(static_cast<double>(rank));
  }
  if (p == 1.0) {
    double h = 0.0;
    for (double v : values)
      if (v > 0.0) h -= v * std::log(v);
    return h;
  }
  const double cutoff = p < 1.0 ? rank_eps : 0.0;
  double s = 0.0;
  for (double v : values)
    if (v > cutoff) s += std::pow(v, p);
  return std::log(s) / (1.0 - p);
}

}  // namespace

double to_base(double nats, LogBase base) noexcept {
  return base == LogBase::two ? nats / std::log(2.0) : nats;
}

const char* base_name(LogBase base) noexcept { return base == LogBase::two ? "2" : "e"; }

ProbabilityVector::ProbabilityVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DimensionError("probability vector is empty");
  for (double v : values_)
    if (!(v >= 0.0)) throw SpectrumError("probability vector has a negative entry " + std::to_string(v));
  const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(total - 1.0) > kProbabilitySumTol)
    throw SpectrumError("probability vector sums to " + std::to_string(total) + ", expected 1");
}

ProbabilityVector ProbabilityVector::uniform(int n) {
  if (n < 1) throw RangeError("uniform distribution needs n >= 1");
  return ProbabilityVector(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

ProbabilityVector ProbabilityVector::from_spectrum(const Spectrum& s) {
  return ProbabilityVector(clamp_psd(s).values);
}

double von_neumann(const ProbabilityVector& p, LogBase base) {
  return to_base(renyi_nats(p.values(), 1.0, kRankThreshold), base);
}

double von_neumann(const Spectrum& s, LogBase base) {
  return von_neumann(ProbabilityVector::from_spectrum(s), base);
}

double von_neumann(const DensityMatrix& rho, LogBase base) { return von_neumann(rho.spectrum(), base); }

double renyi(const ProbabilityVector& prob, double p, LogBase base, double rank_eps) {
  return to_base(renyi_nats(prob.values(), p, rank_eps), base);
}

double renyi(const Spectrum& s, double p, LogBase base, double rank_eps) {
  return renyi(ProbabilityVector::from_spectrum(s), p, base, rank_eps);
}

double renyi(const DensityMatrix& rho, double p, LogBase base, double rank_eps) {
  return renyi(rho.spectrum(), p, base, rank_eps);
}

double structural(const Graph& g, LogBase base) {
  const auto prob = ProbabilityVector::from_spectrum(rho_v(g).spectrum());
  return to_base(renyi_nats(prob.values(), 1.0, kRankThreshold) - renyi_nats(prob.values(), 2.0, kRankThreshold),
                 base);
}

EntropyReport entropy_report(const Graph& g, std::span<const double> orders, const SpectralConfig& cfg) {
  require_connected(g);
  EntropyReport r;
  r.n = g.n();
  r.m = g.m();
  r.degrees = g.degrees();
  r.base = cfg.base;
  const DensityMatrix rho = rho_v(g);
  r.spectrum = cfg.eig_tol == kDefaultEigenTol ? rho.spectrum() : clamp_psd(jacobi_eigen(rho.matrix(), cfg.eig_tol));
  const auto prob = ProbabilityVector::from_spectrum(r.spectrum);

  const double vn = renyi_nats(prob.values(), 1.0, cfg.rank_eps);
  const double h2 = renyi_nats(prob.values(), 2.0, cfg.rank_eps);
  r.vn = to_base(vn, cfg.base);
  r.structural = to_base(vn - h2, cfg.base);
  r.renyi[2.0] = to_base(h2, cfg.base);
  for (double p : orders) r.renyi[p] = to_base(renyi_nats(prob.values(), p, cfg.rank_eps), cfg.base);
  return r;
}

double closed_form(ClosedForm form, int n, int k) {
  switch (form) {
    case ClosedForm::complete_vn:
      if (n < 2) throw RangeError("complete_vn needs n >= 2");
      return std::log(n - 1.0);
    case ClosedForm::regular_renyi2:
      if (k < 1 || k > n - 1) throw RangeError("regular_renyi2 needs 1 <= k <= n-1");
      if ((static_cast<long>(n) * k) % 2 != 0) throw RangeError("no k-regular graph has n*k odd");
      return std::log(n / (1.0 + 1.0 / k));
    case ClosedForm::bipartite_vn:
      if (n < 2) throw RangeError("bipartite_vn needs n >= 2");
      return std::log(static_cast<double>(n)) - (2.0 / n) * std::log(2.0);
    case ClosedForm::bipartite_renyi2:
      if (n < 2) throw RangeError("bipartite_renyi2 needs n >= 2");
      return -std::log((n + 2.0) / (static_cast<double>(n) * n));
  }
  throw RangeError("unknown closed form");
}

bool majorizes(const ProbabilityVector& a, const ProbabilityVector& b) {
  if (a.size() != b.size())
    throw DimensionError("majorizes: lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  auto sa = a.values();
  auto sb = b.values();
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  double pa = 0.0;
  double pb = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    pa += sa[i];
    pb += sb[i];
    if (pa > pb + kPrefixSlack) return false;
  }
  return true;
}

}  // namespace symlap
