#include "symlap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <thread>

#include "symlap/error.hpp"
#include "symlap/laplacian.hpp"
#include "symlap/qstate.hpp"

namespace symlap {

namespace {

constexpr double kLemma6Slack = 1e-12;
constexpr double kIdentityTol = 1e-12;
constexpr double kRenyiRouteTol = 1e-10;
// Scan extrema closer than this are ties and go to the smaller bitmask.
constexpr double kTieTol = 1e-12;

BoundCheck make_check(std::string name, double lhs, double rhs, double margin, bool strict) {
  BoundCheck c{std::move(name), lhs, rhs, margin, strict, false, false};
  c.holds = margin >= kMarginTol;
  c.boundary = strict && std::abs(margin) <= -kMarginTol;
  return c;
}

double sum_inv_sqrt_degree(const Graph& g) {
  double s = 0.0;
  for (int d : g.degrees()) s += 1.0 / std::sqrt(static_cast<double>(d));
  return s;
}

// Identity checks compare against their own tolerance with no extra margin slack.
BoundCheck exact(BoundCheck c) {
  c.holds = c.margin >= 0.0;
  c.boundary = false;
  return c;
}

void require_scan_graph(const Graph& g, int min_n) {
  require_connected(g);
  if (g.n() < min_n) throw RangeError("check needs n >= " + std::to_string(min_n));
}

}  // namespace

bool BoundReport::all_hold() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

const BoundCheck& BoundReport::at(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw RangeError("no check named '" + name + "'");
}

BoundCheck check_at_least(std::string name, double lhs, double rhs, bool strict) {
  return make_check(std::move(name), lhs, rhs, lhs - rhs, strict);
}

BoundCheck check_at_most(std::string name, double lhs, double rhs, bool strict) {
  return make_check(std::move(name), lhs, rhs, rhs - lhs, strict);
}

double cycle_vn(int n) {
  static std::mutex mu;
  static std::map<int, double> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const double h = von_neumann(rho_v(cycle(n)));
  std::lock_guard lock(mu);
  cache.emplace(n, h);
  return h;
}

double cycle_renyi2(int n) { return std::log(2.0 * n / 3.0); }

double renyi2_entrywise(const Graph& g) {
  const SymMatrix lap = symmetric(g);
  double s = 0.0;
  for (double x : lap.data()) s += x * x;
  const double n = g.n();
  return -std::log(s / (n * n));
}

BoundReport theorem2_check(const Graph& g) {
  require_scan_graph(g, 3);
  const double n = g.n();
  const DensityMatrix rho = rho_v(g);
  const double h = von_neumann(rho);
  const double h2 = renyi(rho, 2.0);
  const double h2_floor = std::log(n * n / (n + sum_inv_sqrt_degree(g)));

  BoundReport r;
  r.checks.push_back(check_at_least("renyi2_lower", h2, h2_floor, false));
  r.checks.push_back(check_at_least("renyi2_floor_above_half", h2_floor, std::log(n) - std::log(2.0), true));
  r.checks.push_back(check_at_least("renyi2_vs_cycle", h2, cycle_renyi2(g.n()) - std::log(4.0 / 3.0), true));
  r.checks.push_back(check_at_least("vn_vs_cycle", h, cycle_vn(g.n()) - std::log(4.0 * std::sqrt(2.0) / 3.0), true));
  return r;
}

BoundReport theorem1_check(const Graph& g, const std::vector<double>& p_grid) {
  for (double p : p_grid)
    if (!(p >= 1.0)) throw RangeError("theorem1_check: orders must be >= 1, got " + std::to_string(p));
  require_scan_graph(g, 2);
  const Spectrum own = rho_v(g).spectrum();
  const Spectrum full = rho_v(complete(g.n())).spectrum();
  BoundReport r;
  for (double p : p_grid) {
    char name[32];
    std::snprintf(name, sizeof name, "p=%g", p);
    r.checks.push_back(check_at_most(name, renyi(own, p), renyi(full, p), false));
  }
  r.checks.push_back(check_at_most("vn_max", von_neumann(own), std::log(g.n() - 1.0), false));
  return r;
}

BoundReport lemma5_check(const Graph& g) {
  require_scan_graph(g, 2);
  const Spectrum s = rho_v(g).spectrum();
  const double gap = von_neumann(s) - renyi(s, 2.0);
  BoundReport r;
  r.checks.push_back(check_at_least("lower", gap, 0.0, false));
  r.checks.push_back(check_at_most("upper", gap, 0.5 * std::log(2.0), false));
  return r;
}

int Lemma6Report::vertex_failures() const noexcept {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [](const auto& v) { return !v.holds; }));
}

Lemma6Report lemma6_check(const Graph& g) {
  require_scan_graph(g, 2);
  Lemma6Report r;
  for (Vertex i = 0; i < g.n(); ++i) {
    const double di = g.degree(i);
    double inner = 0.0;
    for (Vertex j : g.neighbors(i)) inner += 1.0 / g.degree(j);
    Lemma6Vertex v{i, inner / di, 1.0 / std::sqrt(di), false};
    v.holds = v.lhs <= v.rhs + kLemma6Slack;
    r.aggregate_lhs += v.lhs;
    r.aggregate_rhs += v.rhs;
    r.vertices.push_back(v);
  }
  r.aggregate_holds = r.aggregate_lhs <= r.aggregate_rhs + kLemma6Slack;
  return r;
}

StarComparison star_comparison(int n) {
  if (n < 4) throw RangeError("star_comparison needs n >= 4, got " + std::to_string(n));
  StarComparison r;
  r.n = n;
  r.star_vn_closed = closed_form(ClosedForm::bipartite_vn, n);
  r.star_vn_eigen = von_neumann(rho_v(star(n)));
  r.cycle_vn = cycle_vn(n);
  r.cycle_below_star = check_at_most("cycle_below_star", r.cycle_vn, r.star_vn_eigen, true);
  r.bipartite_renyi2_closed = closed_form(ClosedForm::bipartite_renyi2, n);
  r.cycle_renyi2 = cycle_renyi2(n);
  double lowest = INFINITY;
  for (int k = 1; k <= n - 1; ++k) {
    const double h2 = renyi(rho_v(complete_bipartite(n - k, k)), 2.0);
    r.bipartite_renyi2.push_back(h2);
    lowest = std::min(lowest, h2);
  }
  r.bipartite_above_cycle = check_at_least("bipartite_above_cycle", lowest, r.cycle_renyi2, false);
  r.gap_to_max = std::log(n - 1.0) - r.star_vn_eigen;
  return r;
}

namespace {

struct Extremum {
  double value = 0.0;
  Bitmask mask = 0;
  bool set = false;
};

void offer_min(Extremum& e, double value, Bitmask mask) {
  if (!e.set || value < e.value - kTieTol || (std::abs(value - e.value) <= kTieTol && mask < e.mask)) {
    e = {value, mask, true};
  }
}

void offer_max(Extremum& e, double value, Bitmask mask) {
  if (!e.set || value > e.value + kTieTol || (std::abs(value - e.value) <= kTieTol && mask < e.mask)) {
    e = {value, mask, true};
  }
}

struct PartialScan {
  long count = 0;
  Extremum min_vn, max_vn, min_h2;
  std::vector<Violation> violations;
  ScanInformational info;
};

void record(PartialScan& acc, Bitmask mask, const BoundReport& report, const std::string& prefix) {
  for (const auto& c : report.checks) {
    if (!c.holds) acc.violations.push_back({mask, prefix + c.name, c.lhs, c.rhs, c.margin});
    if (c.boundary) ++acc.info.boundary_passes;
  }
}

void scan_one(const Graph& g, const ScanOptions& opt, PartialScan& acc) {
  const Bitmask mask = g.bitmask();
  const int n = g.n();
  ++acc.count;

  const SymMatrix lap = symmetric(g);
  const Spectrum lap_spec = jacobi_eigen(lap);
  const DensityMatrix rho(lap.scaled(1.0 / n));
  const double h = von_neumann(rho);
  const double h2 = renyi(rho, 2.0);
  offer_min(acc.min_vn, h, mask);
  offer_max(acc.max_vn, h, mask);
  offer_min(acc.min_h2, h2, mask);

  BoundReport ident;
  ident.checks.push_back(exact(check_at_least("spectrum_min", lap_spec.values.back(), -kEigClamp, false)));
  ident.checks.push_back(exact(check_at_most("spectrum_max", lap_spec.values.front(), 2.0 + kEigClamp, false)));
  ident.checks.push_back(exact(check_at_least("simple_zero", lap_spec.values[static_cast<std::size_t>(n - 2)],
                                        kNonzeroThreshold, false)));
  const DoubledIncidence dbl = doubled_incidence(g);
  ident.checks.push_back(exact(
      check_at_most("doubled_incidence", max_abs_diff(gram_rows(dbl.s_bar), lap.scaled(2.0)), kIdentityTol, false)));
  ident.checks.push_back(exact(check_at_most("renyi2_entrywise", std::abs(h2 - renyi2_entrywise(g)), kRenyiRouteTol, false)));
  const auto& deg = g.degrees();
  if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg.front(); })) {
    ident.checks.push_back(exact(check_at_most(
        "regular_renyi2", std::abs(h2 - closed_form(ClosedForm::regular_renyi2, n, deg.front())), kRenyiRouteTol,
        false)));
  }
  record(acc, mask, ident, "identity:");
  record(acc, mask, theorem1_check(g, opt.p_grid), "maximality:");
  record(acc, mask, theorem2_check(g), "lower_bound:");
  record(acc, mask, lemma5_check(g), "structural:");

  const Lemma6Report l6 = lemma6_check(g);
  const int fails = l6.vertex_failures();
  acc.info.lemma6_vertex_failures += fails;
  if (fails > 0) ++acc.info.lemma6_graphs_with_failure;
  if (!l6.aggregate_holds) ++acc.info.lemma6_aggregate_failures;
}

}  // namespace

ScanResult scan(int n, const ScanOptions& options) {
  if (n < 3 || n > 7) throw RangeError("scan supports 3 <= n <= 6 (7 with the large flag), got n=" + std::to_string(n));
  if (n == 7 && !options.allow_large) throw RangeError("scan of n=7 needs the large flag");
  if (options.threads < 1) throw RangeError("threads must be >= 1");
  for (double p : options.p_grid)
    if (!(p >= 1.0)) throw RangeError("scan p grid must hold orders >= 1");
  // Warm the cycle cache before workers share it.
  cycle_vn(n);

  const Bitmask space = mask_space(n);
  const auto parts = static_cast<Bitmask>(options.threads);
  std::vector<PartialScan> partials(static_cast<std::size_t>(options.threads));
  std::vector<std::exception_ptr> errors(partials.size());
  auto work = [&](std::size_t idx) {
    const Bitmask lo = space * idx / parts;
    const Bitmask hi = space * (idx + 1) / parts;
    try {
      for_each_connected(n, lo, hi, [&](const Graph& g) { scan_one(g, options, partials[idx]); });
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };
  if (options.threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < partials.size(); ++i) pool.emplace_back(work, i);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ScanResult out;
  out.n = n;
  out.p_grid = options.p_grid;
  PartialScan merged;
  for (auto& p : partials) {
    merged.count += p.count;
    if (p.min_vn.set) offer_min(merged.min_vn, p.min_vn.value, p.min_vn.mask);
    if (p.max_vn.set) offer_max(merged.max_vn, p.max_vn.value, p.max_vn.mask);
    if (p.min_h2.set) offer_min(merged.min_h2, p.min_h2.value, p.min_h2.mask);
    merged.violations.insert(merged.violations.end(), p.violations.begin(), p.violations.end());
    merged.info.lemma6_vertex_failures += p.info.lemma6_vertex_failures;
    merged.info.lemma6_graphs_with_failure += p.info.lemma6_graphs_with_failure;
    merged.info.lemma6_aggregate_failures += p.info.lemma6_aggregate_failures;
    merged.info.boundary_passes += p.info.boundary_passes;
  }
  out.graph_count = merged.count;
  out.min_vn = merged.min_vn.value;
  out.argmin_vn = merged.min_vn.mask;
  out.max_vn = merged.max_vn.value;
  out.argmax_vn = merged.max_vn.mask;
  out.min_renyi2 = merged.min_h2.value;
  out.argmin_renyi2 = merged.min_h2.mask;
  out.violations = std::move(merged.violations);
  out.informational = merged.info;
  return out;
}

}  // namespace symlap
