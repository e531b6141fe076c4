// Acceptance gate: one PASS/FAIL line per criterion, findings tables to a
// markdown file. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "symlap/bounds.hpp"
#include "symlap/entropy.hpp"
#include "symlap/laplacian.hpp"
#include "symlap/qstate.hpp"
#include "symlap/report.hpp"
#include "test_support.hpp"

using namespace symlap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = seconds_since(t0);
  if (!o.pass) ++failures;
  std::printf("[%s] %d. %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), dt, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Graph circulant4(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int step : {1, 2}) {
      const int j = (i + step) % n;
      edges.push_back({std::min(i, j), std::max(i, j)});
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

const std::vector<double> kOrderGrid{0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 10.0};

bool monotone_in_order(const Spectrum& s) {
  double prev = INFINITY;
  for (double p : kOrderGrid) {
    const double h = renyi(s, p);
    if (h > prev + 1e-10) return false;
    prev = h;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string findings_path = "findings.md";
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--findings") findings_path = argv[i + 1];

  report(1, "complete graph H = log(n-1), n = 3..10", [] {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int n = 3; n <= 10; ++n)
      worst = std::max(worst, std::abs(von_neumann(rho_v(complete(n))) - std::log(n - 1.0)));
    const double dt = seconds_since(t0);
    return Outcome{worst < 1e-9 && dt < 1.0, "max error " + fmt("%.3g", worst)};
  });

  report(2, "regular H_2 closed form, cycles n = 3..12 and 4-regular circulants n = 5..12", [] {
    const auto t0 = Clock::now();
    double worst_cycle = 0.0, worst_circ = 0.0;
    for (int n = 3; n <= 12; ++n)
      worst_cycle = std::max(worst_cycle, std::abs(renyi(rho_v(cycle(n)), 2.0) - std::log(2.0 * n / 3.0)));
    for (int n = 5; n <= 12; ++n) {
      const Graph g = circulant4(n);
      for (int d : g.degrees())
        if (d != 4) return Outcome{false, "circulant not 4-regular"};
      worst_circ = std::max(worst_circ, std::abs(renyi(rho_v(g), 2.0) - std::log(n / 1.25)));
    }
    const double dt = seconds_since(t0);
    return Outcome{std::max(worst_cycle, worst_circ) < 1e-9 && dt < 1.0,
                   "cycle max error " + fmt("%.3g", worst_cycle) + ", circulant max error " + fmt("%.3g", worst_circ)};
  });

  report(3, "complete bipartite spectrum, H and H_2, n = 4..10, all splits", [] {
    double spec_err = 0.0, h_err = 0.0, h2_err = 0.0, h_spread = 0.0, h2_spread = 0.0;
    for (int n = 4; n <= 10; ++n) {
      double h_lo = INFINITY, h_hi = -INFINITY, h2_lo = INFINITY, h2_hi = -INFINITY;
      const double h_closed = std::log(static_cast<double>(n)) - (2.0 / n) * std::log(2.0);
      const double h2_closed = -std::log((n + 2.0) / (static_cast<double>(n) * n));
      for (int k = 1; k < n; ++k) {
        const Graph g = complete_bipartite(n - k, k);
        const Spectrum s = jacobi_eigen(symmetric(g));
        std::vector<double> expect(static_cast<std::size_t>(n), 1.0);
        expect.front() = 2.0;
        expect.back() = 0.0;
        spec_err = std::max(spec_err, multiset_distance(s.values, expect));
        const DensityMatrix rho = rho_v(g);
        const double h = von_neumann(rho);
        const double h2 = renyi(rho, 2.0);
        h_err = std::max(h_err, std::abs(h - h_closed));
        h2_err = std::max(h2_err, std::abs(h2 - h2_closed));
        h_lo = std::min(h_lo, h);
        h_hi = std::max(h_hi, h);
        h2_lo = std::min(h2_lo, h2);
        h2_hi = std::max(h2_hi, h2);
      }
      h_spread = std::max(h_spread, h_hi - h_lo);
      h2_spread = std::max(h2_spread, h2_hi - h2_lo);
    }
    const bool ok = spec_err < 1e-9 && h_err < 1e-9 && h2_err < 1e-9 && h_spread < 1e-12 && h2_spread < 1e-12;
    return Outcome{ok, "spectrum " + fmt("%.3g", spec_err) + ", H " + fmt("%.3g", h_err) + ", H_2 " +
                           fmt("%.3g", h2_err) + ", k-spread " + fmt("%.3g", h_spread) + "/" + fmt("%.3g", h2_spread)};
  });

  std::vector<Lemma1Tally> l1;
  report(4, "edge trace reproduces L and Schmidt entropies agree, exhaustive n <= 6", [&] {
    double residual = 0.0, gap = 0.0, dt6 = 0.0;
    long graphs = 0, bad = 0;
    for (int n = 2; n <= 6; ++n) {
      const auto t0 = Clock::now();
      l1.push_back(tally_lemma1(n));
      if (n == 6) dt6 = seconds_since(t0);
      const Lemma1Tally& t = l1.back();
      graphs += t.graphs;
      bad += t.trE_failures;
      residual = std::max(residual, t.max_trE_residual);
      gap = std::max(gap, t.max_entropy_gap);
    }
    const bool ok = bad == 0 && residual < 1e-12 && gap < 1e-9 && dt6 < 600.0;
    return Outcome{ok, std::to_string(graphs) + " graphs, max residual " + fmt("%.3g", residual) +
                           ", max entropy gap " + fmt("%.3g", gap) + ", n=6 in " + fmt("%.1f", dt6) + "s"};
  });

  std::vector<ScanResult> scans;
  double scan6_seconds = 0.0;
  for (int n = 4; n <= 6; ++n) {
    const auto t0 = Clock::now();
    scans.push_back(scan(n));
    if (n == 6) scan6_seconds = seconds_since(t0);
  }

  report(5, "H_2 and H lower bounds and the H - H_2 window, exhaustive n = 4..6", [&] {
    long graphs = 0, bad = 0, boundary = 0;
    for (const auto& r : scans) {
      graphs += r.graph_count;
      boundary += r.informational.boundary_passes;
      for (const auto& v : r.violations)
        if (v.check.rfind("lower_bound:", 0) == 0 || v.check.rfind("structural:", 0) == 0 ||
            v.check.rfind("identity:", 0) == 0)
          ++bad;
    }
    const bool ok = bad == 0 && scan6_seconds < 120.0;
    return Outcome{ok, std::to_string(graphs) + " graphs, " + std::to_string(bad) + " violations, " +
                           std::to_string(boundary) + " boundary passes, n=6 in " + fmt("%.1f", scan6_seconds) + "s"};
  });

  report(6, "complete graph maximizes H_p, p in {1,2,3}, exhaustive n = 4..6", [&] {
    long bad = 0;
    bool argmax_ok = true;
    for (const auto& r : scans) {
      for (const auto& v : r.violations)
        if (v.check.rfind("maximality:", 0) == 0) ++bad;
      if (r.argmax_vn != complete(r.n).bitmask()) argmax_ok = false;
    }
    return Outcome{bad == 0 && argmax_ok,
                   std::to_string(bad) + " violations, argmax is K_n: " + (argmax_ok ? "yes" : "no")};
  });

  report(7, "cycle entropy below star entropy, n = 4..10", [] {
    bool ok = true;
    std::string margins;
    for (int n = 4; n <= 10; ++n) {
      const StarComparison c = star_comparison(n);
      ok = ok && c.cycle_below_star.holds;
      margins += (margins.empty() ? "" : " ") + std::to_string(n) + ":" + fmt("%.3g", c.cycle_below_star.margin) +
                 (c.cycle_below_star.boundary ? "(tie)" : "");
    }
    return Outcome{ok, "margins " + margins};
  });

  report(8, "property suites", [] {
    std::mt19937_64 rng(8);
    std::string detail;
    bool ok = true;

    // (a) order monotonicity on random spectra and every scan graph
    bool a = true;
    for (int trial = 0; trial < 1000; ++trial) {
      Spectrum s{testing::random_probability(rng, 2 + trial % 11)};
      std::sort(s.values.rbegin(), s.values.rend());
      a = a && monotone_in_order(s);
    }
    for (int n = 4; n <= 6; ++n) for_each_connected(n, [&](const Graph& g) { a = a && monotone_in_order(rho_v(g).spectrum()); });
    detail += std::string("a:") + (a ? "ok" : "fail");
    ok = ok && a;

    // (b) uniform vector is majorized by everything; Schur concavity
    bool b = true;
    for (int n = 2; n <= 8; ++n) {
      const auto u = ProbabilityVector::uniform(n);
      for (int trial = 0; trial < 1000; ++trial) {
        const ProbabilityVector y(testing::random_probability(rng, n));
        b = b && majorizes(u, y);
        for (double p : {1.0, 2.0, 3.0}) b = b && renyi(u, p) >= renyi(y, p) - 1e-12;
      }
    }
    detail += std::string(" b:") + (b ? "ok" : "fail");
    ok = ok && b;

    // (c) eigenvalues recovered from Q D Q^T
    double c_err = 0.0;
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + trial % 19;
      const Matrix q = testing::random_orthogonal(rng, n);
      std::vector<double> d(static_cast<std::size_t>(n));
      for (auto& x : d) x = unif(rng);
      Matrix qd = q;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) qd(i, j) *= d[static_cast<std::size_t>(j)];
      const SymMatrix a_mat = SymMatrix::from_matrix(multiply(qd, q.transpose()), 1e-12);
      std::sort(d.rbegin(), d.rend());
      c_err = std::max(c_err, multiset_distance(jacobi_eigen(a_mat).values, d));
    }
    detail += " c:" + fmt("%.3g", c_err);
    ok = ok && c_err < 1e-9;

    // (d) S S^T independent of orientation
    double d_err = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = testing::random_connected(rng, 2 + trial % 9, 0.4);
      const SymMatrix ref = symmetric_entrywise(g);
      std::bernoulli_distribution flip(0.5);
      for (int k = 0; k < 20; ++k) {
        std::vector<Vertex> sources;
        for (const auto& e : g.edges()) sources.push_back(flip(rng) ? e.u : e.v);
        const auto inc = incidence(g, sources);
        d_err = std::max(d_err, max_abs_diff(gram_rows(normalized_incidence(g, inc)), ref));
      }
    }
    detail += " d:" + fmt("%.3g", d_err);
    ok = ok && d_err < 1e-12;

    // (e) doubled incidence on every scan graph
    double e_err = 0.0;
    for (int n = 4; n <= 6; ++n)
      for_each_connected(n, [&](const Graph& g) {
        e_err = std::max(e_err, max_abs_diff(gram_rows(doubled_incidence(g).s_bar), symmetric_entrywise(g).scaled(2.0)));
      });
    detail += " e:" + fmt("%.3g", e_err);
    ok = ok && e_err < 1e-12;
    return Outcome{ok, detail};
  });

  report(9, "findings tables written", [&] {
    std::vector<Lemma6Tally> l6;
    for (int n = 2; n <= 6; ++n) l6.push_back(tally_lemma6(n));
    std::ofstream out(findings_path);
    out << render_findings(l1, l6, Format::text);
    return Outcome{static_cast<bool>(out), "informational, see " + findings_path};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
