#include "symlap/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symlap/bounds.hpp"
#include "symlap/entropy.hpp"
#include "symlap/error.hpp"
#include "symlap/graph.hpp"
#include "symlap/qstate.hpp"
#include "symlap/report.hpp"

namespace symlap {

namespace {

struct RunConfig {
  std::string base = "e";
  double tol_eig = kDefaultEigenTol;
  double rank_eps = kRankThreshold;
  std::string format = "text";
  int threads = 1;

  LogBase log_base() const { return base == "2" ? LogBase::two : LogBase::e; }
};

Graph read_graph(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  return from_edge_list(text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric-Laplacian density matrices, their entropies and bound scans", "symlap"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--base", cfg.base, "Logarithm base for entropies")->check(CLI::IsMember({"e", "2"}));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tol-eig", cfg.tol_eig, "Relative off-diagonal tolerance of the eigensolver")
      ->check(CLI::PositiveNumber);
  app.add_option("--rank-eps", cfg.rank_eps, "Eigenvalues above this count towards the rank")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads for scan")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Write a named graph as an edge list");
  std::string family;
  std::vector<int> params;
  gen->add_option("family", family, "complete | complete_bipartite | star | cycle")->required();
  gen->add_option("params", params, "Family sizes")->required();

  auto* entropy = app.add_subcommand("entropy", "Spectrum and entropies of rho_V");
  std::string entropy_path;
  std::vector<double> orders{2.0};
  entropy->add_option("path", entropy_path, "Edge-list file, or - for standard input")->required();
  entropy->add_option("-p,--order", orders, "Renyi orders (comma separated)")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Check the purification and edge-doubling identities");
  std::string verify_path;
  verify->add_option("path", verify_path, "Edge-list file, or - for standard input")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive bound verification over connected graphs");
  int scan_n = 0;
  bool large = false;
  std::vector<double> grid{1.0, 2.0, 3.0};
  scan_cmd->add_option("n", scan_n, "Vertex count")->required();
  scan_cmd->add_flag("--large", large, "Allow n = 7");
  scan_cmd->add_option("--p-grid", grid, "Renyi orders (>= 1) for the maximality check")->delimiter(',');

  auto* findings = app.add_subcommand("findings", "Tabulate the informational identity and bound outcomes");
  int max_n = 6;
  findings->add_option("--max-n", max_n, "Largest vertex count (2..7)")->check(CLI::Range(2, 7));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format format = parse_format(cfg.format);
    if (*gen) {
      const Family f = parse_family(family);
      const std::size_t want = f == Family::complete_bipartite ? 2 : 1;
      if (params.size() != want)
        throw ParseError(std::string(family_name(f)) + " takes " + std::to_string(want) + " size parameter(s)");
      out << to_edge_list(generate(f, params[0], want == 2 ? params[1] : 0));
      return kExitOk;
    }
    if (*entropy) {
      const Graph g = read_graph(entropy_path, in);
      SpectralConfig sc{cfg.log_base(), cfg.tol_eig, cfg.rank_eps};
      out << render_entropy(entropy_report(g, orders, sc), format);
      return kExitOk;
    }
    if (*verify) {
      const Graph g = read_graph(verify_path, in);
      const VerifyReport r = verify_graph(g);
      out << render_verify(r, format);
      if (!r.passed()) {
        err << "error: construction identity failed\n";
        return kExitIdentity;
      }
      return kExitOk;
    }
    if (*scan_cmd) {
      ScanOptions opt;
      opt.p_grid = grid;
      opt.threads = cfg.threads;
      opt.allow_large = large;
      const ScanResult r = scan(scan_n, opt);
      out << render_scan(r, format, cfg.log_base());
      return r.violations.empty() ? kExitOk : kExitViolation;
    }
    if (*findings) {
      std::vector<Lemma1Tally> l1;
      std::vector<Lemma6Tally> l6;
      for (int n = 2; n <= max_n; ++n) {
        l1.push_back(tally_lemma1(n));
        l6.push_back(tally_lemma6(n));
      }
      out << render_findings(l1, l6, format);
      return kExitOk;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const IdentityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIdentity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace symlap
