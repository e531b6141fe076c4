#include "symlap/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "symlap/error.hpp"

namespace symlap {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ParseError("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_order(double p) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separate();
  write_string(k);
  out_ += ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separate();
  out_ += format_number(x);
  return *this;
}

JsonWriter& JsonWriter::value(long long x) {
  separate();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(unsigned long long x) {
  separate();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  separate();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  separate();
  write_string(s);
  return *this;
}

void JsonWriter::write_string(std::string_view s) {
  out_ += '"';
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      default: out_ += c;
    }
  }
  out_ += '"';
}

JsonWriter& JsonWriter::array(const std::vector<double>& xs) {
  begin_array();
  for (double x : xs) value(x);
  return end_array();
}

JsonWriter& JsonWriter::array(const std::vector<int>& xs) {
  begin_array();
  for (int x : xs) value(x);
  return end_array();
}

namespace {

std::string join_numbers(const std::vector<double>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format_number(xs[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

bool entropy_valued(const std::string& check) { return check.rfind("identity:", 0) != 0; }

}  // namespace

std::string render_entropy(const EntropyReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      JsonWriter w;
      w.begin_object();
      w.key("n").value(r.n);
      w.key("m").value(r.m);
      w.key("degrees").array(r.degrees);
      w.key("spectrum").array(r.spectrum.values);
      w.key("vn").value(r.vn);
      w.key("renyi").begin_object();
      for (const auto& [p, h] : r.renyi) w.key(format_order(p)).value(h);
      w.end_object();
      w.key("structural").value(r.structural);
      w.key("base").value(base_name(r.base));
      w.end_object();
      out << w.str() << '\n';
      break;
    }
    case Format::csv: {
      out << "n,m,degrees,spectrum,vn";
      for (const auto& [p, h] : r.renyi) out << ",renyi_" << format_order(p);
      out << ",structural,base\n";
      out << r.n << ',' << r.m << ',' << join_ints(r.degrees, ' ') << ',' << join_numbers(r.spectrum.values, ' ')
          << ',' << format_number(r.vn);
      for (const auto& [p, h] : r.renyi) out << ',' << format_number(h);
      out << ',' << format_number(r.structural) << ',' << base_name(r.base) << '\n';
      break;
    }
    case Format::text: {
      out << "n = " << r.n << ", m = " << r.m << '\n';
      out << "degrees: " << join_ints(r.degrees, ' ') << '\n';
      out << "spectrum(rho_V): " << join_numbers(r.spectrum.values, ' ') << '\n';
      out << "H = " << format_number(r.vn) << " (base " << base_name(r.base) << ")\n";
      for (const auto& [p, h] : r.renyi) out << "H_" << format_order(p) << " = " << format_number(h) << '\n';
      out << "H_str = " << format_number(r.structural) << '\n';
      break;
    }
  }
  return out.str();
}

VerifyReport verify_graph(const Graph& g) {
  VerifyReport r;
  r.n = g.n();
  r.m = g.m();
  r.bipartite = is_bipartite(g);
  r.lemma1 = verify_lemma1(g);
  const DoubledIncidence dbl = doubled_incidence(g);
  r.doubled_incidence_residual = max_abs_diff(gram_rows(dbl.s_bar), symmetric(g).scaled(2.0));
  r.doubled_incidence_ok = r.doubled_incidence_residual < 1e-12;
  return r;
}

std::string render_verify(const VerifyReport& r, Format format) {
  const auto& l = r.lemma1;
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      JsonWriter w;
      w.begin_object();
      w.key("n").value(r.n);
      w.key("m").value(r.m);
      w.key("bipartite").value(r.bipartite);
      w.key("trE_matches").value(l.trE_matches);
      w.key("trE_residual").value(l.trE_residual);
      w.key("trV_isospectral").value(l.trV_isospectral);
      w.key("trV_spectrum").array(l.trV_spectrum);
      w.key("lplus_spectrum").array(l.lplus_spectrum);
      w.key("schmidt_gap").value(l.schmidt_gap);
      w.key("entropy_gap").value(l.entropy_gap);
      w.key("doubled_incidence_residual").value(r.doubled_incidence_residual);
      w.key("doubled_incidence_ok").value(r.doubled_incidence_ok);
      w.key("passed").value(r.passed());
      w.end_object();
      out << w.str() << '\n';
      break;
    }
    case Format::csv:
      out << "n,m,bipartite,trE_matches,trE_residual,trV_isospectral,schmidt_gap,entropy_gap,"
             "doubled_incidence_residual,doubled_incidence_ok,passed\n";
      out << r.n << ',' << r.m << ',' << r.bipartite << ',' << l.trE_matches << ',' << format_number(l.trE_residual)
          << ',' << l.trV_isospectral << ',' << format_number(l.schmidt_gap) << ',' << format_number(l.entropy_gap)
          << ',' << format_number(r.doubled_incidence_residual) << ',' << r.doubled_incidence_ok << ','
          << r.passed() << '\n';
      break;
    case Format::text:
      out << "n = " << r.n << ", m = " << r.m << (r.bipartite ? " (bipartite)" : " (not bipartite)") << '\n';
      out << "Tr_E(psi psi^T) = L: " << (l.trE_matches ? "pass" : "FAIL") << " (max residual "
          << format_number(l.trE_residual) << ")\n";
      out << "S_bar S_bar^T = 2L: " << (r.doubled_incidence_ok ? "pass" : "FAIL") << " (max residual "
          << format_number(r.doubled_incidence_residual) << ")\n";
      out << "Schmidt spectra gap: " << format_number(l.schmidt_gap)
          << ", entropy gap: " << format_number(l.entropy_gap) << '\n';
      out << "Tr_V nonzero spectrum: " << join_numbers(l.trV_spectrum, ' ') << '\n';
      out << "L+ nonzero spectrum:   " << join_numbers(l.lplus_spectrum, ' ') << '\n';
      out << "Tr_V isospectral with L+ (informational): " << (l.trV_isospectral ? "yes" : "no") << '\n';
      break;
  }
  return out.str();
}

std::string render_scan(const ScanResult& r, Format format, LogBase base) {
  auto conv = [&](double x) { return to_base(x, base); };
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      JsonWriter w;
      w.begin_object();
      w.key("n").value(r.n);
      w.key("graph_count").value(r.graph_count);
      w.key("p_grid").array(r.p_grid);
      w.key("base").value(base_name(base));
      w.key("min_vn").value(conv(r.min_vn));
      w.key("argmin_vn").value(static_cast<unsigned long long>(r.argmin_vn));
      w.key("max_vn").value(conv(r.max_vn));
      w.key("argmax_vn").value(static_cast<unsigned long long>(r.argmax_vn));
      w.key("min_renyi2").value(conv(r.min_renyi2));
      w.key("argmin_renyi2").value(static_cast<unsigned long long>(r.argmin_renyi2));
      w.key("violations").begin_array();
      for (const auto& v : r.violations) {
        const bool ent = entropy_valued(v.check);
        w.begin_object();
        w.key("bitmask").value(static_cast<unsigned long long>(v.bitmask));
        w.key("check").value(v.check);
        w.key("lhs").value(ent ? conv(v.lhs) : v.lhs);
        w.key("rhs").value(ent ? conv(v.rhs) : v.rhs);
        w.key("margin").value(ent ? conv(v.margin) : v.margin);
        w.end_object();
      }
      w.end_array();
      w.key("informational").begin_object();
      w.key("lemma6_vertex_failures").value(r.informational.lemma6_vertex_failures);
      w.key("lemma6_graphs_with_failure").value(r.informational.lemma6_graphs_with_failure);
      w.key("lemma6_aggregate_failures").value(r.informational.lemma6_aggregate_failures);
      w.key("boundary_passes").value(r.informational.boundary_passes);
      w.end_object();
      w.end_object();
      out << w.str() << '\n';
      break;
    }
    case Format::csv: {
      out << "n,graph_count,base,min_vn,argmin_vn,max_vn,argmax_vn,min_renyi2,argmin_renyi2,"
             "violation_count,lemma6_vertex_failures,lemma6_graphs_with_failure,lemma6_aggregate_failures,"
             "boundary_passes\n";
      out << r.n << ',' << r.graph_count << ',' << base_name(base) << ',' << format_number(conv(r.min_vn)) << ','
          << r.argmin_vn << ',' << format_number(conv(r.max_vn)) << ',' << r.argmax_vn << ','
          << format_number(conv(r.min_renyi2)) << ',' << r.argmin_renyi2 << ',' << r.violations.size() << ','
          << r.informational.lemma6_vertex_failures << ',' << r.informational.lemma6_graphs_with_failure << ','
          << r.informational.lemma6_aggregate_failures << ',' << r.informational.boundary_passes << '\n';
      out << "\nbitmask,check,lhs,rhs,margin\n";
      for (const auto& v : r.violations) {
        const bool ent = entropy_valued(v.check);
        out << v.bitmask << ',' << v.check << ',' << format_number(ent ? conv(v.lhs) : v.lhs) << ','
            << format_number(ent ? conv(v.rhs) : v.rhs) << ',' << format_number(ent ? conv(v.margin) : v.margin)
            << '\n';
      }
      break;
    }
    case Format::text: {
      out << "n = " << r.n << ": " << r.graph_count << " labeled connected graphs (base " << base_name(base)
          << ")\n";
      out << "min H   = " << format_number(conv(r.min_vn)) << " at bitmask " << r.argmin_vn << '\n';
      out << "max H   = " << format_number(conv(r.max_vn)) << " at bitmask " << r.argmax_vn << '\n';
      out << "min H_2 = " << format_number(conv(r.min_renyi2)) << " at bitmask " << r.argmin_renyi2 << '\n';
      out << "violations: " << r.violations.size() << '\n';
      for (const auto& v : r.violations)
        out << "  " << v.bitmask << ' ' << v.check << " margin " << format_number(v.margin) << '\n';
      out << "strict bounds met only at the boundary: " << r.informational.boundary_passes << '\n';
      out << "neighbour-inverse-sum bound, per vertex (informational): " << r.informational.lemma6_vertex_failures
          << " failing vertices in " << r.informational.lemma6_graphs_with_failure << " graphs; summed form failures: "
          << r.informational.lemma6_aggregate_failures << '\n';
      break;
    }
  }
  return out.str();
}

Lemma6Tally tally_lemma6(int n) {
  Lemma6Tally t;
  t.n = n;
  for_each_connected(n, [&](const Graph& g) {
    const Lemma6Report r = lemma6_check(g);
    ++t.graphs;
    t.vertices += g.n();
    const int fails = r.vertex_failures();
    t.vertex_failures += fails;
    if (fails) ++t.graphs_with_failure;
    if (!r.aggregate_holds) ++t.aggregate_failures;
    for (const auto& v : r.vertices) {
      if (!v.holds && v.lhs - v.rhs > t.worst_excess) {
        t.worst_excess = v.lhs - v.rhs;
        t.worst_bitmask = g.bitmask();
      }
    }
  });
  return t;
}

std::string render_findings(const std::vector<Lemma1Tally>& lemma1, const std::vector<Lemma6Tally>& lemma6,
                            Format format) {
  std::ostringstream out;
  if (format == Format::json) {
    JsonWriter w;
    w.begin_object();
    w.key("trace_out_vertices").begin_array();
    for (const auto& t : lemma1) {
      w.begin_object();
      w.key("n").value(t.n);
      w.key("graphs").value(t.graphs);
      w.key("trE_failures").value(t.trE_failures);
      w.key("max_trE_residual").value(t.max_trE_residual);
      w.key("max_entropy_gap").value(t.max_entropy_gap);
      w.key("bipartite_agree").value(t.bipartite_agree);
      w.key("bipartite_disagree").value(t.bipartite_disagree);
      w.key("nonbipartite_agree").value(t.nonbipartite_agree);
      w.key("nonbipartite_disagree").value(t.nonbipartite_disagree);
      w.end_object();
    }
    w.end_array();
    w.key("neighbour_inverse_sum").begin_array();
    for (const auto& t : lemma6) {
      w.begin_object();
      w.key("n").value(t.n);
      w.key("graphs").value(t.graphs);
      w.key("vertices").value(t.vertices);
      w.key("vertex_failures").value(t.vertex_failures);
      w.key("graphs_with_failure").value(t.graphs_with_failure);
      w.key("aggregate_failures").value(t.aggregate_failures);
      w.key("worst_excess").value(t.worst_excess);
      w.key("worst_bitmask").value(static_cast<unsigned long long>(t.worst_bitmask));
      w.end_object();
    }
    w.end_array();
    w.end_object();
    out << w.str() << '\n';
    return out.str();
  }
  if (format == Format::csv) {
    out << "n,graphs,trE_failures,max_trE_residual,max_entropy_gap,bipartite_agree,bipartite_disagree,"
           "nonbipartite_agree,nonbipartite_disagree\n";
    for (const auto& t : lemma1)
      out << t.n << ',' << t.graphs << ',' << t.trE_failures << ',' << format_number(t.max_trE_residual) << ','
          << format_number(t.max_entropy_gap) << ',' << t.bipartite_agree << ',' << t.bipartite_disagree << ','
          << t.nonbipartite_agree << ',' << t.nonbipartite_disagree << '\n';
    out << "\nn,graphs,vertices,vertex_failures,graphs_with_failure,aggregate_failures,worst_excess,worst_bitmask\n";
    for (const auto& t : lemma6)
      out << t.n << ',' << t.graphs << ',' << t.vertices << ',' << t.vertex_failures << ',' << t.graphs_with_failure
          << ',' << t.aggregate_failures << ',' << format_number(t.worst_excess) << ',' << t.worst_bitmask << '\n';
    return out.str();
  }

  out << "## Vertex-traced operator vs positive symmetric Laplacian (nonzero spectra)\n\n";
  out << "| n | graphs | Tr_E failures | max Tr_E residual | max entropy gap | bipartite: agree / disagree | "
         "non-bipartite: agree / disagree |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& t : lemma1)
    out << "| " << t.n << " | " << t.graphs << " | " << t.trE_failures << " | " << format_number(t.max_trE_residual)
        << " | " << format_number(t.max_entropy_gap) << " | " << t.bipartite_agree << " / " << t.bipartite_disagree
        << " | " << t.nonbipartite_agree << " / " << t.nonbipartite_disagree << " |\n";
  out << "\n## Neighbour-inverse-degree bound (1/d_i) sum_{j~i} 1/d_j <= 1/sqrt(d_i)\n\n";
  out << "| n | graphs | vertices | failing vertices | graphs with a failing vertex | summed-form failures | "
         "worst excess | worst bitmask |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& t : lemma6)
    out << "| " << t.n << " | " << t.graphs << " | " << t.vertices << " | " << t.vertex_failures << " | "
        << t.graphs_with_failure << " | " << t.aggregate_failures << " | " << format_number(t.worst_excess) << " | "
        << t.worst_bitmask << " |\n";
  return out.str();
}

}  // namespace symlap
