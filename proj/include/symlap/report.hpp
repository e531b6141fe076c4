#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symlap/bounds.hpp"
#include "symlap/entropy.hpp"
#include "symlap/laplacian.hpp"
#include "symlap/qstate.hpp"

namespace symlap {

enum class Format { text, json, csv };

Format parse_format(std::string_view name);

/// Numbers use 17 significant digits so every double round-trips.
std::string format_number(double x);
/// Shortest form for Renyi order keys: "2", "0.5".
std::string format_order(double p);

/// Minimal streaming JSON writer with fixed key order (insertion order).
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double x);
  JsonWriter& value(long long x);
  JsonWriter& value(unsigned long long x);
  JsonWriter& value(int x) { return value(static_cast<long long>(x)); }
  JsonWriter& value(long x) { return value(static_cast<long long>(x)); }
  JsonWriter& value(unsigned long x) { return value(static_cast<unsigned long long>(x)); }
  JsonWriter& value(bool b);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& array(const std::vector<double>& xs);
  JsonWriter& array(const std::vector<int>& xs);

  const std::string& str() const noexcept { return out_; }

 private:
  void separate();
  void write_string(std::string_view s);

  std::string out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

std::string render_entropy(const EntropyReport& r, Format format);

struct VerifyReport {
  int n = 0;
  int m = 0;
  bool bipartite = false;
  Lemma1Report lemma1;
  double doubled_incidence_residual = 0.0;
  bool doubled_incidence_ok = false;

  /// Tr_E identity and edge-doubling identity; the Tr_V flag is informational.
  bool passed() const noexcept { return lemma1.trE_matches && doubled_incidence_ok; }
};

/// Purification identities plus the S S^T = 2L identity (1e-12) for one connected graph.
VerifyReport verify_graph(const Graph& g);

std::string render_verify(const VerifyReport& r, Format format);

/// Entropy-valued fields are converted to `base`; identity residuals are not.
std::string render_scan(const ScanResult& r, Format format, LogBase base);

struct Lemma6Tally {
  int n = 0;
  long graphs = 0;
  long vertices = 0;
  long vertex_failures = 0;
  long graphs_with_failure = 0;
  long aggregate_failures = 0;
  /// Largest lhs - rhs over failing vertices.
  double worst_excess = 0.0;
  Bitmask worst_bitmask = 0;
};

Lemma6Tally tally_lemma6(int n);

/// Tables for the Tr_V spectral agreement versus bipartiteness and the
/// neighbour-inverse-degree per-vertex and summed outcomes.
std::string render_findings(const std::vector<Lemma1Tally>& lemma1, const std::vector<Lemma6Tally>& lemma6,
                            Format format);

}  // namespace symlap
