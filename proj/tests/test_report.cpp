#include <doctest.h>

#include <json.hpp>

#include <cmath>

#include "symlap/report.hpp"

using namespace symlap;

TEST_CASE("number formatting round-trips") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(std::log(3.0)) == "1.0986122886681098");
  CHECK(std::stod(format_number(std::log(3.0))) == std::log(3.0));
  CHECK(format_number(NAN) == "null");
  CHECK(format_order(2.0) == "2");
  CHECK(format_order(0.5) == "0.5");
}

TEST_CASE("json writer nesting") {
  JsonWriter w;
  w.begin_object();
  w.key("a").value(1);
  w.key("b").array(std::vector<double>{0.5, 2.0});
  w.key("c").begin_object();
  w.key("d").value("x\"y");
  w.end_object();
  w.key("e").value(true);
  w.end_object();
  CHECK(w.str() == R"({"a":1,"b":[0.5,2],"c":{"d":"x\"y"},"e":true})");
  const auto parsed = nlohmann::json::parse(w.str());
  CHECK(parsed["c"]["d"] == "x\"y");
}

TEST_CASE("entropy report rendering") {
  const std::vector<double> orders{0.5};
  const EntropyReport r = entropy_report(complete(4), orders);
  const auto j = nlohmann::json::parse(render_entropy(r, Format::json));
  CHECK(j["n"] == 4);
  CHECK(j["m"] == 6);
  CHECK(j["degrees"] == nlohmann::json::array({3, 3, 3, 3}));
  CHECK(j["spectrum"].size() == 4);
  CHECK(j["vn"].get<double>() == doctest::Approx(1.0986123).epsilon(1e-6));
  CHECK(j["renyi"].contains("2"));
  CHECK(j["renyi"].contains("0.5"));
  CHECK(j["base"] == "e");
  const std::string csv = render_entropy(r, Format::csv);
  CHECK(csv.rfind("n,m,degrees,spectrum,vn,renyi_0.5,renyi_2,structural,base\n", 0) == 0);
  CHECK(render_entropy(r, Format::text).find("H = 1.09861228866810") != std::string::npos);
}

TEST_CASE("scan rendering") {
  const ScanResult r = scan(4);
  const auto j = nlohmann::json::parse(render_scan(r, Format::json, LogBase::e));
  CHECK(j["graph_count"] == 38);
  CHECK(j["argmax_vn"] == 63);
  CHECK(j["violations"].empty());
  const auto j2 = nlohmann::json::parse(render_scan(r, Format::json, LogBase::two));
  CHECK(j2["base"] == "2");
  CHECK(std::abs(j2["max_vn"].get<double>() - j["max_vn"].get<double>() / std::log(2.0)) <
        1e-12 * j2["max_vn"].get<double>());
  CHECK(render_scan(r, Format::csv, LogBase::e).find("\nbitmask,check,lhs,rhs,margin\n") != std::string::npos);
}

TEST_CASE("verify rendering") {
  const VerifyReport v = verify_graph(complete(3));
  CHECK(v.passed());
  CHECK_FALSE(v.bipartite);
  const auto j = nlohmann::json::parse(render_verify(v, Format::json));
  CHECK(j["trE_matches"] == true);
  CHECK(j["trV_isospectral"] == false);
  CHECK(j["passed"] == true);
}

TEST_CASE("findings rendering") {
  std::vector<Lemma1Tally> l1{tally_lemma1(3)};
  std::vector<Lemma6Tally> l6{tally_lemma6(3)};
  const auto j = nlohmann::json::parse(render_findings(l1, l6, Format::json));
  CHECK(j["trace_out_vertices"][0]["graphs"] == 4);
  // P_3 three ways (bipartite, agree) and K_3 (not bipartite, disagree).
  CHECK(j["trace_out_vertices"][0]["bipartite_agree"] == 3);
  CHECK(j["trace_out_vertices"][0]["nonbipartite_disagree"] == 1);
  CHECK(j["neighbour_inverse_sum"][0]["vertex_failures"] == 3);
  const std::string md = render_findings(l1, l6, Format::text);
  CHECK(md.find("| 3 | 4 |") != std::string::npos);
}
