#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "betaspec/report.hpp"

using namespace betaspec;
using Json = nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("matrix csv, exact and decimal") {
  const BetaMatrix b(BetaParam::parse("2"), 3);
  const auto exact = lines(matrix_csv(b, 10, true));
  REQUIRE(exact.size() == 3);
  CHECK(exact[0] == "-1/2,-1/2,-1/2");
  CHECK(exact[1] == "5/4,1/4,1/4");
  CHECK(exact[2] == "1/8,9/8,1/8");
  const auto dec = lines(matrix_csv(b, 10, false));
  REQUIRE(dec.size() == 3);
  CHECK(dec[1] == "1.25,0.25,0.25");
}

TEST_CASE("charpoly json") {
  const BetaParam beta = BetaParam::parse("2");
  const Json j = Json::parse(poly_json(charpoly_closed_form(beta, 3), beta, 10, true));
  CHECK(j["degree"] == 3);
  REQUIRE(j["coeffs"].size() == 4);
  CHECK(j["coeffs"][0] == "1/2");
  CHECK(j["coeffs"][2] == "1/8");
  CHECK(j["coeffs"][3] == "1");
  CHECK(j["exact"] == true);
}

TEST_CASE("eigenvalue report schemas") {
  const BetaParam beta = BetaParam::parse("3");
  const RootSet r = spectrum(beta, 12);
  const Json j = Json::parse(roots_report(r, beta, 15, Format::json));
  CHECK(j["n"] == 12);
  CHECK(j["beta"] == "3");
  REQUIRE(j["roots"].size() == 12);
  for (const auto& z : j["roots"]) {
    CHECK(z.contains("re"));
    CHECK(z.contains("im"));
    CHECK(z.contains("residual"));
  }
  const auto csv = lines(roots_report(r, beta, 15, Format::csv));
  CHECK(csv.size() == 13);
  CHECK(csv[0] == "re,im,residual");
}

TEST_CASE("cluster report schemas") {
  const BetaParam beta = BetaParam::parse("4/3");
  const std::vector<ClusterReport> reports = {cluster_count(spectrum(beta, 100), 0.1, beta)};
  const auto csv = lines(cluster_report(reports, 10, Format::csv));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "n,beta,epsilon,outside_count");
  CHECK(csv[1] == "100,4/3,0.1,2");
  const Json j = Json::parse(cluster_report(reports, 10, Format::json));
  CHECK(j[0]["outside_count"] == 2);
  CHECK(j[0]["outside_points"].size() == 2);
}

TEST_CASE("outlier report schemas") {
  const BetaParam beta = BetaParam::parse("4/3");
  const std::vector<OutlierRecord> records = {find_outliers(beta, 100, 30), find_outliers(beta, 2, 20, 0.6)};
  const auto csv = lines(outlier_report(records, 20, Format::csv));
  REQUIRE(csv.size() == 3);
  CHECK(csv[0] == "n,large,small,err_large,err_small");
  CHECK(csv[1].rfind("100,2.99999999999884540", 0) == 0);
  CHECK(csv[2] == "2,,,,");
  const Json j = Json::parse(outlier_report(records, 20, Format::json));
  CHECK(j[1]["large"].is_null());
  CHECK(j[1].contains("diagnostic"));
  CHECK_FALSE(j[0].contains("diagnostic"));
}

TEST_CASE("singular value report") {
  const BetaParam beta = BetaParam::parse("2");
  const auto values = singular_values(beta, 4, Precision(128));
  const auto csv = lines(singular_report(values, beta, 10, Format::csv));
  REQUIRE(csv.size() == 5);
  CHECK(csv[0] == "index,sigma");
  CHECK(csv[1].rfind("1,", 0) == 0);
  const Json j = Json::parse(singular_report(values, beta, 10, Format::json));
  CHECK(j["singular_values"].size() == 4);
  CHECK(j["precision_bits"] == 128);
}

TEST_CASE("weyl report") {
  const RootSet r = spectrum(BetaParam::parse("3"), 20);
  std::vector<WeylReport> reports;
  for (const TestFunction f : all_test_functions()) reports.push_back(weyl_sum(r.roots, f, WeylKind::eigen));
  const auto csv = lines(weyl_report(reports, 8, Format::csv));
  REQUIRE(csv.size() == all_test_functions().size() + 1);
  CHECK(csv[0] == "n,F_id,empirical,reference,gap");
  CHECK(csv[1].rfind("20,radial_bump,", 0) == 0);
  const Json j = Json::parse(weyl_report(reports, 8, Format::json));
  CHECK(j[0]["kind"] == "eigen");
}

TEST_CASE("beta = 1 report") {
  const std::vector<AsymptoticFit> fits = {lambda_max_beta1(50, 30)};
  const auto csv = lines(beta1_report(fits, nullptr, 10, Format::csv));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "n,c0_est,c1_est");
  CHECK(csv[1] == "50,-0.02041667021,-1.020833511");
  const Real c2(Rational(1, 4), Precision(64));
  const Json j = Json::parse(beta1_report(fits, &c2, 10, Format::json));
  CHECK(j["fits"][0]["below_n"] == true);
  CHECK(j["c2_richardson"] == "0.25");
  CHECK_FALSE(Json::parse(beta1_report(fits, nullptr, 10, Format::json)).contains("c2_richardson"));
}

TEST_CASE("power trace json") {
  const Json j = Json::parse(power_trace_json(power_method_trace(4, 2)));
  CHECK(j["n"] == 4);
  CHECK(j["iterates"].size() == 3);
  CHECK(j["first_components"][1] == "3");
  CHECK(j["ratios"].size() == 2);
}

TEST_CASE("reproduce targets") {
  CHECK(reproduce_targets().size() == 6);
  CHECK_THROWS_AS(reproduce("fig9"), Error);
  const Bundle t1 = reproduce("table1");
  REQUIRE(t1.files.size() == 1);
  CHECK(t1.files[0].first == "table1.csv");
  const auto rows = lines(t1.files[0].second);
  CHECK(rows.size() == 16);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].find(",true,") != std::string::npos);
}
