#include <doctest.h>

#include "../tools/cli.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fjrw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report command") {
  Run r = cli({"report", "x^3+y^15", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "inconclusive");
  CHECK(j["lambda"] == 6);
  CHECK(j["mu"]["total"] == 12);
  CHECK(j["C_d"] == "1/45");
  CHECK(j["chat"] == "6/5");
  CHECK(j["weight_system"]["w1"] == 5);

  CHECK(cli({"report", "x^2+y^2", "--json"}).out.find("small-charge-semisimple") !=
        std::string::npos);
  auto loop = nlohmann::json::parse(cli({"report", "x^2*y+x*y^2", "--json"}).out);
  CHECK(loop["verdict"] == "small-charge-semisimple");
  CHECK(loop["witnesses"]["small_charge_family"] == "loop-to-chain-equivalence");
}

TEST_CASE("report is byte-identical across runs") {
  Run a = cli({"report", "x^4+y^10", "--json"});
  Run b = cli({"report", "x^4+y^10", "--json"});
  CHECK(a.out == b.out);
}

TEST_CASE("correlator command") {
  SUBCASE("defining five-point value") {
    Run r = cli({"correlator", "x^4+y^4", "a3", "a2", "a2", "a2", "a2", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == "1/16");
    CHECK(j["case"] == "A");
    CHECK(j["ranks"][0] == 1);
  }
  SUBCASE("selection-rule vanishing is a value of 0 with a diagnosis") {
    Run r = cli({"correlator", "x^4+y^4", "a2", "a2", "a2", "a2", "a2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selection rule fails") != std::string::npos);
    CHECK(r.out.find("value = 0") != std::string::npos);
  }
  SUBCASE("arity is rejected") {
    Run r = cli({"correlator", "x^4+y^4", "a2", "a2", "a2", "a2", "a2", "a2"});
    CHECK(r.code == 3);
  }
  SUBCASE("broad tokens refuse evaluation with exit 3") {
    Run r = cli({"correlator", "x^3+y^6", "b1", "b2", "a1"});
    CHECK(r.code == 3);
    CHECK(r.out.find("broad insertions") != std::string::npos);
  }
  SUBCASE("bad tokens") {
    CHECK(cli({"correlator", "x^4+y^4", "a2", "qq", "a2"}).code == 2);
    CHECK(cli({"correlator", "x^4+y^4", "a4", "a2", "a2"}).code == 3);  // 4 not narrow (d=4)
  }
}

TEST_CASE("exit codes") {
  CHECK(cli({"report", "x^3+y^2+1"}).code == 2);            // parse error
  CHECK(cli({"report", "2*x^3+y^2"}).code == 2);
  CHECK(cli({"correlator", "x^6+y^2", "a1", "a1", "a1"}).code == 3);  // weight-1/2 refusal
  CHECK(cli({"sweep", "--dmax", "3"}).code == 3);
  CHECK(cli({"nonsense"}).code == 2);
}

TEST_CASE("euler command") {
  Run r = cli({"euler", "x^4+y^4", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["alpha1_closed_form"] == "-1/8*t^2");
  CHECK(j["alpha1_direct_sum"] == "-1/16*t^2");
  CHECK(j["matrix"]["determinant_nonzero"] == true);
  REQUIRE(j["matrix"]["block"].is_array());  // array of rows, not an object
  CHECK(j["matrix"]["block"][1][0] == "6");

  Run text = cli({"euler", "x^3+y^15"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("determinant nonzero at generic t: no") != std::string::npos);
  CHECK(cli({"euler", "x^4+y^4"}).out.find("determinant nonzero at generic t: yes") !=
        std::string::npos);

  Run chain = cli({"euler", "x^3+x*y^8", "--json"});
  auto jc = nlohmann::json::parse(chain.out);
  CHECK(jc["euler_class"]["alpha_1"] == "(1/2*t^2)*sum_B");
  CHECK(jc["euler_class"]["alpha_11"] == "10");
}

TEST_CASE("sweep command") {
  SUBCASE("smallest bound includes the d=4 Fermat") {
    Run r = cli({"sweep", "--type", "fermat", "--dmax", "4", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& row : j["rows"])
      if (row["d"] == 4 && row["delta"] == 4) found = true;
    CHECK(found);
  }
  SUBCASE("inconclusive rows at dmax 200 are the two known classes") {
    Run r = cli({"sweep", "--type", "fermat", "--dmax", "200", "--json"});
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["inconclusive"].size() == 2);
    CHECK(j["inconclusive"][0]["polynomial"] == "x^20+y^5");  // w2 = 4 enumerates first
    CHECK(j["inconclusive"][1]["polynomial"] == "x^15+y^3");
    CHECK(j["summary"]["total"].get<long long>() == j["rows"].size());
  }
  SUBCASE("deterministic output") {
    Run a = cli({"sweep", "--type", "all", "--dmax", "30", "--json"});
    Run b = cli({"sweep", "--type", "all", "--dmax", "30", "--json"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("tables command") {
  Run r = cli({"tables", "x^3+y^6", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["monomial_table"]["matches"] == true);
  CHECK(j["monomial_table"]["total"] == "10368");  // 144 * 36 * 2
  bool k1sq = false;
  for (const auto& row : j["intersection_table"])
    if (row["class"] == "k1^2" && row["value"] == "5") k1sq = true;
  CHECK(k1sq);
}
