#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "momentcf/checks.hpp"
#include "momentcf/cli.hpp"

using namespace momentcf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seq prints comma-separated exact values") {
  CHECK(run({"seq", "--family", "genocchi", "--n", "5"}).out == "1,1,3,17,155,2073\n");
  CHECK(run({"seq", "--family", "hahn", "--params", "A=1,B=1,C=2", "--n", "4", "--format", "csv"}).out ==
        "1,-1/2,1/6,0,-1/30\n");
  CHECK(run({"seq", "--family", "median_genocchi", "--n", "6"}).out == "1,1,2,8,56,608,9440\n");
  CHECK(run({"seq", "--family", "bernoulli", "--n", "2"}).out == "1,-1/2,1/6\n");
  CHECK(run({"seq", "--family", "cdh", "--params", "a=1,b=1,c=1", "--n", "3"}).out == "1,3,17,155\n");
  CHECK(run({"seq", "--family", "dumont_foata", "--params", "alpha=1,alpha_bar=1,beta=1,beta_bar=0,gamma=1,gamma_bar=1",
             "--n", "3"})
            .out == "1,2,8,56\n");
}

TEST_CASE("json output echoes the command") {
  const auto r = run({"seq", "--family", "genocchi", "--n", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"]["verb"] == "seq");
  CHECK(doc["command"]["family"] == "genocchi");
  CHECK(doc["command"]["n"] == 2);
  CHECK(doc["values"] == nlohmann::json::array({"1", "1", "3"}));
}

TEST_CASE("cf prints continued-fraction coefficients") {
  CHECK(run({"cf", "--family", "genocchi", "--depth", "3"}).out == "gamma,1,6,15\nbeta,2,24\n");
  CHECK(run({"cf", "--family", "median_genocchi", "--depth", "4", "--kind", "s"}).out == "alpha,1,1,4,4\n");
  const auto j = nlohmann::json::parse(run({"cf", "--family", "hahn", "--params", "A=1,B=1,C=2", "--depth", "1",
                                            "--kind", "s", "--format", "json"})
                                           .out);
  CHECK(j["alphas"] == nlohmann::json::array({"-1/2"}));
  const auto df = run({"cf", "--family", "dumont_foata", "--depth", "1"});
  CHECK(df.code == 0);
  CHECK(df.out == "gamma,alpha*beta_bar + alpha_bar*gamma + beta*gamma_bar\nbeta,\n");
}

TEST_CASE("egf prints mu_k/k!") {
  CHECK(run({"egf", "--family", "genocchi", "--order", "3"}).out == "1,1,3/2,17/6\n");
}

TEST_CASE("verify reports pass and fail") {
  const auto r = run({"verify", "--id", "median-genocchi-triple", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS (3 routes agree)\n");
  CHECK(r.err.find("seed") != std::string::npos);
  const auto unknown = run({"verify", "--id", "no-such-check"});
  CHECK(unknown.code == 2);
}

TEST_CASE("usage and parameter errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"seq", "--family", "nope"}).code == 2);
  CHECK(run({"seq", "--family", "hahn", "--params", "A=1,B=1"}).code == 2);
  CHECK(run({"seq", "--family", "hahn", "--params", "A=1,B=1,C=2,D=3"}).code == 2);
  CHECK(run({"seq", "--family", "hahn", "--params", "A=1,B=1,C=x"}).code == 2);
  CHECK(run({"seq", "--family", "genocchi", "--n", "-1"}).code == 2);
  CHECK(run({"seq", "--family", "wilson", "--params", "a=1,b=-1,c=1/2,d=-1/2", "--n", "3"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every registered verification id is listed in the help text") {
  const auto help = run({"--help"}).out;
  std::set<std::string> ids;
  for (const auto& info : check_registry()) {
    CHECK(ids.insert(info.id).second);
    CHECK(help.find(info.id) != std::string::npos);
  }
}
