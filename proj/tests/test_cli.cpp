#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "orthogen/record.hpp"
#include "report.hpp"

using namespace orthogen;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "orthogen");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

cli::Json json(const Run& r) { return cli::Json::parse(r.out); }

}  // namespace

TEST_CASE("classical coefficients") {
  const auto r = run({"coeffs", "classical", "--kind", "legendre", "--n", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json(r);
  CHECK(j["command"] == "coeffs classical");
  CHECK(j["alpha"].size() == 5);
  CHECK(j["alpha"][3].get<double>() == 0.0);
  CHECK(j["beta"][0].get<double>() == 2.0);
  CHECK(j["beta"][1].get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-16));
  CHECK(j["errors"].empty());
  CHECK(j["report"]["kount"].is_null());
}

TEST_CASE("discretization and moments examples") {
  const auto d = json(run({"coeffs", "discretize", "--example", "4.2", "--c", "1", "--n", "80",
                           "--format", "json"}));
  CHECK(d["beta"][0].get<double>() == doctest::Approx(5.141592654).epsilon(1e-10));
  CHECK(d["report"]["kount"] == 1);
  const auto m = json(run({"coeffs", "moments", "--example", "3.1", "--om2", "0.5", "--n", "80",
                           "--format", "json"}));
  CHECK(std::fabs(m["beta"][1].get<double>() - .5430534189555363) <= 1e-15);
  const auto s = json(run({"coeffs", "lanczos", "--points", "10", "--n", "10", "--format", "json"}));
  CHECK(s["beta"][0].get<double>() == doctest::Approx(2));
  const auto g = json(run({"coeffs", "modify", "--kind", "legendre", "--iopt", "4", "--x", "-1.1",
                           "--n", "20", "--format", "json"}));
  CHECK(g["params"]["method"] == "gchri");
  CHECK(g["report"]["nu_used"].get<int>() > 20);
  const auto i = json(run({"coeffs", "induced", "--m", "2", "--n", "5", "--format", "json"}));
  CHECK(i["beta"][0].get<double>() == doctest::Approx(8.0 / 45));
}

TEST_CASE("quadrature rules") {
  const auto g = json(run({"quad", "gauss", "--kind", "legendre", "--n", "2", "--format", "json"}));
  CHECK(g["nodes"][0].get<double>() == doctest::Approx(-0.5773502692));
  CHECK(g["weights"][1].get<double>() == doctest::Approx(1));
  CHECK(g["report"]["exactness"] == 3);
  const auto r = json(run({"quad", "radau", "--kind", "legendre", "--n", "1", "--end", "-1",
                           "--format", "json"}));
  CHECK(r["nodes"][0].get<double>() == doctest::Approx(-1));
  CHECK(r["nodes"][1].get<double>() == doctest::Approx(1.0 / 3));
  const auto l = json(run({"quad", "lobatto", "--kind", "legendre", "--n", "1", "--left", "-1",
                           "--right", "1", "--format", "json"}));
  CHECK(l["weights"][0].get<double>() == doctest::Approx(1.0 / 3));
  CHECK(l["weights"][1].get<double>() == doctest::Approx(4.0 / 3));
  CHECK(l["weights"][2].get<double>() == doctest::Approx(1.0 / 3));
  const auto csv = run({"quad", "gauss", "--kind", "hermite", "--n", "3", "--format", "csv"});
  CHECK(csv.out.rfind("k,node,weight\n", 0) == 0);
}

TEST_CASE("JSON output round-trips through the record format") {
  for (const char* kind : {"jacobi", "laguerre", "hermite", "chebyshev3"}) {
    const auto r = run({"coeffs", "classical", "--kind", kind, "--alpha", "0.3", "--beta", "-0.6",
                        "--n", "30", "--format", "json"});
    const auto t = cli::table_from_json(json(r));
    const auto back = table_from_record(to_record(t));
    CHECK(back.alpha == t.alpha);
    CHECK(back.beta == t.beta);
    const auto rec = run({"coeffs", "classical", "--kind", kind, "--alpha", "0.3", "--beta",
                          "-0.6", "--n", "30", "--format", "record"});
    const auto direct = table_from_record(rec.out);
    CHECK(direct.alpha == t.alpha);
    CHECK(direct.beta == t.beta);
  }
  const auto q = run({"quad", "lobatto", "--kind", "jacobi", "--alpha", "0.5", "--n", "7",
                      "--format", "json"});
  const auto rule = cli::rule_from_json(json(q));
  const auto back = rule_from_record(to_record(rule));
  CHECK(back.nodes == rule.nodes);
  CHECK(back.weights == rule.weights);
}

TEST_CASE("exit codes") {
  CHECK(run({"coeffs", "classical", "--n", "0"}).code == 2);
  CHECK(run({"coeffs", "classical", "--kind", "bessel", "--n", "3"}).code == 2);
  CHECK(run({"coeffs"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"repro", "12"}).code == 2);
  CHECK(run({"coeffs", "moments", "--example", "9.9", "--n", "4"}).code == 2);
  const auto bad = run({"quad", "radau", "--kind", "legendre", "--n", "1", "--end", "0",
                        "--format", "json"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("SingularSystem") != std::string::npos);
  const auto j = json(bad);
  REQUIRE(j["errors"].size() == 1);
  CHECK(j["errors"][0]["kind"] == "SingularSystem");
  CHECK(j["errors"][0]["fatal"] == true);
  const auto nc = run({"coeffs", "discretize", "--example", "4.5", "--n", "40", "--ncapm", "60"});
  CHECK(nc.code == 1);
  CHECK(nc.err.find("NonConvergence") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tolerance from the environment") {
  setenv("ORTHOGEN_EPS", "1e-6", 1);
  const auto loose = json(run({"coeffs", "discretize", "--example", "4.5", "--n", "20", "--format",
                               "json"}));
  CHECK(loose["params"]["eps"].get<double>() == 1e-6);
  const auto flag = json(run({"coeffs", "discretize", "--example", "4.5", "--n", "20", "--eps",
                              "1e-12", "--format", "json"}));
  CHECK(flag["params"]["eps"].get<double>() == 1e-12);
  setenv("ORTHOGEN_EPS", "nonsense", 1);
  CHECK(run({"coeffs", "discretize", "--example", "4.5", "--n", "20"}).code == 2);
  unsetenv("ORTHOGEN_EPS");
}

TEST_CASE("repro drivers are deterministic") {
  for (const char* id : {"4", "10"}) {
    const auto a = run({"repro", id}), b = run({"repro", id});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("PASS") != std::string::npos);
  }
}
