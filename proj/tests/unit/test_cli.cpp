#include <fstream>
#include <sstream>

#include "burch/error.hpp"
#include "burch/report.hpp"
#include "doctest.h"

using namespace burch;

namespace {
const char* kIndexOne =
    R"({"p":32003,"vars":["x","y"],"ideal":["x^4","x^2*y","y^2"],"module":{"cyclic":["x^2","y"]},"command":"verify"})";

std::string inputError(const std::string& text) {
  try {
    parseJobText(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string instantiateError(const std::string& text) {
  try {
    instantiate(parseJobText(text));
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("job parsing") {
  JobSpec j = parseJobText(kIndexOne);
  CHECK(j.p == 32003);
  CHECK(j.vars == std::vector<std::string>{"x", "y"});
  CHECK(j.ideal == std::vector<std::string>{"x^4", "x^2*y", "y^2"});
  CHECK(j.module.kind == "cyclic");
  CHECK(j.module.cyclic == std::vector<std::string>{"x^2", "y"});
  CHECK(j.command == "verify");
  CHECK(j.regime == "auto");

  Instance in = instantiate(j);
  CHECK(in.R->dimension() == 6);
  CHECK(moduleDim(in.M) == 2);

  // parse, serialize, parse
  CHECK(parseJob(toJson(j)) == j);
  JobSpec pres = parseJobText(
      R"({"vars":["a","b"],"ideal":["a^2","b^3"],"module":{"presentation":{"degrees":[0,1],"relations":[["b","a"]]}},)"
      R"("caps":{"homDegree":4,"arity":3},"regime":"dg","command":"bar"})");
  CHECK(parseJob(toJson(pres)) == pres);
  CHECK(pres.caps.homDegree == 4);
  CHECK(pres.caps.arity == 3);

  // no module: the residue field
  JobSpec k = parseJobText(R"({"vars":["x","y"],"ideal":["x^2","y^2"]})");
  CHECK(moduleDim(instantiate(k).M) == 1);
}

TEST_CASE("job errors name the problem") {
  CHECK(inputError(R"({"vars":["x","y"],"command":"burch"})").find("'ideal': missing") != std::string::npos);
  CHECK(instantiateError(R"({"vars":["x","y"],"ideal":["x"]})").find("square of the maximal ideal") !=
        std::string::npos);
  CHECK(instantiateError(R"({"vars":["x","y"],"ideal":["x^2+y"]})").find("not homogeneous") != std::string::npos);
  CHECK(inputError(R"({"vars":["x"],"ideal":["x^2"],"p":32004})").find("'p'") != std::string::npos);
  CHECK(inputError(R"({"vars":["x"],"ideal":["x^2"],"colour":1})").find("'colour'") != std::string::npos);
  CHECK(inputError(R"({"vars":["x"],"ideal":["x^2"],"caps":{"arity":1}})").find("caps.arity") != std::string::npos);
  CHECK(inputError(R"({"vars":["x","x"],"ideal":["x^2"]})").find("duplicate") != std::string::npos);
  CHECK(inputError("{\"vars\": [\"x\"],\n  \"ideal\": [\"x^2\",]\n}").find("line 2, column 19") != std::string::npos);
  CHECK_THROWS_AS(instantiate(parseJobText(R"({"vars":["x"],"ideal":["x*z"]})")), InputError);
}

TEST_CASE("reports") {
  JobSpec j = parseJobText(kIndexOne);
  j.command = "burch";
  RunResult r = runJob(j);
  CHECK(r.exitCode == kExitOk);
  CHECK(r.report["schemaVersion"] == kSchemaVersion);
  CHECK(r.report["burch"]["burchIndex"] == 1);
  CHECK(r.report["burch"]["burchIdeal"] == Json::array({"y", "x^2"}));
  CHECK(r.report["burch"]["cycles"][0]["split"]["mode"] == "fails");

  j.command = "verify-general";
  j.caps.homDegree = 5;
  RunResult g = runJob(j);
  CHECK(g.exitCode == kExitOk);
  CHECK(g.report["verifyGeneral"]["note"] == "bounds vacuous: Burch index < 2");

  // same job, same bytes once the timing is removed
  RunResult g2 = runJob(j);
  CHECK(withoutTiming(g.report).dump() == withoutTiming(g2.report).dump());
  CHECK(g.report.back().is_number_float());

  JobSpec bad = parseJobText(R"({"vars":["x","y"],"ideal":["x^2"],"command":"verify"})");
  RunResult b = runJob(bad);
  CHECK(b.exitCode == kExitInput);
  CHECK(b.report["status"] == "input-error");

  JobSpec cap = parseJobText(
      R"({"vars":["x","y","z"],"ideal":["x^2","x*y","x*z","y^2","y*z","z^2"],"caps":{"barDegree":6,"barRank":500},"command":"bar"})");
  RunResult c = runJob(cap);
  CHECK(c.exitCode == kExitResource);
  CHECK(c.report["partial"] == true);
  CHECK(renderText(c.report).find("PARTIAL REPORT") != std::string::npos);
}

TEST_CASE("bundled corpus matches its golden reports") {
  RunResult r = runCorpus(std::string(BURCH_CORPUS_DIR) + "/index.json", 2);
  for (const auto& e : r.report["entries"]) CHECK_MESSAGE(e["ok"].get<bool>(), e.dump());
  CHECK(r.exitCode == kExitOk);
}
