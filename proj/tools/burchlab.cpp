#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "burch/error.hpp"
#include "burch/report.hpp"

using namespace burch;

namespace {

int envThreads() {
  const char* s = std::getenv("BURCHLAB_THREADS");
  int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (!s) return hw;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1) {
    std::cerr << "burchlab: ignoring BURCHLAB_THREADS=" << s << "\n";
    return hw;
  }
  return static_cast<int>(std::min<long>(v, 256));
}

int emit(const RunResult& rr, const std::string& out, bool json) {
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "burchlab: cannot write " << out << "\n";
      return kExitInput;
    }
    f << rr.report.dump(2) << "\n";
  }
  if (json)
    std::cout << rr.report.dump(2) << "\n";
  else
    std::cout << renderText(rr.report);
  if (rr.exitCode == kExitBoundViolation && rr.report.value("command", "") != "corpus")
    std::cerr << "burchlab: BOUND VIOLATION, an asserted k-rank bound failed\n";
  return rr.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burch index, bar resolutions and k-summands of syzygies"};
  app.set_version_flag("--version", "burchlab schema " + std::to_string(kSchemaVersion));
  std::string command, jobFile, out, regime;
  int cap = 0;
  long prime = 0;
  bool json = false, writeGolden = false;
  app.add_option("command", command, "burch | resolve | bar | cycles | verify-general | verify-golod | verify | corpus")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--job", jobFile, "job file (JSON); for corpus, the index file")->required();
  app.add_option("--cap", cap, "homological degree cap (syzygies, bar complex)")->check(CLI::Range(1, 30));
  app.add_option("--prime", prime, "characteristic of the coefficient field");
  app.add_option("--regime", regime, "bar regime")->check(CLI::IsMember({"dg", "ainf", "auto"}));
  app.add_option("--out", out, "also write the JSON report here");
  app.add_flag("--json", json, "print the JSON report instead of tables");
  app.add_flag("--write-golden", writeGolden, "corpus: rewrite the golden reports");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (command == "corpus") return emit(runCorpus(jobFile, envThreads(), writeGolden), out, json);

    std::ifstream in(jobFile);
    if (!in) throw InputError("cannot read job file " + jobFile);
    std::stringstream text;
    text << in.rdbuf();
    JobSpec job = parseJobText(text.str());
    job.command = command;
    if (cap > 0) {
      job.caps.homDegree = cap;
      job.caps.barDegree = std::min(cap, 12);
    }
    if (prime > 0) {
      Json j = toJson(job);
      j["p"] = prime;
      job = parseJob(j);
    }
    if (!regime.empty()) job.regime = regime;
    return emit(runJob(job), out, json);
  } catch (const InputError& e) {
    std::cerr << "burchlab: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "burchlab: " << e.what() << "\n";
    return kExitInternal;
  }
}
