#include "burch/jobspec.hpp"

#include <algorithm>
#include <set>

#include "burch/error.hpp"

namespace burch {

const std::vector<std::string> kCommands = {"burch", "resolve", "bar", "cycles", "verify-general",
                                            "verify-golod", "verify", "corpus"};

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InputError("job field '" + field + "': " + what);
}

std::vector<std::string> stringList(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) bad(field + "[" + std::to_string(k) + "]", "expected a string");
    out.push_back(j[k].get<std::string>());
  }
  return out;
}

long integer(const Json& j, const std::string& field, long lo, long hi) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  long v = j.get<long>();
  if (v < lo || v > hi) bad(field, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

void onlyKeys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) bad(where.empty() ? k : where + "." + k, "unknown key");
  }
}

ModuleSpec parseModule(const Json& j) {
  if (!j.is_object()) bad("module", "expected an object");
  onlyKeys(j, "module", {"cyclic", "presentation"});
  if (j.contains("cyclic") == j.contains("presentation")) bad("module", "give exactly one of cyclic, presentation");
  ModuleSpec m;
  if (j.contains("cyclic")) {
    m.cyclic = stringList(j["cyclic"], "module.cyclic");
    return m;
  }
  m.kind = "presentation";
  const Json& p = j["presentation"];
  if (!p.is_object()) bad("module.presentation", "expected an object");
  onlyKeys(p, "module.presentation", {"degrees", "relations"});
  if (!p.contains("degrees")) bad("module.presentation.degrees", "missing");
  if (!p["degrees"].is_array() || p["degrees"].empty()) bad("module.presentation.degrees", "expected a nonempty array");
  for (std::size_t k = 0; k < p["degrees"].size(); ++k)
    m.degrees.push_back(
        static_cast<int>(integer(p["degrees"][k], "module.presentation.degrees[" + std::to_string(k) + "]", -50, 50)));
  if (p.contains("relations")) {
    if (!p["relations"].is_array()) bad("module.presentation.relations", "expected an array of columns");
    for (std::size_t c = 0; c < p["relations"].size(); ++c) {
      std::string f = "module.presentation.relations[" + std::to_string(c) + "]";
      auto col = stringList(p["relations"][c], f);
      if (col.size() != m.degrees.size()) bad(f, "needs one entry per generator");
      m.relations.push_back(std::move(col));
    }
  }
  return m;
}

}  // namespace

JobSpec parseJob(const Json& j) {
  if (!j.is_object()) throw InputError("job must be a JSON object");
  onlyKeys(j, "", {"p", "vars", "ideal", "module", "caps", "regime", "command"});
  JobSpec job;
  if (j.contains("p")) {
    job.p = static_cast<std::uint32_t>(integer(j["p"], "p", 2, 2147483647L));
    if (!isPrime(job.p)) bad("p", "not a prime");
  }
  if (!j.contains("vars")) bad("vars", "missing");
  job.vars = stringList(j["vars"], "vars");
  if (job.vars.empty() || job.vars.size() > 8) bad("vars", "between 1 and 8 variables are supported");
  if (std::set<std::string>(job.vars.begin(), job.vars.end()).size() != job.vars.size()) bad("vars", "duplicate name");
  if (!j.contains("ideal")) bad("ideal", "missing");
  job.ideal = stringList(j["ideal"], "ideal");
  if (j.contains("module")) {
    job.module = parseModule(j["module"]);
  } else {
    job.module.cyclic = job.vars;
  }
  if (j.contains("caps")) {
    const Json& c = j["caps"];
    if (!c.is_object()) bad("caps", "expected an object");
    onlyKeys(c, "caps", {"homDegree", "barDegree", "arity", "bruteForceDim", "barRank"});
    if (c.contains("homDegree")) job.caps.homDegree = static_cast<int>(integer(c["homDegree"], "caps.homDegree", 1, 30));
    if (c.contains("barDegree")) job.caps.barDegree = static_cast<int>(integer(c["barDegree"], "caps.barDegree", 1, 12));
    if (c.contains("arity")) job.caps.arity = static_cast<int>(integer(c["arity"], "caps.arity", 2, 12));
    if (c.contains("bruteForceDim"))
      job.caps.bruteForceDim = static_cast<int>(integer(c["bruteForceDim"], "caps.bruteForceDim", 1, 400));
    if (c.contains("barRank")) job.caps.barRank = integer(c["barRank"], "caps.barRank", 1, 1000000);
  }
  if (j.contains("regime")) {
    if (!j["regime"].is_string()) bad("regime", "expected a string");
    job.regime = j["regime"].get<std::string>();
    if (job.regime != "dg" && job.regime != "ainf" && job.regime != "auto") bad("regime", "one of dg, ainf, auto");
  }
  job.command = "verify";
  if (j.contains("command")) {
    if (!j["command"].is_string()) bad("command", "expected a string");
    job.command = j["command"].get<std::string>();
    if (std::find(kCommands.begin(), kCommands.end(), job.command) == kCommands.end())
      bad("command", "unknown command " + job.command);
  }
  return job;
}

JobSpec parseJobText(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n');
    std::size_t nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    long col = static_cast<long>(nl == std::string::npos ? pos + 1 : pos - nl);
    throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
  return parseJob(j);
}

Json toJson(const JobSpec& job) {
  Json j;
  j["p"] = job.p;
  j["vars"] = job.vars;
  j["ideal"] = job.ideal;
  Json m;
  if (job.module.kind == "cyclic") {
    m["cyclic"] = job.module.cyclic;
  } else {
    m["presentation"]["degrees"] = job.module.degrees;
    m["presentation"]["relations"] = job.module.relations;
  }
  j["module"] = m;
  j["caps"] = {{"homDegree", job.caps.homDegree},
               {"barDegree", job.caps.barDegree},
               {"arity", job.caps.arity},
               {"bruteForceDim", job.caps.bruteForceDim},
               {"barRank", job.caps.barRank}};
  j["regime"] = job.regime;
  j["command"] = job.command;
  return j;
}

Instance instantiate(const JobSpec& job) {
  Instance in;
  in.r = makeRing(job.vars, job.p);
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < job.ideal.size(); ++k) {
    Polynomial f = Polynomial::parse(in.r, job.ideal[k]);
    if (!f.isHomogeneous()) bad("ideal[" + std::to_string(k) + "]", "not homogeneous");
    if (!f.isZero()) gens.push_back(f);
  }
  Ideal I(in.r, gens);
  if (I.isUnit()) bad("ideal", "the unit ideal");
  if (!I.insidePowerOfMaximal(2)) bad("ideal", "not contained in the square of the maximal ideal");
  in.R = std::make_shared<QuotientRing>(I);
  if (job.module.kind == "cyclic") {
    std::vector<Polynomial> J;
    for (const auto& s : job.module.cyclic) J.push_back(Polynomial::parse(in.r, s));
    in.M = ModulePresentation::cyclic(in.R, J);
  } else {
    const auto& ms = job.module;
    std::vector<int> colDeg;
    std::vector<FreeElement> cols;
    for (std::size_t c = 0; c < ms.relations.size(); ++c) {
      std::vector<FreeElement::Entry> entries;
      int deg = 0;
      bool seen = false;
      for (std::size_t g = 0; g < ms.relations[c].size(); ++g) {
        Polynomial f = Polynomial::parse(in.r, ms.relations[c][g]);
        if (f.isZero()) continue;
        int d = f.degree() + ms.degrees[g];
        if (seen && d != deg) bad("module.presentation.relations[" + std::to_string(c) + "]", "not homogeneous");
        deg = d;
        seen = true;
        entries.emplace_back(static_cast<int>(g), f);
      }
      if (!seen) continue;
      colDeg.push_back(deg);
      cols.push_back(FreeElement::fromEntries(std::move(entries)));
    }
    PolyMatrix rel(in.r, ms.degrees, colDeg);
    for (std::size_t c = 0; c < cols.size(); ++c) rel.setColumn(static_cast<int>(c), cols[c]);
    in.M = ModulePresentation{in.R, ms.degrees, rel};
  }
  in.M.validate();
  return in;
}

}  // namespace burch
