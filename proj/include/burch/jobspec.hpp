#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "burch/krank.hpp"

namespace burch {

using Json = nlohmann::ordered_json;

struct ModuleSpec {
  /// "cyclic": R/(cyclic); "presentation": cokernel of the relation columns.
  std::string kind = "cyclic";
  std::vector<std::string> cyclic;
  std::vector<int> degrees;
  std::vector<std::vector<std::string>> relations;  // one entry per generator in each column
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct Caps {
  int homDegree = 10;  // syzygies and Betti numbers through this index
  int barDegree = 7;   // bar complexes and cycle pipelines through this degree
  int arity = 4;
  int bruteForceDim = 60;
  long barRank = 20000;
  friend bool operator==(const Caps&, const Caps&) = default;
};

struct JobSpec {
  std::uint32_t p = 32003;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
  ModuleSpec module;
  Caps caps;
  std::string regime = "auto";
  std::string command;
  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

extern const std::vector<std::string> kCommands;

/// Schema check with the offending field named in the InputError. A missing
/// module means the residue field.
JobSpec parseJob(const Json& j);
/// JSON text; syntax errors report line and column.
JobSpec parseJobText(const std::string& text);
Json toJson(const JobSpec& job);

/// The ring, quotient and module a job describes. Rejects ideals outside
/// n^2, inhomogeneous input and non-prime p.
struct Instance {
  RingPtr r;
  QuotientPtr R;
  ModulePresentation M;
};
Instance instantiate(const JobSpec& job);

}  // namespace burch
