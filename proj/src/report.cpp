#include "linmatch/report.hpp"

#include <sstream>

#include "linmatch/error.hpp"

namespace linmatch {

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  j["config"] = r.config;
  j["result"] = r.result;
  j["seed"] = r.seed;
  j["coverage"] = r.coverage;
  j["wall_ms"] = r.wall_ms;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  require(j.contains("schema") && j["schema"].get<int>() == 1, errc::invalid_argument,
          "unsupported report schema");
  Report r;
  r.schema = j["schema"].get<int>();
  r.command = j["command"].get<std::string>();
  r.config = j["config"];
  r.result = j["result"];
  r.seed = j["seed"].get<std::uint64_t>();
  r.coverage = j["coverage"].get<std::string>();
  r.wall_ms = j["wall_ms"].get<double>();
  return r;
}

std::string report_to_csv(const Report& r) {
  // Flat projection; nested witnesses live only in the JSON form.
  std::ostringstream os;
  os << "command,verdict,coverage,seed,wall_ms\n";
  std::string verdict;
  for (const char* key : {"holds", "matching", "matched", "found", "has_root"}) {
    if (r.result.contains(key)) {
      verdict = r.result[key].is_boolean() ? (r.result[key].get<bool>() ? "true" : "false")
                                           : r.result[key].dump();
      break;
    }
  }
  if (verdict.empty() && r.result.contains("total")) verdict = r.result["total"].dump();
  if (verdict.empty()) verdict = "ok";
  os << r.command << "," << verdict << "," << r.coverage << "," << r.seed << "," << r.wall_ms
     << "\n";
  return os.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "command:  " << r.command << "\n";
  os << "config:   " << r.config.dump() << "\n";
  os << "result:   " << r.result.dump() << "\n";
  os << "coverage: " << r.coverage << "\n";
  os << "seed:     " << r.seed << "\n";
  os << "wall_ms:  " << r.wall_ms << "\n";
  return os.str();
}

}  // namespace linmatch
