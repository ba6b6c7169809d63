#include "sphere_laman/report.hpp"

#include <json.hpp>

namespace sphere_laman {

std::string to_json_line(const RunReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["is_laman"] = r.laman;
  if (r.count) j["count"] = r.count->get_str();
  if (!r.error.empty()) j["error"] = r.error;
  if (r.with_stats) {
    j["elapsed_ms"] = r.elapsed_ms;
    j["memo"] = {{"hits", r.stats.memo_hits},
                 {"misses", r.stats.memo_misses},
                 {"entries", r.stats.memo_entries},
                 {"nodes", r.stats.nodes},
                 {"subsets", r.stats.subsets}};
  }
  return j.dump();
}

}  // namespace sphere_laman
