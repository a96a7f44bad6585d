#pragma once

#include <string>
#include <vector>

#include "lsclique/enumerate.hpp"

namespace lsclique {

// Flat JSON object mirroring EnumCounters field names, plus "r" (6 decimal
// digits) and "worker_wall_times" (empty array for sequential runs).
std::string stats_to_json(const EnumCounters& counters,
                          const std::vector<double>& worker_wall_times = {});

}  // namespace lsclique
