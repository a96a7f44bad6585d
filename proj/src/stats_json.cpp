#include "lsclique/stats_json.hpp"

#include <cinttypes>
#include <cstdio>

namespace lsclique {

namespace {

void append_fixed(std::string& out, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    out += buf;
}

void append_u64(std::string& out, std::uint64_t value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%" PRIu64, value);
    out += buf;
}

}  // namespace

std::string stats_to_json(const EnumCounters& c,
                          const std::vector<double>& worker_wall_times) {
    std::string out;
    out += "{\n";
    out += "  \"n\": ";
    append_u64(out, c.n);
    out += ",\n  \"m\": ";
    append_u64(out, c.m);
    out += ",\n  \"distinct_instants\": ";
    append_u64(out, c.distinct_instants);
    out += ",\n  \"max_degree\": ";
    append_u64(out, c.max_degree);
    out += ",\n  \"max_clique_size\": ";
    append_u64(out, c.max_clique_size);
    out += ",\n  \"alpha\": ";
    append_u64(out, c.alpha);
    out += ",\n  \"alpha_t\": ";
    append_u64(out, c.alpha_t);
    out += ",\n  \"leaves\": ";
    append_u64(out, c.leaves);
    out += ",\n  \"leaves_max\": ";
    append_u64(out, c.leaves_max);
    out += ",\n  \"leaves_not_max\": ";
    append_u64(out, c.leaves_not_max);
    out += ",\n  \"r\": ";
    append_fixed(out, c.r());
    out += ",\n  \"wall_time\": ";
    append_fixed(out, c.wall_time);
    out += ",\n  \"worker_wall_times\": [";
    for (std::size_t i = 0; i < worker_wall_times.size(); ++i) {
        if (i != 0) out += ", ";
        append_fixed(out, worker_wall_times[i]);
    }
    out += "]\n}\n";
    return out;
}

}  // namespace lsclique
