#include "lsclique/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace lsclique {

namespace {

using EdgeEnds = std::map<std::pair<VertexId, VertexId>, Timestamp>;

// Final time of a vertex set, scanning every pair; nullopt when not a clique.
std::optional<Timestamp> set_final_time(const std::vector<VertexId>& members,
                                        const EdgeEnds& edges) {
    Timestamp final_time = std::numeric_limits<Timestamp>::max();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            VertexId a = std::min(members[i], members[j]);
            VertexId b = std::max(members[i], members[j]);
            auto it = edges.find({a, b});
            if (it == edges.end()) return std::nullopt;
            final_time = std::min(final_time, it->second);
        }
    }
    return final_time;
}

} // namespace

std::set<TimedClique> oracle_enumerate(const LinkStream& stream, const OracleOptions& options) {
    if (!options.force) {
        if (stream.vertex_count() > options.max_vertices)
            throw SizeGuardError("oracle size guard: " + std::to_string(stream.vertex_count()) +
                                 " vertices exceed " + std::to_string(options.max_vertices) +
                                 " (use force to override)");
        if (stream.link_count() > options.max_links)
            throw SizeGuardError("oracle size guard: " + std::to_string(stream.link_count()) +
                                 " links exceed " + std::to_string(options.max_links) +
                                 " (use force to override)");
    }

    std::set<TimedClique> result;
    auto links = stream.links();

    std::vector<Timestamp> begin_times;
    begin_times.reserve(links.size());
    for (const Link& l : links) begin_times.push_back(l.begin);
    std::sort(begin_times.begin(), begin_times.end());
    begin_times.erase(std::unique(begin_times.begin(), begin_times.end()), begin_times.end());

    for (Timestamp t : begin_times) {
        // the graph at instant t, rebuilt from the raw links
        EdgeEnds edges;
        std::map<VertexId, std::vector<VertexId>> adjacent;
        for (const Link& l : links) {
            if (l.begin <= t && t <= l.end) {
                edges[{l.u, l.v}] = l.end;
                adjacent[l.u].push_back(l.v);
                adjacent[l.v].push_back(l.u);
            }
        }

        // candidate sets: every subset of {u, v} + common neighbors, for each
        // link that begins at t (a set qualifying by interval must contain one)
        std::set<std::vector<VertexId>> candidates;
        for (const Link& l : links) {
            if (l.begin != t) continue;
            std::vector<VertexId> pool;
            for (VertexId w : adjacent[l.u]) {
                if (w == l.v) continue;
                auto& nv = adjacent[l.v];
                if (std::find(nv.begin(), nv.end(), w) != nv.end()) pool.push_back(w);
            }
            std::sort(pool.begin(), pool.end());
            pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

            const std::size_t subsets = std::size_t{1} << pool.size();
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                std::vector<VertexId> members{l.u, l.v};
                for (std::size_t bit = 0; bit < pool.size(); ++bit)
                    if (mask & (std::size_t{1} << bit)) members.push_back(pool[bit]);
                std::sort(members.begin(), members.end());
                if (set_final_time(members, edges)) candidates.insert(std::move(members));
            }
        }

        for (const auto& members : candidates) {
            auto final_time = set_final_time(members, edges);
            // cannot be grown for free: every common neighbor cuts the interval
            bool grows_free = false;
            for (const auto& [w, _] : adjacent) {
                if (std::find(members.begin(), members.end(), w) != members.end()) continue;
                std::vector<VertexId> extended = members;
                extended.push_back(w);
                std::sort(extended.begin(), extended.end());
                auto ext_final = set_final_time(extended, edges);
                if (ext_final && *ext_final >= *final_time) {
                    grows_free = true;
                    break;
                }
            }
            if (!grows_free) result.insert(TimedClique{members, t, *final_time});
        }
    }
    return result;
}

} // namespace lsclique
