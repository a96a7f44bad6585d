#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lsclique/instant_cursor.hpp"
#include "lsclique/link_stream.hpp"

namespace lsclique {

// A maximal clique of the stream: the vertex set C (sorted by id) together
// with the maximal interval [t0, t1] over which C is a clique.
struct TimedClique {
    std::vector<VertexId> members;
    Timestamp t0 = 0;
    Timestamp t1 = 0;

    friend bool operator==(const TimedClique& a, const TimedClique& b) {
        return a.t0 == b.t0 && a.t1 == b.t1 && a.members == b.members;
    }
    friend bool operator<(const TimedClique& a, const TimedClique& b) {
        if (a.t0 != b.t0) return a.t0 < b.t0;
        if (a.t1 != b.t1) return a.t1 < b.t1;
        return a.members < b.members;
    }
};

// Output-sensitive instrumentation of one enumeration run.
//   n, m            stream vertices / links processed (m: begins inside the swept range)
//   distinct_instants  instants at which some link begins or ends (whole stream)
//   max_degree      largest instantaneous degree observed
//   max_clique_size largest emitted clique
//   alpha           emitted (maximal) cliques
//   alpha_t         recursive calls, i.e. visited candidate cliques
//   leaves          calls that made no recursive call
//   leaves_max      leaves whose clique was emitted
//   leaves_not_max  leaves whose clique was filtered out
struct EnumCounters {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t distinct_instants = 0;
    std::uint32_t max_degree = 0;
    std::uint32_t max_clique_size = 0;
    std::uint64_t alpha = 0;
    std::uint64_t alpha_t = 0;
    std::uint64_t leaves = 0;
    std::uint64_t leaves_max = 0;
    std::uint64_t leaves_not_max = 0;
    double wall_time = 0.0;   // seconds

    // Fraction of leaves that produced output; 1.0 for runs with no leaves.
    double r() const {
        return leaves == 0 ? 1.0 : static_cast<double>(leaves_max) / static_cast<double>(leaves);
    }
};

using CliqueSink = std::function<void(const TimedClique&)>;

// Test instrumentation: observes every visited candidate clique. Arguments are
// the sorted members, the instant, and the ordinal of the seed link within it.
using VisitHook =
    std::function<void(std::span<const VertexId> members, Timestamp t, std::size_t seed_index)>;

struct EnumOptions {
    // Prune candidate branches dominated by a chosen partner vertex. Changes
    // work counters only, never the emitted set.
    bool use_pivot = true;

    // Restrict the sweep to begin times in [first, second). Cursor state at the
    // range start accounts for links that began earlier and are still alive.
    std::optional<std::pair<Timestamp, Timestamp>> begin_range;

    // Re-derive every recursion frame from the cursor and compare (slow; tests).
    bool check_frames = false;

    VisitHook visit_hook;
};

// Enumerates every maximal clique of the stream exactly once, sweeping begin
// instants in increasing order (so emissions have nondecreasing t0). The sink
// runs inline; counters are returned. The stream must be normalized.
EnumCounters enumerate_maximal_cliques(const LinkStream& stream, const EnumOptions& options,
                                       const CliqueSink& sink);

// Convenience wrapper collecting the emissions.
std::vector<TimedClique> collect_maximal_cliques(const LinkStream& stream,
                                                 const EnumOptions& options = {});

namespace detail {

// One candidate vertex of a recursion frame and the final time the current
// clique would have after adding it.
struct CandidateEntry {
    VertexId  vertex;
    Timestamp fin;
};

struct PivotChoice {
    VertexId pivot = 0;
    std::vector<VertexId> deletable;   // candidates dominated by the pivot, sorted
};

// Picks the pivot maximizing the number of dominated candidates: u is dominated
// by p when extending with u then p keeps the same final time as extending with
// u alone. Ties break toward the smallest id, scanning candidates before
// excluded vertices. Requires p_set nonempty; neighbors(v) must yield the
// current adjacency of v sorted by id.
PivotChoice choose_pivot(std::span<const CandidateEntry> p_set,
                         std::span<const CandidateEntry> x_set,
                         const std::function<std::span<const NeighborEntry>(VertexId)>& neighbors);

} // namespace detail

} // namespace lsclique
