#pragma once

#include <cstdint>
#include <vector>

#include "lsclique/enumerate.hpp"
#include "lsclique/link_stream.hpp"

namespace lsclique {

// Contiguous begin-time ranges with roughly equal numbers of link starts.
// boundaries has range_count() + 1 strictly increasing timestamps; range i is
// [boundaries[i], boundaries[i+1]) and starts link_counts[i] links. A boundary
// never falls inside one begin instant, so each instant is owned by one range.
struct SplitPlan {
    std::vector<Timestamp> boundaries;
    std::vector<std::uint64_t> link_counts;

    std::size_t range_count() const { return link_counts.size(); }
};

SplitPlan split_intervals(const LinkStream& stream, unsigned n_ranges);

struct ParallelResult {
    EnumCounters counters;                 // merged across workers
    std::vector<double> worker_wall_times; // seconds, one per range
};

// Runs one sweep worker per range of split_intervals(stream, n_workers) and
// merges: sums for m, alpha, alpha_t and the leaf counters; max for max_degree
// and max_clique_size; n and distinct_instants from the stream. Workers buffer
// their emissions; the sink runs on the calling thread in range order, so the
// overall emission order equals the sequential one. A worker failure aborts
// the run by rethrowing on the calling thread.
ParallelResult parallel_enumerate(const LinkStream& stream, unsigned n_workers,
                                  const EnumOptions& options, const CliqueSink& sink);

} // namespace lsclique
