#include "lsclique/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

namespace lsclique {

SplitPlan split_intervals(const LinkStream& stream, unsigned n_ranges) {
    if (n_ranges == 0) throw std::invalid_argument("need at least one range");

    // distinct begin instants with their link counts
    std::vector<std::pair<Timestamp, std::uint64_t>> instants;
    for (const Link& l : stream.links()) {
        if (instants.empty() || instants.back().first != l.begin)
            instants.emplace_back(l.begin, 0);
        ++instants.back().second;
    }

    SplitPlan plan;
    plan.boundaries.reserve(n_ranges + 1);
    plan.link_counts.assign(n_ranges, 0);

    Timestamp start = instants.empty() ? 0 : instants.front().first;
    plan.boundaries.push_back(start);

    std::uint64_t remaining = stream.link_count();
    std::size_t at = 0;
    Timestamp last_consumed = start;
    for (unsigned r = 0; r < n_ranges; ++r) {
        const unsigned ranges_left = n_ranges - r;
        const std::uint64_t target = (remaining + ranges_left - 1) / ranges_left;
        std::uint64_t taken = 0;
        while (at < instants.size() && (taken == 0 || taken + instants[at].second <= target)) {
            taken += instants[at].second;
            last_consumed = instants[at].first;
            ++at;
            if (taken >= target) break;
        }
        plan.link_counts[r] = taken;
        remaining -= taken;
        // next boundary: the next unassigned instant while any remain, else one
        // past everything seen so far (keeps boundaries strictly increasing)
        Timestamp next = at < instants.size()
                             ? instants[at].first
                             : std::max(last_consumed, plan.boundaries.back()) + 1;
        if (next <= plan.boundaries.back()) next = plan.boundaries.back() + 1;
        plan.boundaries.push_back(next);
    }
    return plan;
}

namespace {

void merge_into(EnumCounters& total, const EnumCounters& part) {
    total.m += part.m;
    total.alpha += part.alpha;
    total.alpha_t += part.alpha_t;
    total.leaves += part.leaves;
    total.leaves_max += part.leaves_max;
    total.leaves_not_max += part.leaves_not_max;
    total.max_degree = std::max(total.max_degree, part.max_degree);
    total.max_clique_size = std::max(total.max_clique_size, part.max_clique_size);
}

} // namespace

ParallelResult parallel_enumerate(const LinkStream& stream, unsigned n_workers,
                                  const EnumOptions& options, const CliqueSink& sink) {
    SplitPlan plan = split_intervals(stream, n_workers);

    struct WorkerOutput {
        std::vector<TimedClique> cliques;
        EnumCounters counters;
        double wall = 0.0;
    };

    auto run_range = [&](std::size_t r) {
        WorkerOutput out;
        EnumOptions worker_options = options;
        worker_options.begin_range = {plan.boundaries[r], plan.boundaries[r + 1]};
        auto t0 = std::chrono::steady_clock::now();
        out.counters = enumerate_maximal_cliques(
            stream, worker_options,
            [&out](const TimedClique& c) { out.cliques.push_back(c); });
        out.wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    };

    auto wall_start = std::chrono::steady_clock::now();
    std::vector<std::future<WorkerOutput>> futures;
    futures.reserve(plan.range_count());
    for (std::size_t r = 0; r < plan.range_count(); ++r)
        futures.push_back(std::async(std::launch::async, run_range, r));

    ParallelResult result;
    result.counters.n = stream.vertex_count();
    result.counters.distinct_instants = stream.distinct_instant_count();
    for (auto& f : futures) {
        WorkerOutput out = f.get();   // rethrows worker failures here
        merge_into(result.counters, out.counters);
        result.worker_wall_times.push_back(out.wall);
        if (sink)
            for (const TimedClique& c : out.cliques) sink(c);
    }
    result.counters.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    return result;
}

} // namespace lsclique
