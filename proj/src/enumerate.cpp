#include "lsclique/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <stdexcept>

#include "lsclique/instant_cursor.hpp"

namespace lsclique {

namespace detail {

PivotChoice choose_pivot(std::span<const CandidateEntry> p_set,
                         std::span<const CandidateEntry> x_set,
                         const std::function<std::span<const NeighborEntry>(VertexId)>& neighbors) {
    // u is dominated by p when fin(p) >= fin(u) and end(u, p) >= fin(u): adding
    // p on top of u then costs no extra shrink, so branching on u is redundant.
    auto count_dominated = [&](const CandidateEntry& cand, std::vector<VertexId>* collect) {
        std::size_t count = 0;
        auto nbrs = neighbors(cand.vertex);
        auto a = p_set.begin();
        auto b = nbrs.begin();
        while (a != p_set.end() && b != nbrs.end()) {
            if (a->vertex < b->id) {
                ++a;
            } else if (b->id < a->vertex) {
                ++b;
            } else {
                if (cand.fin >= a->fin && b->end >= a->fin) {
                    ++count;
                    if (collect) collect->push_back(a->vertex);
                }
                ++a;
                ++b;
            }
        }
        return count;
    };

    bool have_best = false;
    std::size_t best_count = 0;
    CandidateEntry best{0, 0};
    for (const auto& e : p_set) {
        std::size_t c = count_dominated(e, nullptr);
        if (!have_best || c > best_count) {
            have_best = true;
            best_count = c;
            best = e;
        }
    }
    for (const auto& e : x_set) {
        std::size_t c = count_dominated(e, nullptr);
        if (!have_best || c > best_count) {
            have_best = true;
            best_count = c;
            best = e;
        }
    }

    PivotChoice choice{best.vertex, {}};
    if (have_best && best_count > 0) count_dominated(best, &choice.deletable);
    return choice;
}

} // namespace detail

namespace {

using detail::CandidateEntry;

// Pairs already used as seeds at the current instant; a candidate is blocked
// when adding it would recreate such a pair inside the clique (that clique
// belongs to an earlier seed's tree).
class ForbiddenEdges {
public:
    void resize(std::size_t n) { partners_.resize(n); }

    void clear_instant() {
        for (VertexId v : touched_) partners_[v].clear();
        touched_.clear();
    }

    void add(VertexId u, VertexId v) {
        if (partners_[u].empty()) touched_.push_back(u);
        if (partners_[v].empty()) touched_.push_back(v);
        partners_[u].push_back(v);
        partners_[v].push_back(u);
    }

    bool blocks(VertexId candidate, const std::vector<std::uint8_t>& in_clique) const {
        for (VertexId w : partners_[candidate])
            if (in_clique[w]) return true;
        return false;
    }

private:
    std::vector<std::vector<VertexId>> partners_;
    std::vector<VertexId> touched_;
};

struct Frame {
    std::vector<CandidateEntry> p;      // candidates, sorted by vertex
    std::vector<CandidateEntry> x;      // excluded, sorted by vertex
    std::vector<VertexId> iter;         // branch order snapshot for this call
};

class Enumerator {
public:
    Enumerator(const LinkStream& stream, const EnumOptions& options, const CliqueSink& sink)
        : stream_(stream),
          options_(options),
          sink_(sink),
          cursor_(options.begin_range ? InstantCursor(stream, options.begin_range->first)
                                      : InstantCursor(stream)),
          neighbor_fn_([this](VertexId v) { return cursor_.neighbors(v); }) {
        forbidden_.resize(stream.vertex_count());
        in_clique_.assign(stream.vertex_count(), 0);
    }

    EnumCounters run() {
        auto t_start = std::chrono::steady_clock::now();
        counters_.n = stream_.vertex_count();
        counters_.distinct_instants = stream_.distinct_instant_count();

        auto links = stream_.links();
        std::size_t i = 0;
        std::size_t stop = links.size();
        if (options_.begin_range) {
            auto by_begin = [](const Link& l, Timestamp t) { return l.begin < t; };
            i = static_cast<std::size_t>(
                std::lower_bound(links.begin(), links.end(), options_.begin_range->first, by_begin) -
                links.begin());
            stop = static_cast<std::size_t>(
                std::lower_bound(links.begin(), links.end(), options_.begin_range->second, by_begin) -
                links.begin());
        }

        while (i < stop) {
            const Timestamp t = links[i].begin;
            std::size_t j = i;
            while (j < stop && links[j].begin == t) ++j;

            cursor_.advance_to(t);
            forbidden_.clear_instant();
            now_ = t;
            for (std::size_t k = i; k < j; ++k) {
                seed_index_ = k - i;
                seed(links[k]);
                forbidden_.add(links[k].u, links[k].v);
                ++counters_.m;
            }
            i = j;
        }

        counters_.max_degree = cursor_.max_degree_seen();
        counters_.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
        return counters_;
    }

private:
    Frame& frame(std::size_t depth) {
        while (frames_.size() <= depth) frames_.emplace_back();
        return frames_[depth];
    }

    void seed(const Link& link) {
        Frame& f = frame(0);
        f.p.clear();
        f.x.clear();

        // candidates = common neighborhood of the endpoints; the final time of
        // the seed pair extended by w is capped by the seed link's own end
        auto nu = cursor_.neighbors(link.u);
        auto nv = cursor_.neighbors(link.v);
        auto a = nu.begin();
        auto b = nv.begin();
        while (a != nu.end() && b != nv.end()) {
            if (a->id < b->id) {
                ++a;
            } else if (b->id < a->id) {
                ++b;
            } else {
                Timestamp fin = std::min(link.end, std::min(a->end, b->end));
                f.p.push_back(CandidateEntry{a->id, fin});
                ++a;
                ++b;
            }
        }

        clique_.assign({link.u, link.v});
        in_clique_[link.u] = 1;
        in_clique_[link.v] = 1;
        if (final_time_.empty()) final_time_.resize(1);
        final_time_[0] = link.end;
        expand(0);
        in_clique_[link.u] = 0;
        in_clique_[link.v] = 0;
    }

    void expand(std::size_t depth) {
        Frame& f = frame(depth);
        const Timestamp end_r = final_time_[depth];
        ++counters_.alpha_t;
        if (options_.check_frames) verify_frame(depth);
        if (options_.visit_hook) {
            std::vector<VertexId> sorted = clique_;
            std::sort(sorted.begin(), sorted.end());
            options_.visit_hook(sorted, now_, seed_index_);
        }

        // Vertex-maximal exactly when every neighbor of the clique shortens the
        // interval: a fin equal to the final time means a free extension exists.
        bool maximal = true;
        for (const auto& e : f.p) {
            if (e.fin >= end_r) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            for (const auto& e : f.x) {
                if (e.fin >= end_r) {
                    maximal = false;
                    break;
                }
            }
        }
        if (maximal) emit(end_r);

        f.iter.clear();
        if (!f.p.empty()) {
            const std::vector<VertexId>* dominated = nullptr;
            detail::PivotChoice choice;
            if (options_.use_pivot) {
                choice = detail::choose_pivot(f.p, f.x, neighbor_fn_);
                dominated = &choice.deletable;
            }
            auto d = dominated ? dominated->begin() : std::vector<VertexId>::const_iterator{};
            for (const auto& e : f.p) {
                if (dominated) {
                    while (d != dominated->end() && *d < e.vertex) ++d;
                    if (d != dominated->end() && *d == e.vertex) continue;
                }
                if (forbidden_.blocks(e.vertex, in_clique_)) continue;
                f.iter.push_back(e.vertex);
            }
            for (VertexId u : f.iter) descend(depth, u);
        }

        if (f.iter.empty()) {
            ++counters_.leaves;
            if (maximal)
                ++counters_.leaves_max;
            else
                ++counters_.leaves_not_max;
        }
    }

    void descend(std::size_t depth, VertexId u) {
        Frame& child = frame(depth + 1);   // touch first: deque growth keeps parent stable
        Frame& f = frames_[depth];

        auto by_vertex = [](const CandidateEntry& e, VertexId v) { return e.vertex < v; };
        auto it = std::lower_bound(f.p.begin(), f.p.end(), u, by_vertex);
        const Timestamp fin_u = it->fin;

        auto nbrs = cursor_.neighbors(u);
        child.p.clear();
        child.x.clear();
        intersect(f.p, nbrs, fin_u, child.p);
        intersect(f.x, nbrs, fin_u, child.x);

        if (final_time_.size() <= depth + 1) final_time_.resize(depth + 2);
        final_time_[depth + 1] = fin_u;
        clique_.push_back(u);
        in_clique_[u] = 1;
        expand(depth + 1);
        in_clique_[u] = 0;
        clique_.pop_back();

        // u is finished at this level: future branches treat it as excluded
        it = std::lower_bound(f.p.begin(), f.p.end(), u, by_vertex);
        f.p.erase(it);
        auto xi = std::lower_bound(f.x.begin(), f.x.end(), u, by_vertex);
        f.x.insert(xi, CandidateEntry{u, fin_u});
    }

    // out = {w in entries adjacent to u}, every fin re-capped by the new
    // clique's final time and by the edge to u
    static void intersect(const std::vector<CandidateEntry>& entries,
                          std::span<const NeighborEntry> nbrs, Timestamp cap,
                          std::vector<CandidateEntry>& out) {
        auto a = entries.begin();
        auto b = nbrs.begin();
        while (a != entries.end() && b != nbrs.end()) {
            if (a->vertex < b->id) {
                ++a;
            } else if (b->id < a->vertex) {
                ++b;
            } else {
                Timestamp fin = std::min(std::min(a->fin, b->end), cap);
                out.push_back(CandidateEntry{a->vertex, fin});
                ++a;
                ++b;
            }
        }
    }

    void emit(Timestamp end_r) {
        ++counters_.alpha;
        counters_.max_clique_size =
            std::max(counters_.max_clique_size, static_cast<std::uint32_t>(clique_.size()));
        if (sink_) {
            TimedClique c;
            c.members = clique_;
            std::sort(c.members.begin(), c.members.end());
            c.t0 = now_;
            c.t1 = end_r;
            sink_(c);
        }
    }

    // Slow re-derivation of the frame from the cursor: candidates ∪ excluded
    // must be exactly the common neighborhood of the clique, with fins equal to
    // the final time of the clique extended by that vertex.
    void verify_frame(std::size_t depth) {
        Frame& f = frames_[depth];
        const Timestamp end_r = final_time_[depth];

        std::vector<CandidateEntry> expected;
        auto first = cursor_.neighbors(clique_[0]);
        expected.reserve(first.size());
        for (const auto& e : first) expected.push_back(CandidateEntry{e.id, e.end});
        std::vector<CandidateEntry> next;
        for (std::size_t k = 1; k < clique_.size(); ++k) {
            next.clear();
            auto nbrs = cursor_.neighbors(clique_[k]);
            auto a = expected.begin();
            auto b = nbrs.begin();
            while (a != expected.end() && b != nbrs.end()) {
                if (a->vertex < b->id) {
                    ++a;
                } else if (b->id < a->vertex) {
                    ++b;
                } else {
                    next.push_back(CandidateEntry{a->vertex, std::min(a->fin, b->end)});
                    ++a;
                    ++b;
                }
            }
            expected.swap(next);
        }
        for (auto& e : expected) e.fin = std::min(e.fin, end_r);

        std::vector<CandidateEntry> actual;
        actual.reserve(f.p.size() + f.x.size());
        {
            auto a = f.p.begin();
            auto b = f.x.begin();
            while (a != f.p.end() || b != f.x.end()) {
                if (b == f.x.end() || (a != f.p.end() && a->vertex < b->vertex))
                    actual.push_back(*a++);
                else if (a == f.p.end() || b->vertex < a->vertex)
                    actual.push_back(*b++);
                else
                    throw std::logic_error("frame invariant violated: candidate also excluded");
            }
        }

        if (actual.size() != expected.size())
            throw std::logic_error("frame invariant violated: wrong neighborhood size");
        for (std::size_t k = 0; k < actual.size(); ++k) {
            if (actual[k].vertex != expected[k].vertex)
                throw std::logic_error("frame invariant violated: wrong neighborhood member");
            if (actual[k].fin != expected[k].fin)
                throw std::logic_error("frame invariant violated: stale final time");
        }
    }

    const LinkStream& stream_;
    const EnumOptions& options_;
    const CliqueSink& sink_;
    InstantCursor cursor_;
    std::function<std::span<const NeighborEntry>(VertexId)> neighbor_fn_;

    ForbiddenEdges forbidden_;
    std::vector<std::uint8_t> in_clique_;
    std::vector<VertexId> clique_;        // current clique, recursion order
    std::vector<Timestamp> final_time_;   // final time per depth
    std::deque<Frame> frames_;
    EnumCounters counters_;
    Timestamp now_ = 0;
    std::size_t seed_index_ = 0;
};

} // namespace

EnumCounters enumerate_maximal_cliques(const LinkStream& stream, const EnumOptions& options,
                                       const CliqueSink& sink) {
    Enumerator e(stream, options, sink);
    return e.run();
}

std::vector<TimedClique> collect_maximal_cliques(const LinkStream& stream,
                                                 const EnumOptions& options) {
    std::vector<TimedClique> out;
    enumerate_maximal_cliques(stream, options,
                              [&](const TimedClique& c) { out.push_back(c); });
    return out;
}

} // namespace lsclique
