#pragma once

#include <queue>
#include <span>
#include <vector>

#include "lsclique/link_stream.hpp"

namespace lsclique {

// One adjacency entry of the graph at the cursor's current instant: the
// neighbor and the end time of the covering link.
struct NeighborEntry {
    VertexId  id;
    Timestamp end;
};

// Event-driven view of the instantaneous graph G_t. The cursor moves forward
// only: links are inserted when their begin is reached and expire through an
// end-time-ordered queue once the current instant passes their end (intervals
// are closed, so a link [b, e] is still present at t = e). Per-vertex adjacency
// is kept sorted by neighbor id so set intersections are linear merges.
class InstantCursor {
public:
    // Positioned before the first instant; advance_to() builds the graph.
    explicit InstantCursor(const LinkStream& stream);

    // Positioned at `start` with every link alive at `start` whose begin lies
    // strictly before it already inserted; used by range-restricted sweeps.
    // Degrees seen during this warm-up do not count toward max_degree_seen().
    InstantCursor(const LinkStream& stream, Timestamp start);

    Timestamp now() const { return now_; }

    // Moves to instant t (monotone; throws std::logic_error on backward moves).
    // Afterwards the adjacency holds exactly the links with begin <= t <= end.
    void advance_to(Timestamp t);

    std::span<const NeighborEntry> neighbors(VertexId u) const {
        return adjacency_[u];
    }
    std::uint32_t degree(VertexId u) const {
        return static_cast<std::uint32_t>(adjacency_[u].size());
    }

    // End time of the link covering {u, v} at the current instant; throws
    // std::out_of_range if the edge is absent.
    Timestamp edge_end_time(VertexId u, VertexId v) const;

    // Non-throwing lookup: nullptr when the edge is absent.
    const NeighborEntry* find_edge(VertexId u, VertexId v) const;

    // Final time of a clique: min over member pairs of edge_end_time. Throws
    // std::invalid_argument if members do not form a clique here (or |C| < 2).
    Timestamp clique_final_time(std::span<const VertexId> members) const;

    // Largest degree observed at any instant advanced to so far.
    std::uint32_t max_degree_seen() const { return max_degree_seen_; }

private:
    struct Expiry {
        Timestamp end;
        VertexId  u, v;
        bool operator>(const Expiry& o) const { return end > o.end; }
    };

    void insert_edge(VertexId u, VertexId v, Timestamp end);
    void remove_half(VertexId u, VertexId v);

    const LinkStream* stream_;
    std::vector<std::vector<NeighborEntry>> adjacency_;
    std::priority_queue<Expiry, std::vector<Expiry>, std::greater<Expiry>> expiry_;
    std::size_t insert_pos_ = 0;   // next link (begin-sorted) not yet inserted
    Timestamp now_;
    std::uint32_t max_degree_seen_ = 0;
};

} // namespace lsclique
