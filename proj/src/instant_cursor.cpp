#include "lsclique/instant_cursor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lsclique {

namespace {

std::vector<NeighborEntry>::const_iterator
find_neighbor(const std::vector<NeighborEntry>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const NeighborEntry& e, VertexId id) { return e.id < id; });
    if (it == list.end() || it->id != v) return list.end();
    return it;
}

} // namespace

InstantCursor::InstantCursor(const LinkStream& stream)
    : stream_(&stream),
      adjacency_(stream.vertex_count()),
      now_(std::numeric_limits<Timestamp>::min()) {}

InstantCursor::InstantCursor(const LinkStream& stream, Timestamp start)
    : stream_(&stream), adjacency_(stream.vertex_count()), now_(start) {
    auto links = stream.links();
    while (insert_pos_ < links.size() && links[insert_pos_].begin < start) {
        const Link& l = links[insert_pos_++];
        if (l.end >= start) insert_edge(l.u, l.v, l.end);
    }
}

void InstantCursor::insert_edge(VertexId u, VertexId v, Timestamp end) {
    auto place = [](std::vector<NeighborEntry>& list, VertexId id, Timestamp e) {
        auto it = std::lower_bound(list.begin(), list.end(), id,
                                   [](const NeighborEntry& ne, VertexId x) { return ne.id < x; });
        list.insert(it, NeighborEntry{id, e});
    };
    place(adjacency_[u], v, end);
    place(adjacency_[v], u, end);
    expiry_.push(Expiry{end, u, v});
}

void InstantCursor::remove_half(VertexId u, VertexId v) {
    auto& list = adjacency_[u];
    auto it = find_neighbor(list, v);
    if (it != list.end()) list.erase(it);
}

void InstantCursor::advance_to(Timestamp t) {
    if (t < now_) throw std::logic_error("cursor moved backwards");
    now_ = t;

    while (!expiry_.empty() && expiry_.top().end < t) {
        Expiry e = expiry_.top();
        expiry_.pop();
        remove_half(e.u, e.v);
        remove_half(e.v, e.u);
    }

    auto links = stream_->links();
    while (insert_pos_ < links.size() && links[insert_pos_].begin <= t) {
        const Link& l = links[insert_pos_++];
        if (l.end < t) continue;  // expired before ever being observed
        insert_edge(l.u, l.v, l.end);
        max_degree_seen_ = std::max({max_degree_seen_, degree(l.u), degree(l.v)});
    }
}

Timestamp InstantCursor::edge_end_time(VertexId u, VertexId v) const {
    const NeighborEntry* e = find_edge(u, v);
    if (!e) throw std::out_of_range("edge absent at current instant");
    return e->end;
}

const NeighborEntry* InstantCursor::find_edge(VertexId u, VertexId v) const {
    const auto& list = adjacency_[u];
    auto it = find_neighbor(list, v);
    if (it == list.end()) return nullptr;
    return &*it;
}

Timestamp InstantCursor::clique_final_time(std::span<const VertexId> members) const {
    if (members.size() < 2) throw std::invalid_argument("clique needs at least two vertices");
    Timestamp final_time = std::numeric_limits<Timestamp>::max();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const NeighborEntry* e = find_edge(members[i], members[j]);
            if (!e) throw std::invalid_argument("members do not form a clique at current instant");
            final_time = std::min(final_time, e->end);
        }
    }
    return final_time;
}

} // namespace lsclique
