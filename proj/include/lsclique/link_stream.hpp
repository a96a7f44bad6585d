#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lsclique {

// Timestamps are non-negative integers (63 usable bits). Intervals are closed:
// a link (b, e, u, v) means u and v interact at every instant t with b <= t <= e.
using Timestamp = std::int64_t;
using VertexId  = std::uint32_t;

struct Link {
    Timestamp begin = 0;
    Timestamp end   = 0;   // end >= begin
    VertexId  u     = 0;   // u < v (canonical order by dense id)
    VertexId  v     = 0;

    friend bool operator==(const Link&, const Link&) = default;
};

enum class InputFormat { interval, instantaneous };

struct StreamConfig {
    InputFormat format = InputFormat::interval;
    Timestamp   delta  = 0;   // instantaneous only: (t, u, v) becomes [t, t + delta]
};

// Parse failure; carries the 1-based input line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Bidirectional label <-> dense id map. Ids are assigned in first-appearance order.
class VertexTable {
public:
    VertexId intern(std::string_view label);
    std::optional<VertexId> find(std::string_view label) const;
    const std::string& label(VertexId id) const { return labels_.at(id); }
    std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> ids_;
};

// Raw parse result: canonicalized links (u < v), original file order, not yet merged.
struct RawStream {
    std::vector<Link> links;
    VertexTable vertices;
};

// Parses the declared format strictly: interval lines are "b e u v", instantaneous
// lines are "t u v" (expanded to [t, t + delta]). '#' lines and blank lines are
// skipped. Throws ParseError on malformed lines, self-loops, e < b, negative or
// overflowing timestamps, and wrong token counts (the format is never sniffed).
RawStream parse_links(std::string_view text, const StreamConfig& config);

// A simple link stream: per-pair intervals pairwise disjoint and non-touching,
// links sorted by (begin, u, v). Built through normalize(), immutable afterwards.
class LinkStream {
public:
    LinkStream() = default;

    // Merges overlapping or touching intervals of the same pair ([1,2] and [2,4]
    // share instant 2 and merge to [1,4]), sorts, and seals the stream.
    static LinkStream normalize(RawStream raw);

    std::span<const Link> links() const { return links_; }
    const VertexTable& vertices() const { return vertices_; }

    std::uint32_t vertex_count() const { return vertices_.size(); }
    std::uint64_t link_count() const { return links_.size(); }
    bool empty() const { return links_.empty(); }

    // Number of distinct instants at which some link begins or ends (<= 2m).
    std::uint64_t distinct_instant_count() const { return distinct_instants_; }

    // Valid only for non-empty streams.
    Timestamp horizon_begin() const { return horizon_begin_; }
    Timestamp horizon_end() const { return horizon_end_; }

private:
    std::vector<Link> links_;
    VertexTable vertices_;
    std::uint64_t distinct_instants_ = 0;
    Timestamp horizon_begin_ = 0;
    Timestamp horizon_end_   = 0;
};

// parse_links + normalize in one step.
LinkStream load_stream(std::string_view text, const StreamConfig& config);

// Writes "b e u v" lines in stored order (begin, u, v), labels as given on input.
void serialize(const LinkStream& stream, std::string& out);

} // namespace lsclique
