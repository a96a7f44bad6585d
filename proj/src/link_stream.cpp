#include "lsclique/link_stream.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace lsclique {

VertexId VertexTable::intern(std::string_view label) {
    auto it = ids_.find(std::string(label));
    if (it != ids_.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels_.size());
    labels_.emplace_back(label);
    ids_.emplace(labels_.back(), id);
    return id;
}

std::optional<VertexId> VertexTable::find(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

namespace {

// Splits a line on blanks/tabs; returns up to max_tokens + 1 tokens so callers
// can detect "too many".
std::size_t split_tokens(std::string_view line, std::string_view* out, std::size_t cap) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (count < cap) out[count] = line.substr(start, i - start);
        ++count;
        if (count > cap) break;
    }
    return count;
}

Timestamp parse_timestamp(std::string_view tok, std::size_t line_no) {
    Timestamp value = 0;
    const char* first = tok.data();
    const char* last  = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line_no, "timestamp out of range: '" + std::string(tok) + "'");
    if (ec != std::errc() || ptr != last || value < 0)
        throw ParseError(line_no, "expected a non-negative integer timestamp, got '" +
                                      std::string(tok) + "'");
    return value;
}

} // namespace

RawStream parse_links(std::string_view text, const StreamConfig& config) {
    RawStream raw;
    const bool instantaneous = config.format == InputFormat::instantaneous;
    const std::size_t want = instantaneous ? 3 : 4;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (pos > text.size() && line.empty()) break;  // no trailing pseudo-line

        // comments and blank lines
        std::size_t first_ns = line.find_first_not_of(" \t\r");
        if (first_ns == std::string_view::npos) continue;
        if (line[first_ns] == '#') continue;

        std::string_view tok[5];
        std::size_t n_tok = split_tokens(line, tok, 4);
        if (n_tok != want)
            throw ParseError(line_no, "expected " + std::to_string(want) + " tokens");

        Timestamp b, e;
        std::string_view lu, lv;
        if (instantaneous) {
            b = parse_timestamp(tok[0], line_no);
            constexpr Timestamp kMax = std::numeric_limits<Timestamp>::max();
            if (config.delta > kMax - b)
                throw ParseError(line_no, "timestamp overflow applying duration");
            e = b + config.delta;
            lu = tok[1];
            lv = tok[2];
        } else {
            b = parse_timestamp(tok[0], line_no);
            e = parse_timestamp(tok[1], line_no);
            if (e < b) throw ParseError(line_no, "interval ends before it begins");
            lu = tok[2];
            lv = tok[3];
        }
        if (lu == lv) throw ParseError(line_no, "self-loop on '" + std::string(lu) + "'");

        VertexId u = raw.vertices.intern(lu);
        VertexId v = raw.vertices.intern(lv);
        if (u > v) std::swap(u, v);
        raw.links.push_back(Link{b, e, u, v});
    }
    return raw;
}

LinkStream LinkStream::normalize(RawStream raw) {
    LinkStream stream;
    stream.vertices_ = std::move(raw.vertices);
    auto& links = raw.links;

    // group per pair, merge overlapping or touching intervals
    std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.begin < b.begin;
    });
    std::vector<Link> merged;
    merged.reserve(links.size());
    for (const Link& l : links) {
        if (!merged.empty()) {
            Link& last = merged.back();
            if (last.u == l.u && last.v == l.v && l.begin <= last.end) {
                last.end = std::max(last.end, l.end);
                continue;
            }
        }
        merged.push_back(l);
    }

    std::sort(merged.begin(), merged.end(), [](const Link& a, const Link& b) {
        if (a.begin != b.begin) return a.begin < b.begin;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    stream.links_ = std::move(merged);

    if (!stream.links_.empty()) {
        std::vector<Timestamp> instants;
        instants.reserve(stream.links_.size() * 2);
        Timestamp hb = stream.links_.front().begin;
        Timestamp he = hb;
        for (const Link& l : stream.links_) {
            instants.push_back(l.begin);
            instants.push_back(l.end);
            he = std::max(he, l.end);
        }
        std::sort(instants.begin(), instants.end());
        instants.erase(std::unique(instants.begin(), instants.end()), instants.end());
        stream.distinct_instants_ = instants.size();
        stream.horizon_begin_ = hb;
        stream.horizon_end_ = he;
    }
    return stream;
}

LinkStream load_stream(std::string_view text, const StreamConfig& config) {
    return LinkStream::normalize(parse_links(text, config));
}

void serialize(const LinkStream& stream, std::string& out) {
    for (const Link& l : stream.links()) {
        out += std::to_string(l.begin);
        out += ' ';
        out += std::to_string(l.end);
        out += ' ';
        out += stream.vertices().label(l.u);
        out += ' ';
        out += stream.vertices().label(l.v);
        out += '\n';
    }
}

} // namespace lsclique
