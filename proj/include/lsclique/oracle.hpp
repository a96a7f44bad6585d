#pragma once

#include <set>
#include <stdexcept>

#include "lsclique/enumerate.hpp"
#include "lsclique/link_stream.hpp"

namespace lsclique {

// Refusal to brute-force a stream that is too large (see OracleOptions::force).
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    std::uint32_t max_vertices = 12;
    std::uint64_t max_links = 100;
    bool force = false;   // run anyway (exponential cost is on the caller)
};

// Brute-force reference: for every begin instant, rebuilds the instantaneous
// graph from scratch, enumerates candidate vertex subsets around each link that
// begins there, and keeps those whose interval cannot be extended and whose
// vertex set cannot be grown for free. Shares no traversal machinery with the
// sweep enumerator. Throws SizeGuardError above the limits unless forced.
std::set<TimedClique> oracle_enumerate(const LinkStream& stream, const OracleOptions& options = {});

} // namespace lsclique
