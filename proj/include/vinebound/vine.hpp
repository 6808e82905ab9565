#ifndef VINEBOUND_VINE_HPP
#define VINEBOUND_VINE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vinebound/graph.hpp"

namespace vinebound {

// A path of G that leaves the base path P at x_attach and rejoins it at
// y_attach, with every interior vertex off P. Oriented from x to y.
struct Ear {
    Path path;

    Vertex x_attach() const { return path.front(); }
    Vertex y_attach() const { return path.back(); }
    std::size_t length() const { return path.length(); }
    std::span<const Vertex> interior() const {
        auto vs = path.vertices();
        return vs.size() <= 2 ? std::span<const Vertex>{} : vs.subspan(1, vs.size() - 2);
    }

    friend bool operator==(const Ear&, const Ear&) = default;
};

// Ordered ears L_1..L_m on a base path. Built freely; verify_vine decides
// whether the ears actually form a vine.
struct Vine {
    Path base;
    std::vector<Ear> ears;

    std::size_t m() const { return ears.size(); }
};

// Validates `vs` as a path of g and orients it so that its first vertex
// precedes its last along `base` (when both lie on base).
Ear make_ear(const Graph& g, const Path& base, std::span<const Vertex> vs);
inline Ear make_ear(const Graph& g, const Path& base, std::initializer_list<Vertex> vs) {
    return make_ear(g, base, std::span<const Vertex>(vs.begin(), vs.size()));
}

inline constexpr std::size_t kDefaultEarCap = 100'000;
inline constexpr std::size_t kDefaultVineStateCap = 1'000'000;

// All ears on p, skipping single edges of p itself. Sorted by position of
// x_attach on p, then position of y_attach, then interior lexicographically.
// Throws ResourceLimitError (partial count attached) when more than cap exist.
std::vector<Ear> enumerate_ears(const Graph& g, const Path& p, std::size_t cap = kDefaultEarCap);

enum class VineClause {
    ok,
    empty,                 // no ears
    attachment_not_on_path,
    attachment_order,      // x_i does not precede y_i on P
    ear_on_path,           // ear is a single edge of P
    interior_touches_path, // an interior vertex lies on P
    interiors_intersect,
    chain_start,           // x_1 is not the first vertex of P
    chain_end,             // y_m is not the last vertex of P
    chain_link,            // an order relation of the attachment chain fails
};

struct VineVerdict {
    VineClause clause = VineClause::ok;
    std::size_t ear = 0;   // 0-based index of the offending ear
    std::size_t other = 0; // second ear involved, when there is one
    std::string message;

    bool ok() const { return clause == VineClause::ok; }
};

// Checks conditions (a) and (b) with strict/non-strict precedence exactly as
// the chain x=x1 < x2 < y1 <= x3 < y2 <= ... <= xm < y(m-1) < ym=y requires.
// For m = 1 the chain reduces to x1 = x and y1 = y.
VineVerdict verify_vine(const Vine& v);

// Breadth-first search over partial chains. Returns a vine of minimum m; among
// those, the lexicographically first by enumerate_ears order.
// Requires g 2-connected and p.length() >= 1. Throws ResourceLimitError when
// a cap is hit, InternalError if the search exhausts (the Vine Lemma
// guarantees a vine on every path of a 2-connected graph).
Vine find_min_vine(const Graph& g, const Path& p, std::size_t ear_cap = kDefaultEarCap,
                   std::size_t state_cap = kDefaultVineStateCap);

struct VineList {
    std::vector<Vine> vines;
    bool truncated = false; // max_count or the state cap cut the enumeration short
};

// Every vine on p, depth-first in lexicographic order of ear indices.
VineList enumerate_vines(const Graph& g, const Path& p, std::size_t max_count,
                         std::size_t ear_cap = kDefaultEarCap,
                         std::size_t state_cap = kDefaultVineStateCap);

} // namespace vinebound

#endif // VINEBOUND_VINE_HPP
