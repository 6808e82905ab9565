#include "vinebound/vine.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

#include "vinebound/solver.hpp"

namespace vinebound {

namespace {

using Mask = std::uint64_t;

// pos[v] = index of v on p, or -1.
std::vector<int> positions_on(const Path& p, int n) {
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= 0 && p[i] < n) {
            pos[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
        }
    }
    return pos;
}

std::string vertex_name(std::string_view role, std::size_t index, Vertex v) {
    return std::string(role) + std::to_string(index) + "=" + std::to_string(v);
}

void require_vine_preconditions(const Graph& g, const Path& p) {
    if (g.vertex_count() > kMaxSolverVertices) {
        throw PreconditionError("vine search supports at most " + std::to_string(kMaxSolverVertices) +
                                " vertices");
    }
    if (auto conn = check_two_connectivity(g); !conn.ok()) {
        throw PreconditionError("vine search needs a 2-connected graph: " + conn.describe());
    }
    if (p.length() < 1) {
        throw PreconditionError("vine search needs a path with at least one edge");
    }
    try {
        validate_path(g, p.vertices());
    } catch (const ValidationError& e) {
        throw PreconditionError(std::string("path is not a path of the graph: ") + e.what());
    }
}

// Ears reduced to what the chain search needs.
struct EarKey {
    int x;     // position of x_attach on P
    int y;     // position of y_attach on P
    Mask used; // interior vertices
};

std::vector<EarKey> ear_keys(const std::vector<Ear>& ears, const std::vector<int>& pos) {
    std::vector<EarKey> keys;
    keys.reserve(ears.size());
    for (const Ear& ear : ears) {
        Mask used = 0;
        for (Vertex v : ear.interior()) {
            used |= Mask{1} << static_cast<unsigned>(v);
        }
        keys.push_back({pos[static_cast<std::size_t>(ear.x_attach())],
                        pos[static_cast<std::size_t>(ear.y_attach())], used});
    }
    return keys;
}

// Index range of ears whose x position lies in [lo, hi). Ears are sorted by x.
std::pair<std::size_t, std::size_t> x_range(const std::vector<EarKey>& keys, int lo, int hi) {
    auto first = std::lower_bound(keys.begin(), keys.end(), lo,
                                  [](const EarKey& k, int value) { return k.x < value; });
    auto last = std::lower_bound(first, keys.end(), hi,
                                 [](const EarKey& k, int value) { return k.x < value; });
    return {static_cast<std::size_t>(first - keys.begin()), static_cast<std::size_t>(last - keys.begin())};
}

// Partial chain L_1..L_i. The next ear L_{i+1} must satisfy
//   lower <= x_{i+1} < y_i,  y_i < y_{i+1},  interior disjoint from used,
// where lower is 1 for i = 1 (x_1 < x_2) and y_{i-1} otherwise.
struct ChainState {
    int lower;
    int last_y;
    Mask used;
};

ChainState start_state(const EarKey& first) {
    return {1, first.y, first.used};
}

bool can_follow(const ChainState& s, const EarKey& next) {
    return next.x >= s.lower && next.x < s.last_y && next.y > s.last_y && (next.used & s.used) == 0;
}

ChainState follow(const ChainState& s, const EarKey& next) {
    return {s.last_y, next.y, s.used | next.used};
}

Vine assemble(const Path& p, const std::vector<Ear>& ears, const std::vector<std::size_t>& picks) {
    Vine vine{p, {}};
    vine.ears.reserve(picks.size());
    for (std::size_t i : picks) {
        vine.ears.push_back(ears[i]);
    }
    return vine;
}

} // namespace

Ear make_ear(const Graph& g, const Path& base, std::span<const Vertex> vs) {
    Path path = validate_path(g, vs);
    auto px = base.position_of(path.front());
    auto py = base.position_of(path.back());
    if (px && py && *px > *py) {
        std::vector<Vertex> reversed(vs.rbegin(), vs.rend());
        path = validate_path(g, reversed);
    }
    return Ear{std::move(path)};
}

std::vector<Ear> enumerate_ears(const Graph& g, const Path& p, std::size_t cap) {
    const auto pos = positions_on(p, g.vertex_count());
    std::vector<std::tuple<int, int, std::vector<Vertex>>> found; // (x, y, interior)
    std::vector<bool> on_stack(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<Vertex> current;

    auto grow = [&](auto&& self, Vertex v, int from) -> void {
        for (Vertex w : g.neighbors(v)) {
            const int pw = pos[static_cast<std::size_t>(w)];
            if (pw >= 0) {
                // Rejoin P further along; a bare P edge is not an ear.
                if (pw > from && !(current.size() == 1 && pw == from + 1)) {
                    found.emplace_back(from, pw, std::vector<Vertex>(current.begin() + 1, current.end()));
                    if (found.size() > cap) {
                        throw ResourceLimitError("more than " + std::to_string(cap) + " ears on the path",
                                                 found.size());
                    }
                }
                continue;
            }
            if (on_stack[static_cast<std::size_t>(w)]) {
                continue;
            }
            on_stack[static_cast<std::size_t>(w)] = true;
            current.push_back(w);
            self(self, w, from);
            current.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
        }
    };

    for (std::size_t i = 0; i < p.size(); ++i) {
        current.assign(1, p[i]);
        grow(grow, p[i], static_cast<int>(i));
    }

    std::sort(found.begin(), found.end());
    std::vector<Ear> ears;
    ears.reserve(found.size());
    for (auto& [x, y, interior] : found) {
        std::vector<Vertex> vs;
        vs.reserve(interior.size() + 2);
        vs.push_back(p[static_cast<std::size_t>(x)]);
        vs.insert(vs.end(), interior.begin(), interior.end());
        vs.push_back(p[static_cast<std::size_t>(y)]);
        ears.push_back(Ear{validate_path(g, vs)});
    }
    return ears;
}

VineVerdict verify_vine(const Vine& v) {
    const std::size_t m = v.m();
    if (m == 0) {
        return {VineClause::empty, 0, 0, "vine has no ears"};
    }
    const Path& base = v.base;

    std::vector<std::size_t> px(m);
    std::vector<std::size_t> py(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Ear& ear = v.ears[i];
        auto x = base.position_of(ear.x_attach());
        auto y = base.position_of(ear.y_attach());
        if (!x || !y) {
            return {VineClause::attachment_not_on_path, i, i,
                    "ear " + std::to_string(i + 1) + " has an endpoint off the base path"};
        }
        if (*x >= *y) {
            return {VineClause::attachment_order, i, i,
                    "ear " + std::to_string(i + 1) + ": x must precede y on the base path"};
        }
        if (ear.length() == 1 && *y == *x + 1) {
            return {VineClause::ear_on_path, i, i,
                    "ear " + std::to_string(i + 1) + " is an edge of the base path"};
        }
        for (Vertex w : ear.interior()) {
            if (base.position_of(w)) {
                return {VineClause::interior_touches_path, i, i,
                        "ear " + std::to_string(i + 1) + " interior vertex " + std::to_string(w) +
                            " lies on the base path"};
            }
        }
        px[i] = *x;
        py[i] = *y;
    }

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (Vertex w : v.ears[i].interior()) {
                auto other = v.ears[j].interior();
                if (std::find(other.begin(), other.end(), w) != other.end()) {
                    return {VineClause::interiors_intersect, i, j,
                            "ears " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " share interior vertex " + std::to_string(w)};
                }
            }
        }
    }

    if (px[0] != 0) {
        return {VineClause::chain_start, 0, 0, "x1 must be the first vertex of the base path"};
    }
    if (py[m - 1] != base.length()) {
        return {VineClause::chain_end, m - 1, m - 1,
                "y" + std::to_string(m) + " must be the last vertex of the base path"};
    }
    if (m == 1) {
        return {};
    }

    auto x_of = [&](std::size_t i) { return v.ears[i].x_attach(); };
    auto y_of = [&](std::size_t i) { return v.ears[i].y_attach(); };
    auto broken = [&](std::size_t ear, std::size_t other, const std::string& relation) {
        return VineVerdict{VineClause::chain_link, ear, other, "chain link " + relation + " fails"};
    };

    // Indices below are 0-based; the messages use the 1-based names.
    if (!(px[0] < px[1])) {
        return broken(1, 0, vertex_name("x", 1, x_of(0)) + " < " + vertex_name("x", 2, x_of(1)));
    }
    if (!(px[1] < py[0])) {
        return broken(1, 0, vertex_name("x", 2, x_of(1)) + " < " + vertex_name("y", 1, y_of(0)));
    }
    for (std::size_t i = 1; i + 1 < m; ++i) {
        if (!(py[i - 1] <= px[i + 1])) {
            return broken(i + 1, i - 1,
                          vertex_name("y", i, y_of(i - 1)) + " <= " + vertex_name("x", i + 2, x_of(i + 1)));
        }
        if (!(px[i + 1] < py[i])) {
            return broken(i + 1, i,
                          vertex_name("x", i + 2, x_of(i + 1)) + " < " + vertex_name("y", i + 1, y_of(i)));
        }
    }
    if (!(py[m - 2] < py[m - 1])) {
        return broken(m - 1, m - 2,
                      vertex_name("y", m - 1, y_of(m - 2)) + " < " + vertex_name("y", m, y_of(m - 1)));
    }
    return {};
}

Vine find_min_vine(const Graph& g, const Path& p, std::size_t ear_cap, std::size_t state_cap) {
    require_vine_preconditions(g, p);
    const auto ears = enumerate_ears(g, p, ear_cap);
    const auto keys = ear_keys(ears, positions_on(p, g.vertex_count()));
    const int end = static_cast<int>(p.length());

    struct Node {
        ChainState state;
        std::size_t ear;
        std::size_t parent; // index into nodes, or npos for level 1
    };
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<Node> nodes;
    std::set<std::tuple<int, int, Mask>> seen;

    auto picks_of = [&](std::size_t node) {
        std::vector<std::size_t> picks;
        for (std::size_t k = node; k != npos; k = nodes[k].parent) {
            picks.push_back(nodes[k].ear);
        }
        std::reverse(picks.begin(), picks.end());
        return picks;
    };
    auto admit = [&](const ChainState& s) {
        if (!seen.emplace(s.lower, s.last_y, s.used).second) {
            return false;
        }
        if (seen.size() > state_cap) {
            throw ResourceLimitError("vine search exceeded " + std::to_string(state_cap) + " states",
                                     seen.size());
        }
        return true;
    };

    // Level 1: ears leaving from the first vertex of P.
    auto [first, last] = x_range(keys, 0, 1);
    for (std::size_t e = first; e < last; ++e) {
        if (keys[e].y == end) {
            return assemble(p, ears, {e});
        }
        ChainState s = start_state(keys[e]);
        if (admit(s)) {
            nodes.push_back({s, e, npos});
        }
    }

    // Nodes are appended level by level in lexicographic order of their ear
    // sequences, so the first completed chain is the answer.
    for (std::size_t at = 0; at < nodes.size(); ++at) {
        const ChainState s = nodes[at].state;
        auto [lo, hi] = x_range(keys, s.lower, s.last_y);
        for (std::size_t e = lo; e < hi; ++e) {
            if (!can_follow(s, keys[e])) {
                continue;
            }
            if (keys[e].y == end) {
                auto picks = picks_of(at);
                picks.push_back(e);
                return assemble(p, ears, picks);
            }
            ChainState next = follow(s, keys[e]);
            if (admit(next)) {
                nodes.push_back({next, e, at});
            }
        }
    }
    throw InternalError("Vine Lemma violated: no vine exists on a path of a 2-connected graph");
}

VineList enumerate_vines(const Graph& g, const Path& p, std::size_t max_count, std::size_t ear_cap,
                         std::size_t state_cap) {
    require_vine_preconditions(g, p);
    const auto ears = enumerate_ears(g, p, ear_cap);
    const auto keys = ear_keys(ears, positions_on(p, g.vertex_count()));
    const int end = static_cast<int>(p.length());

    VineList out;
    std::vector<std::size_t> picks;
    std::size_t visited = 0;

    // Returns false to stop the whole enumeration.
    auto extend = [&](auto&& self, const ChainState& s) -> bool {
        auto [lo, hi] = x_range(keys, s.lower, s.last_y);
        for (std::size_t e = lo; e < hi; ++e) {
            if (!can_follow(s, keys[e])) {
                continue;
            }
            if (++visited > state_cap) {
                out.truncated = true;
                return false;
            }
            picks.push_back(e);
            bool go_on = true;
            if (keys[e].y == end) {
                if (out.vines.size() == max_count) {
                    out.truncated = true;
                    go_on = false;
                } else {
                    out.vines.push_back(assemble(p, ears, picks));
                }
            } else {
                go_on = self(self, follow(s, keys[e]));
            }
            picks.pop_back();
            if (!go_on) {
                return false;
            }
        }
        return true;
    };

    auto [first, last] = x_range(keys, 0, 1);
    for (std::size_t e = first; e < last; ++e) {
        picks.assign(1, e);
        if (keys[e].y == end) {
            if (out.vines.size() == max_count) {
                out.truncated = true;
                break;
            }
            out.vines.push_back(assemble(p, ears, picks));
            continue;
        }
        if (!extend(extend, start_state(keys[e]))) {
            break;
        }
    }
    return out;
}

} // namespace vinebound
