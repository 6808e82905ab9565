#ifndef VINEBOUND_TESTS_FIXTURES_HPP
#define VINEBOUND_TESTS_FIXTURES_HPP

#include "vinebound/graph.hpp"

namespace fixtures {

using vinebound::Graph;

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

// Spine 0..4 plus chords 0-3 and 1-4: the even-m tight family at m=2, y=0.
inline Graph x1() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 3}, {1, 4}}); }

// Spine 0..6 plus chords 0-3, 1-5, 3-6: the odd-m tight family at m=3, y=0.
inline Graph x2() {
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 3}, {1, 5}, {3, 6}});
}

// x=0, y=1 joined by three paths through 2, 3 and 4.
inline Graph theta() { return Graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}); }

inline Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

inline Graph cycle(int n) {
    std::vector<vinebound::Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return Graph(n, edges);
}

} // namespace fixtures

#endif // VINEBOUND_TESTS_FIXTURES_HPP
