#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <tuple>
#include <vector>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "vinebound/extremal.hpp"
#include "vinebound/solver.hpp"
#include "vinebound/vine.hpp"

using namespace vinebound;

namespace {

using Seq = std::vector<Vertex>;

Seq seq(std::span<const Vertex> vs) { return {vs.begin(), vs.end()}; }

std::vector<std::pair<Vertex, Vertex>> attachments(const std::vector<Ear>& ears) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : ears) {
        out.emplace_back(e.x_attach(), e.y_attach());
    }
    return out;
}

Vine vine_of(const Graph& g, const Path& p, std::initializer_list<std::initializer_list<Vertex>> ears) {
    Vine v{p, {}};
    for (auto e : ears) {
        v.ears.push_back(make_ear(g, p, e));
    }
    return v;
}

Path x2_spine() { return validate_path(fixtures::x2(), {0, 1, 2, 3, 4, 5, 6}); }

std::vector<Seq> as_seqs(const Vine& v) {
    std::vector<Seq> out;
    for (const auto& e : v.ears) {
        out.push_back(seq(e.path.vertices()));
    }
    return out;
}

} // namespace

TEST_CASE("enumerate_ears on X2 spine") {
    auto ears = enumerate_ears(fixtures::x2(), x2_spine());
    CHECK(attachments(ears) == std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 5}, {3, 6}});
    for (const auto& e : ears) {
        CHECK(e.length() == 1);
        CHECK(e.interior().empty());
    }
}

TEST_CASE("enumerate_ears on THETA and C5") {
    Graph t = fixtures::theta();
    Path p = validate_path(t, {2, 0, 3, 1, 4});
    auto ears = enumerate_ears(t, p);
    auto att = attachments(ears);
    CHECK(std::find(att.begin(), att.end(), std::pair<Vertex, Vertex>{2, 1}) != att.end());
    CHECK(std::find(att.begin(), att.end(), std::pair<Vertex, Vertex>{0, 4}) != att.end());
    CHECK(ears.size() == 2);

    Graph c5 = fixtures::c5();
    auto c5_ears = enumerate_ears(c5, validate_path(c5, {0, 1, 2, 3, 4}));
    CHECK(attachments(c5_ears) == std::vector<std::pair<Vertex, Vertex>>{{0, 4}});
}

TEST_CASE("enumerate_ears with interiors, against brute force") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = random_ear_graph(4 + static_cast<int>(seed % 7), static_cast<int>(seed % 3), seed).graph;
        Path p = longest_path(g).path;
        // A shorter base path leaves room for ears with interiors.
        Path shorter = validate_path(g, p.vertices().subspan(0, p.size() - 1 - seed % 2));
        for (const Path& base : {p, shorter}) {
            auto ears = enumerate_ears(g, base);
            std::set<Seq> mine;
            for (const auto& e : ears) {
                mine.insert(seq(e.path.vertices()));
            }
            auto theirs_v = brute::ears(g, seq(base.vertices()));
            std::set<Seq> theirs(theirs_v.begin(), theirs_v.end());
            CHECK(mine.size() == ears.size());
            CHECK(mine == theirs);
            // Sort key: (x position, y position, interior).
            for (std::size_t i = 1; i < ears.size(); ++i) {
                auto key = [&](const Ear& e) {
                    auto in = e.interior();
                    return std::make_tuple(*base.position_of(e.x_attach()), *base.position_of(e.y_attach()),
                                           Seq(in.begin(), in.end()));
                };
                CHECK(key(ears[i - 1]) < key(ears[i]));
            }
        }
    }
}

TEST_CASE("enumerate_ears cap") {
    Graph g = random_two_connected(12, 30, 9).graph;
    Path p = validate_path(g, {longest_path(g).path.front(), g.neighbors(longest_path(g).path.front())[0]});
    try {
        enumerate_ears(g, p, 3);
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError& e) {
        CHECK(e.partial_count() >= 3);
    }
}

TEST_CASE("verify_vine accepts the X2 three-ear vine") {
    Graph g = fixtures::x2();
    Path p = x2_spine();
    CHECK(verify_vine(vine_of(g, p, {{0, 3}, {1, 5}, {3, 6}})).ok());
}

TEST_CASE("verify_vine rejects two ears meeting at one vertex") {
    Graph g = fixtures::x2();
    auto verdict = verify_vine(vine_of(g, x2_spine(), {{0, 3}, {3, 6}}));
    CHECK(verdict.clause == VineClause::chain_link);
    CHECK(verdict.message.find("x2=3 < y1=3") != std::string::npos);
}

TEST_CASE("verify_vine single ear on C5") {
    Graph g = fixtures::c5();
    Path p = validate_path(g, {0, 1, 2, 3, 4});
    CHECK(verify_vine(vine_of(g, p, {{0, 4}})).ok());
    CHECK(verify_vine(vine_of(g, p, {{4, 0}})).ok()); // make_ear orients along p
}

TEST_CASE("verify_vine names each failing clause") {
    Graph x2 = fixtures::x2();
    Path p = x2_spine();

    CHECK(verify_vine(Vine{p, {}}).clause == VineClause::empty);

    // Attachment off the base path.
    Path shorter = validate_path(x2, {0, 1, 2, 3, 4, 5});
    CHECK(verify_vine(vine_of(x2, shorter, {{0, 3}, {3, 6}})).clause == VineClause::attachment_not_on_path);

    // Bare P edge used as an ear.
    CHECK(verify_vine(vine_of(x2, p, {{0, 1}, {1, 5}, {3, 6}})).clause == VineClause::ear_on_path);

    // Ear interior on P: 0-3-4 runs along a P vertex.
    auto touch = verify_vine(vine_of(x2, validate_path(x2, {0, 1, 2, 3, 4}), {{0, 3, 4}}));
    CHECK(touch.clause == VineClause::interior_touches_path);

    // Start and end of the chain.
    CHECK(verify_vine(vine_of(x2, p, {{1, 5}, {3, 6}})).clause == VineClause::chain_start);
    CHECK(verify_vine(vine_of(x2, p, {{0, 3}, {1, 5}})).clause == VineClause::chain_end);

    // Strict x1 < x2 fails when both ears start at x.
    Graph k4 = fixtures::k4();
    Path k4p = validate_path(k4, {0, 1, 2, 3});
    CHECK(verify_vine(vine_of(k4, k4p, {{0, 2}, {0, 3}})).clause == VineClause::chain_link);
    // Out of order.
    CHECK(verify_vine(vine_of(k4, k4p, {{1, 3}, {0, 2}})).clause == VineClause::chain_start);
    CHECK(verify_vine(vine_of(k4, k4p, {{0, 2}, {1, 3}})).ok());

    // Two ears sharing an interior vertex.
    Graph t = fixtures::theta();
    Path tp = validate_path(t, {0, 2, 1});
    auto shared = verify_vine(vine_of(t, tp, {{0, 3, 1}, {0, 3, 1}}));
    CHECK(shared.clause == VineClause::interiors_intersect);
    CHECK(shared.ear == 0);
    CHECK(shared.other == 1);
}

TEST_CASE("verify_vine attachment order on a hand-made ear") {
    // An Ear whose path runs against the base direction.
    Graph g = fixtures::c5();
    Path p = validate_path(g, {0, 1, 2, 3, 4});
    Vine v{p, {Ear{validate_path(g, {4, 0})}}};
    CHECK(verify_vine(v).clause == VineClause::attachment_order);
}

TEST_CASE("verify_vine agrees with the direct chain check") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_ear_graph(5 + static_cast<int>(seed % 5), 2, seed).graph;
        Path p = longest_path(g).path;
        auto ears = enumerate_ears(g, p);
        if (ears.size() > 9) {
            continue;
        }
        // Every subset of up to 4 ears, kept in sorted order.
        const std::size_t k = ears.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            if (std::popcount(mask) > 4) {
                continue;
            }
            Vine v{p, {}};
            for (std::size_t i = 0; i < k; ++i) {
                if (mask >> i & 1u) {
                    v.ears.push_back(ears[i]);
                }
            }
            CHECK(verify_vine(v).ok() == brute::is_vine(seq(p.vertices()), as_seqs(v)));
        }
    }
}

TEST_CASE("find_min_vine fixtures") {
    Graph k4 = fixtures::k4();
    Vine kv = find_min_vine(k4, validate_path(k4, {0, 1, 2, 3}));
    REQUIRE(kv.m() == 1);
    CHECK(seq(kv.ears[0].path.vertices()) == Seq{0, 3});

    Vine xv = find_min_vine(fixtures::x2(), x2_spine());
    CHECK(xv.m() == 3);
    CHECK(verify_vine(xv).ok());

    Graph c5 = fixtures::c5();
    CHECK(find_min_vine(c5, validate_path(c5, {0, 1, 2, 3, 4})).m() == 1);

    Graph x1 = fixtures::x1();
    CHECK(find_min_vine(x1, validate_path(x1, {0, 1, 2, 3, 4})).m() == 2);
}

TEST_CASE("find_min_vine preconditions") {
    Graph p3 = fixtures::path3();
    CHECK_THROWS_AS(find_min_vine(p3, validate_path(p3, {0, 1, 2})), PreconditionError);
    Graph t = fixtures::triangle();
    CHECK_THROWS_AS(find_min_vine(t, validate_path(t, {0})), PreconditionError);
    // A path of another graph.
    CHECK_THROWS_AS(find_min_vine(t, x2_spine()), PreconditionError);
}

TEST_CASE("a bare P edge never serves as an ear") {
    // On a triangle with base 0-1-2, the only ear is the chord 0-2.
    Graph t = fixtures::triangle();
    Path p = validate_path(t, {0, 1, 2});
    auto ears = enumerate_ears(t, p);
    REQUIRE(ears.size() == 1);
    CHECK(seq(ears[0].path.vertices()) == Seq{0, 2});
    // A single-edge base has only the long way round.
    Path e = validate_path(t, {0, 1});
    Vine v = find_min_vine(t, e);
    CHECK(seq(v.ears[0].path.vertices()) == Seq{0, 2, 1});
}

TEST_CASE("enumerate_vines fixtures") {
    Graph c5 = fixtures::c5();
    CHECK(enumerate_vines(c5, validate_path(c5, {0, 1, 2, 3, 4}), 100).vines.size() == 1);

    Graph x1 = fixtures::x1();
    auto list = enumerate_vines(x1, validate_path(x1, {0, 1, 2, 3, 4}), 100);
    bool found = false;
    for (const auto& v : list.vines) {
        CHECK(verify_vine(v).ok());
        found = found || attachments(v.ears) == std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 4}};
    }
    CHECK(found);
    CHECK_FALSE(list.truncated);

    Graph t = fixtures::triangle();
    CHECK(enumerate_vines(t, validate_path(t, {0, 1, 2}), 100).vines.size() == 1);

    auto capped = enumerate_vines(fixtures::x2(), x2_spine(), 0);
    CHECK(capped.vines.empty());
    CHECK(capped.truncated);
}

TEST_CASE("enumerate_vines and find_min_vine against brute force") {
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const int n = 3 + static_cast<int>(seed % 8);
        Graph g = seed % 2 == 0 ? random_two_connected(n, static_cast<int>(seed % 4), seed).graph
                                : random_ear_graph(n, static_cast<int>(seed % 3), seed).graph;
        Path p = longest_path(g).path;
        Seq ps = seq(p.vertices());
        auto brute_vines = brute::all_vines(g, ps);
        auto mine = enumerate_vines(g, p, 100000);
        REQUIRE_FALSE(mine.truncated);

        std::set<std::vector<Seq>> a;
        for (const auto& v : mine.vines) {
            a.insert(as_seqs(v));
        }
        std::set<std::vector<Seq>> b;
        for (const auto& v : brute_vines) {
            if (v.size() < 6) { // brute force stops at 6 ears
                b.insert(v);
            }
        }
        std::set<std::vector<Seq>> a_short;
        for (const auto& v : a) {
            if (v.size() < 6) {
                a_short.insert(v);
            }
        }
        CHECK(a_short == b);

        Vine min = find_min_vine(g, p);
        CHECK(verify_vine(min).ok());
        CHECK(min.m() == brute::min_vine_length(g, ps));
        // Lex-first among minimum vines, in enumerate_vines order.
        for (const auto& v : mine.vines) {
            if (v.m() == min.m()) {
                CHECK(as_seqs(v) == as_seqs(min));
                break;
            }
        }
        ++compared;
    }
    CHECK(compared == 120);
}

TEST_CASE("a vine exists on every longest path, and c >= m + 2") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10);
        Graph g = seed % 2 == 0 ? random_two_connected(n, static_cast<int>(seed % 5), seed).graph
                                : random_ear_graph(n, static_cast<int>(seed % 4), seed).graph;
        Path p = longest_path(g).path;
        Vine v = find_min_vine(g, p);
        CHECK(verify_vine(v).ok());
        CHECK(static_cast<int>(longest_cycle(g).cycle.length()) >= static_cast<int>(v.m()) + 2);
    }
}
