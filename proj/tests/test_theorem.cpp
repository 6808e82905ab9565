#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "vinebound/extremal.hpp"
#include "vinebound/theorem.hpp"

using namespace vinebound;

namespace {

using Seq = std::vector<Vertex>;

Seq seq(std::span<const Vertex> vs) { return {vs.begin(), vs.end()}; }

Vine vine_of(const Graph& g, const Path& p, std::initializer_list<std::initializer_list<Vertex>> ears) {
    Vine v{p, {}};
    for (auto e : ears) {
        v.ears.push_back(make_ear(g, p, e));
    }
    return v;
}

Path x2_spine() { return validate_path(fixtures::x2(), {0, 1, 2, 3, 4, 5, 6}); }
Vine x2_vine() { return vine_of(fixtures::x2(), x2_spine(), {{0, 3}, {1, 5}, {3, 6}}); }
Path x1_spine() { return validate_path(fixtures::x1(), {0, 1, 2, 3, 4}); }
Vine x1_vine() { return vine_of(fixtures::x1(), x1_spine(), {{0, 3}, {1, 4}}); }
Path theta_path() { return validate_path(fixtures::theta(), {2, 0, 3, 1, 4}); }
Vine theta_vine() { return vine_of(fixtures::theta(), theta_path(), {{2, 1}, {0, 4}}); }

// Same vertex set and the same cyclic edge set.
bool same_cycle(const Cycle& c, Seq expected) {
    auto edges = [](const Seq& s) {
        std::set<std::pair<Vertex, Vertex>> out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Vertex u = s[i];
            Vertex v = s[(i + 1) % s.size()];
            out.insert({std::min(u, v), std::max(u, v)});
        }
        return out;
    };
    return edges(seq(c.vertices())) == edges(expected);
}

// Independent integer check: is c >= sqrt(4l + (y+1)^2 - [m even])?
bool bound_met_by_hand(long long l, long long c, long long m) {
    long long y = c - m - 2;
    long long rhs = 4 * l + (y + 1) * (y + 1) - (m % 2 == 0 ? 1 : 0);
    return c * c >= rhs;
}

} // namespace

TEST_CASE("decompose fixtures") {
    auto d2 = decompose(x2_spine(), x2_vine());
    CHECK(d2.a == std::vector<int>{1, 0, 1});
    CHECK(d2.b == std::vector<int>{2, 2});

    auto d1 = decompose(x1_spine(), x1_vine());
    CHECK(d1.a == std::vector<int>{1, 1});
    CHECK(d1.b == std::vector<int>{2});

    auto dt = decompose(theta_path(), theta_vine());
    CHECK(dt.a == std::vector<int>{1, 1});
    CHECK(dt.b == std::vector<int>{2});

    Graph c5 = fixtures::c5();
    Path p = validate_path(c5, {0, 1, 2, 3, 4});
    CHECK_THROWS_AS(decompose(p, vine_of(c5, p, {{0, 4}})), SingleEarVineError);
    CHECK_THROWS_AS(decompose(p, vine_of(c5, p, {{0, 4}})), PreconditionError);
}

TEST_CASE("decompose rejects non-vines and a foreign base") {
    Graph g = fixtures::x2();
    CHECK_THROWS_AS(decompose(x2_spine(), vine_of(g, x2_spine(), {{0, 3}, {3, 6}})), PreconditionError);
    CHECK_THROWS_AS(decompose(validate_path(g, {0, 1, 2, 3, 4, 5}), x2_vine()), PreconditionError);
}

TEST_CASE("Q0 fixtures") {
    Cycle q2 = build_q0(fixtures::x2(), decompose(x2_spine(), x2_vine()));
    CHECK(q2.length() == 5);
    CHECK(same_cycle(q2, {0, 1, 5, 6, 3}));

    Cycle q1 = build_q0(fixtures::x1(), decompose(x1_spine(), x1_vine()));
    CHECK(q1.length() == 4);
    CHECK(same_cycle(q1, {0, 1, 4, 3}));

    Cycle qt = build_q0(fixtures::theta(), decompose(theta_path(), theta_vine()));
    CHECK(qt.length() == 4);
    CHECK(same_cycle(qt, {2, 0, 4, 1}));
}

TEST_CASE("Qj fixtures") {
    auto d2 = decompose(x2_spine(), x2_vine());
    Cycle q = build_qj(fixtures::x2(), d2, 1);
    CHECK(q.length() == 5);
    CHECK(same_cycle(q, {1, 2, 3, 4, 5}));
    CHECK(qj_length_formula(d2, 1) == 5);
    CHECK_THROWS_AS(build_qj(fixtures::x2(), d2, 2), PreconditionError);
    CHECK_THROWS_AS(build_qj(fixtures::x2(), d2, 0), PreconditionError);

    auto d1 = decompose(x1_spine(), x1_vine());
    CHECK_THROWS_AS(build_qj(fixtures::x1(), d1, 1), PreconditionError);
}

TEST_CASE("Q* fixtures") {
    auto d1 = decompose(x1_spine(), x1_vine());
    Cycle q = build_qstar(fixtures::x1(), d1);
    CHECK(q.length() == 4);
    CHECK(same_cycle(q, {0, 1, 2, 3}));
    CHECK(qstar_length_formula(d1) == 4);
    CHECK_THROWS_AS(build_qstar(fixtures::x2(), decompose(x2_spine(), x2_vine())), PreconditionError);

    auto inst = extremal_graph({4, 0});
    auto d4 = decompose(inst.spine, inst.vine);
    Cycle q4 = build_qstar(inst.graph, d4);
    CHECK(static_cast<int>(q4.length()) == qstar_length_formula(d4));
    CHECK(static_cast<int>(q4.length()) <= inst.expected_c);
}

TEST_CASE("single-ear cycle") {
    Graph c5 = fixtures::c5();
    Path p = validate_path(c5, {0, 1, 2, 3, 4});
    Cycle q = single_ear_cycle(c5, vine_of(c5, p, {{0, 4}}));
    CHECK(q.length() == 5);
    CHECK_THROWS_AS(single_ear_cycle(fixtures::x2(), x2_vine()), PreconditionError);
}

TEST_CASE("inequality 1") {
    auto i2 = check_inequality_1(decompose(x2_spine(), x2_vine()), 5);
    CHECK(i2.lhs == 2);
    CHECK(i2.rhs == 2);
    CHECK(i2.tight());

    auto i1 = check_inequality_1(decompose(x1_spine(), x1_vine()), 4);
    CHECK(i1.tight());

    Graph k4 = fixtures::k4();
    Path p = validate_path(k4, {0, 1, 2, 3});
    auto d = decompose(p, vine_of(k4, p, {{0, 2}, {1, 3}}));
    CHECK(d.a == std::vector<int>{1, 1});
    CHECK(d.b == std::vector<int>{1});
    auto ik = check_inequality_1(d, 4);
    CHECK(ik.holds());
    CHECK(ik.lhs == 2);
    CHECK(ik.rhs == 2);

    // c < m + 2 is impossible for a true longest cycle.
    CHECK_THROWS_AS(check_inequality_1(d, 3), InternalError);
}

TEST_CASE("inequality 2") {
    auto d2 = decompose(x2_spine(), x2_vine());
    auto i = check_inequality_2(d2, 5, 1);
    CHECK(i.lhs == 4);
    CHECK(i.rhs == 4);
    CHECK(i.weak_rhs == 4);
    CHECK(i.tight());

    auto inst = extremal_graph({5, 0});
    auto d5 = decompose(inst.spine, inst.vine);
    auto i5 = check_inequality_2(d5, inst.expected_c, 2);
    CHECK(i5.lhs == 6);
    CHECK(i5.rhs == 6);
    CHECK(i5.weak_holds());
    CHECK_THROWS_AS(check_inequality_2(d5, inst.expected_c, 3), PreconditionError);
}

TEST_CASE("bound values") {
    CHECK(circumference_bound_squared(6, 0, Parity::odd) == 25);
    CHECK(circumference_bound(6, 0, Parity::odd) == doctest::Approx(5.0));
    CHECK(circumference_bound(4, 0, Parity::even) == doctest::Approx(4.0));
    CHECK(circumference_bound(2, 0, Parity::odd) == doctest::Approx(3.0));
    CHECK(circumference_bound_squared(4, 2, Parity::odd) == 25);
    CHECK(circumference_bound(14, 2, Parity::even) == doctest::Approx(8.0));
    CHECK(circumference_bound(5, 0, Parity::odd) == doctest::Approx(std::sqrt(21.0)));
}

TEST_CASE("Dirac checks") {
    CHECK(dirac_check(6, 5).theorem);
    CHECK(dirac_check(6, 5).conjecture);
    CHECK(dirac_check(4, 4).conjecture); // equality
    CHECK_FALSE(dirac_check(10, 5).conjecture);
    CHECK(dirac_check(10, 5).theorem);
    CHECK_FALSE(dirac_check(8, 4).theorem); // 16 > 16 fails
}

TEST_CASE("parity helpers") {
    CHECK(parity_of(1) == Parity::odd);
    CHECK(parity_of(4) == Parity::even);
    CHECK(std::string(to_string(Parity::even)) == "even");
}

TEST_CASE("analyze X2") {
    auto r = analyze(fixtures::x2());
    CHECK(r.certified);
    CHECK(r.l == 6);
    CHECK(r.c == 5);
    CHECK(r.m == 3);
    CHECK(r.slack == 0);
    CHECK(r.parity == Parity::odd);
    REQUIRE(r.bound.has_value());
    CHECK(*r.bound == doctest::Approx(5.0));
    CHECK(r.bound_met);
    CHECK(r.tight);
    REQUIRE(r.ineq1.has_value());
    CHECK(r.ineq1->tight());
    REQUIRE(r.ineq2.size() == 1);
    CHECK(r.ineq2[0].tight());
    CHECK(r.q0_len == 5);
    CHECK(r.qj_lens == std::vector<int>{5});
    CHECK_FALSE(r.qstar_len.has_value());
    CHECK(r.violations.empty());
    CHECK(r.passed());
}

TEST_CASE("analyze X1: Dirac conjecture with equality") {
    auto r = analyze(fixtures::x1());
    CHECK(r.l == 4);
    CHECK(r.c == 4);
    CHECK(r.m == 2);
    CHECK(r.parity == Parity::even);
    CHECK(r.tight);
    CHECK(r.dirac.conjecture);
    CHECK(static_cast<long long>(r.c) * r.c == 4LL * r.l);
    REQUIRE(r.qstar_len.has_value());
    CHECK(*r.qstar_len == 4);
    CHECK(r.passed());
}

TEST_CASE("analyze C5 and the triangle") {
    auto r = analyze(fixtures::c5());
    CHECK(r.l == 4);
    CHECK(r.c == 5);
    CHECK(r.m == 1);
    CHECK(r.slack == 2);
    CHECK(*r.bound == doctest::Approx(5.0));
    CHECK(r.tight);
    CHECK(r.passed());

    auto t = analyze(fixtures::triangle());
    CHECK(t.l == 2);
    CHECK(t.c == 3);
    CHECK(t.m == 1);
    CHECK(t.tight);
    CHECK(t.passed());
}

TEST_CASE("analyze preconditions and budgets") {
    CHECK_THROWS_AS(analyze(fixtures::path3()), PreconditionError);
    AnalyzeOptions opts;
    opts.limits.node_budget = 1;
    auto r = analyze(random_ear_graph(11, 5, 3).graph, opts);
    CHECK_FALSE(r.certified);
    CHECK_FALSE(r.uncertified_reason.empty());
    CHECK_FALSE(r.passed());

    AnalyzeOptions all;
    all.all_longest_paths = true;
    CHECK_THROWS_AS(analyze(fixtures::cycle(11), all), PreconditionError);
    auto k4 = analyze(fixtures::k4(), all);
    CHECK(k4.paths_checked == 12);
    CHECK(k4.passed());
}

TEST_CASE("check_vine flags a cycle length that is not the circumference") {
    // With c = 4 claimed for X2, Q0 (length 5) exceeds c.
    auto v = check_vine(fixtures::x2(), 6, 4, x2_vine());
    CHECK_FALSE(v.violations.empty());
}

TEST_CASE("properties over random 2-connected graphs") {
    int checked_m2 = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10);
        Graph g = seed % 2 == 0 ? random_two_connected(n, static_cast<int>(seed % 5), seed).graph
                                : random_ear_graph(n, static_cast<int>(seed % 4), seed).graph;
        AnalyzeOptions opts;
        opts.all_vines = true;
        auto r = analyze(g, opts);
        REQUIRE(r.certified);
        CHECK(r.violations.empty());
        CHECK(r.l == brute::longest_path_length(g));
        CHECK(r.c == brute::longest_cycle_length(g));

        // Float and integer verdicts agree.
        CHECK(r.bound_met == bound_met_by_hand(r.l, r.c, static_cast<long long>(r.m)));
        CHECK(r.bound_met);
        if (r.tight) {
            CHECK(r.bound_met);
            CHECK(*r.bound == doctest::Approx(static_cast<double>(r.c)));
        }
        // Circumference bound implies the Dirac conjecture implies the Dirac theorem.
        CHECK(r.dirac.conjecture);
        CHECK(r.dirac.theorem);

        if (r.m < 2) {
            continue;
        }
        ++checked_m2;
        auto d = decompose(*r.longest_path, *r.vine);
        int total = 0;
        for (int a : d.a) {
            total += a;
        }
        for (int b : d.b) {
            total += b;
        }
        CHECK(total == r.l); // segments tile P
        CHECK(static_cast<int>(build_q0(g, d).length()) == q0_length_formula(d));
        for (std::size_t j = 1; j <= (d.m() - 1) / 2; ++j) {
            Cycle q = build_qj(g, d, j);
            CHECK(static_cast<int>(q.length()) == qj_length_formula(d, j));
            CHECK(static_cast<int>(q.length()) <= r.c);
        }
        if (d.m() % 2 == 0) {
            CHECK(static_cast<int>(build_qstar(g, d).length()) == qstar_length_formula(d));
        }
    }
    CHECK(checked_m2 > 50);
}
