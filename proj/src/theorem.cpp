#include "vinebound/theorem.hpp"

#include <cmath>
#include <numeric>

namespace vinebound {

namespace {

std::vector<std::size_t> attachment_positions(const Vine& v, bool x_side) {
    std::vector<std::size_t> out;
    out.reserve(v.m());
    for (const Ear& ear : v.ears) {
        auto pos = v.base.position_of(x_side ? ear.x_attach() : ear.y_attach());
        if (!pos) {
            throw PreconditionError("ear attachment is not on the base path");
        }
        out.push_back(*pos);
    }
    return out;
}

// Accumulates a closed walk piece by piece; every piece starts where the
// previous one ended.
class WalkBuilder {
public:
    WalkBuilder(const Path& base, Vertex start) : base_(base), walk_{start} {}

    void along_base(std::size_t from, std::size_t to) {
        expect_at(base_[from]);
        if (from <= to) {
            for (std::size_t i = from + 1; i <= to; ++i) {
                walk_.push_back(base_[i]);
            }
        } else {
            for (std::size_t i = from; i-- > to;) {
                walk_.push_back(base_[i]);
            }
        }
    }

    void along_ear(const Ear& ear, bool forward) {
        auto vs = ear.path.vertices();
        expect_at(forward ? vs.front() : vs.back());
        if (forward) {
            walk_.insert(walk_.end(), vs.begin() + 1, vs.end());
        } else {
            walk_.insert(walk_.end(), vs.rbegin() + 1, vs.rend());
        }
    }

    Cycle close(const Graph& g, const char* name) {
        if (walk_.size() < 2 || walk_.back() != walk_.front()) {
            throw InternalError(std::string(name) + " construction did not return to its start");
        }
        walk_.pop_back();
        try {
            return validate_cycle(g, walk_);
        } catch (const ValidationError& e) {
            throw InternalError(std::string(name) + " construction is not a simple cycle: " + e.what());
        }
    }

private:
    void expect_at(Vertex v) const {
        if (walk_.back() != v) {
            throw InternalError("cycle pieces do not join");
        }
    }

    const Path& base_;
    std::vector<Vertex> walk_;
};

// Cycle formed by ears lo..hi (0-based, inclusive) of a vine together with
// the base segments that alternate between them. With r = 1..k indexing the
// sub-vine, the base pieces are A'_1 = X_1..X_2, A'_k = Y_{k-1}..Y_k and
// A'_r = Y_{r-1}..X_{r+1}; for k = 1 the single piece is X_1..Y_1.
// Forward pass: A'_1, L_2, A'_3, L_4, ... reaches Y_k; the backward pass
// returns through the remaining ears and pieces reversed.
Cycle weave(const Graph& g, const Vine& v, const std::vector<std::size_t>& xs,
            const std::vector<std::size_t>& ys, std::size_t lo, std::size_t hi, const char* name) {
    const std::size_t k = hi - lo + 1;
    auto X = [&](std::size_t r) { return xs[lo + r - 1]; };
    auto Y = [&](std::size_t r) { return ys[lo + r - 1]; };
    auto piece = [&](std::size_t r) -> Segment {
        if (k == 1) {
            return {X(1), Y(1)};
        }
        if (r == 1) {
            return {X(1), X(2)};
        }
        if (r == k) {
            return {Y(k - 1), Y(k)};
        }
        return {Y(r - 1), X(r + 1)};
    };
    auto ear = [&](std::size_t r) -> const Ear& { return v.ears[lo + r - 1]; };

    WalkBuilder walk(v.base, v.base[X(1)]);
    for (std::size_t r = 1; r <= k; ++r) {
        if (r % 2 == 1) {
            Segment s = piece(r);
            walk.along_base(s.from, s.to);
        } else {
            walk.along_ear(ear(r), true);
        }
    }
    for (std::size_t r = k; r >= 1; --r) {
        if (r % 2 == 1) {
            walk.along_ear(ear(r), false);
        } else {
            Segment s = piece(r);
            walk.along_base(s.to, s.from);
        }
    }
    return walk.close(g, name);
}

int ear_length_sum(const Vine& v, std::size_t lo, std::size_t hi) {
    int total = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
        total += static_cast<int>(v.ears[i].length());
    }
    return total;
}

int sum_range(const std::vector<int>& values, std::size_t lo, std::size_t hi) {
    int total = 0;
    for (std::size_t i = lo; i <= hi && i < values.size(); ++i) {
        total += values[i];
    }
    return total;
}

void require_j(const SegmentDecomposition& d, std::size_t j) {
    const std::size_t top = (d.m() - 1) / 2;
    if (j < 1 || j > top) {
        throw PreconditionError("j=" + std::to_string(j) + " outside 1.." + std::to_string(top) +
                                " for m=" + std::to_string(d.m()));
    }
}

int slack_of(const SegmentDecomposition& d, int c) {
    const int slack = c - static_cast<int>(d.m()) - 2;
    if (slack < 0) {
        throw InternalError("negative slack: c=" + std::to_string(c) + " < m+2=" + std::to_string(d.m() + 2));
    }
    return slack;
}

} // namespace

SegmentDecomposition decompose(const Path& p, const Vine& v) {
    if (!(v.base == p)) {
        throw PreconditionError("vine is built on a different base path");
    }
    if (auto verdict = verify_vine(v); !verdict.ok()) {
        throw PreconditionError("not a vine: " + verdict.message);
    }
    const std::size_t m = v.m();
    if (m == 1) {
        throw SingleEarVineError();
    }

    SegmentDecomposition d{v, attachment_positions(v, true), attachment_positions(v, false), {}, {}, {}, {}};
    const auto& xs = d.x_pos;
    const auto& ys = d.y_pos;
    for (std::size_t i = 0; i < m; ++i) {
        Segment s = i == 0 ? Segment{xs[0], xs[1]}
                  : i == m - 1 ? Segment{ys[m - 2], ys[m - 1]}
                               : Segment{ys[i - 1], xs[i + 1]};
        d.a_segments.push_back(s);
        d.a.push_back(s.length());
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        Segment s{xs[i + 1], ys[i]};
        d.b_segments.push_back(s);
        d.b.push_back(s.length());
    }

    // A_1 B_1 A_2 ... B_{m-1} A_m must tile P end to end.
    std::size_t at = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (d.a_segments[i].from != at) {
            throw InternalError("segments do not tile the base path");
        }
        at = d.a_segments[i].to;
        if (i + 1 < m) {
            if (d.b_segments[i].from != at) {
                throw InternalError("segments do not tile the base path");
            }
            at = d.b_segments[i].to;
        }
    }
    if (at != p.length()) {
        throw InternalError("segments do not tile the base path");
    }
    return d;
}

Cycle build_q0(const Graph& g, const SegmentDecomposition& d) {
    return weave(g, d.vine, d.x_pos, d.y_pos, 0, d.m() - 1, "Q0");
}

Cycle build_qj(const Graph& g, const SegmentDecomposition& d, std::size_t j) {
    require_j(d, j);
    // Ears L_{j+1}..L_{m-j}; B_j + A_{j+1} and A_{m-j} + B_{m-j} are exactly
    // the outer pieces of that sub-vine.
    return weave(g, d.vine, d.x_pos, d.y_pos, j, d.m() - j - 1, "Qj");
}

Cycle build_qstar(const Graph& g, const SegmentDecomposition& d) {
    if (d.m() % 2 != 0) {
        throw PreconditionError("Q* needs an even m, got m=" + std::to_string(d.m()));
    }
    // B_{k-1} + A_k + B_k is the base segment x_k..y_k (k = m/2).
    const std::size_t k = d.m() / 2 - 1;
    return weave(g, d.vine, d.x_pos, d.y_pos, k, k, "Q*");
}

Cycle single_ear_cycle(const Graph& g, const Vine& v) {
    if (v.m() != 1) {
        throw PreconditionError("single_ear_cycle needs m = 1");
    }
    if (auto verdict = verify_vine(v); !verdict.ok()) {
        throw PreconditionError("not a vine: " + verdict.message);
    }
    return weave(g, v, attachment_positions(v, true), attachment_positions(v, false), 0, 0, "P+L1");
}

int q0_length_formula(const SegmentDecomposition& d) {
    return ear_length_sum(d.vine, 0, d.m() - 1) + std::accumulate(d.a.begin(), d.a.end(), 0);
}

int qj_length_formula(const SegmentDecomposition& d, std::size_t j) {
    require_j(d, j);
    const std::size_t m = d.m();
    // sum_{i=j+1}^{m-j} (l(L_i) + a_i) + b_j + b_{m-j}, shifted to 0-based.
    return ear_length_sum(d.vine, j, m - j - 1) + sum_range(d.a, j, m - j - 1) + d.b[j - 1] + d.b[m - j - 1];
}

int qstar_length_formula(const SegmentDecomposition& d) {
    if (d.m() % 2 != 0) {
        throw PreconditionError("Q* needs an even m, got m=" + std::to_string(d.m()));
    }
    const std::size_t k = d.m() / 2; // 1-based index m/2
    const int b_k = d.b[k - 1];
    const int b_prev = k >= 2 ? d.b[k - 2] : 0; // b_0 = 0
    return b_k + b_prev + d.a[k - 1] + static_cast<int>(d.vine.ears[k - 1].length());
}

Inequality1 check_inequality_1(const SegmentDecomposition& d, int c) {
    const int slack = slack_of(d, c);
    const std::size_t m = d.m();
    Inequality1 out;
    out.lhs = d.a.front() + d.a.back();
    out.rhs = slack + 2 - sum_range(d.a, 1, m - 2);
    return out;
}

Inequality2 check_inequality_2(const SegmentDecomposition& d, int c, std::size_t j) {
    require_j(d, j);
    const int slack = slack_of(d, c);
    const std::size_t m = d.m();
    Inequality2 out;
    out.j = j;
    out.lhs = d.b[j - 1] + d.b[m - j - 1];
    out.weak_rhs = slack + 2 * static_cast<int>(j + 1);
    out.rhs = out.weak_rhs - sum_range(d.a, j, m - j - 1);
    return out;
}

long long circumference_bound_squared(long long l, long long slack, Parity parity) {
    return 4 * l + (slack + 1) * (slack + 1) - (parity == Parity::even ? 1 : 0);
}

double circumference_bound(long long l, long long slack, Parity parity) {
    return std::sqrt(static_cast<double>(circumference_bound_squared(l, slack, parity)));
}

DiracVerdict dirac_check(long long l, long long c) {
    return {c * c > 2 * l, c * c >= 4 * l};
}

namespace {

void check_cycle(std::vector<std::string>& violations, const std::string& name, const Cycle& cycle,
                 int formula, int c) {
    const int actual = static_cast<int>(cycle.length());
    if (actual != formula) {
        violations.push_back(name + " has length " + std::to_string(actual) + " but the formula gives " +
                             std::to_string(formula));
    }
    if (actual > c) {
        violations.push_back(name + " has length " + std::to_string(actual) + " > c=" + std::to_string(c));
    }
}

} // namespace

VineCheck check_vine(const Graph& g, int l, int c, const Vine& vine) {
    VineCheck out;
    out.m = vine.m();
    out.parity = parity_of(out.m);
    auto& violations = out.violations;

    if (auto verdict = verify_vine(vine); !verdict.ok()) {
        violations.push_back("not a vine: " + verdict.message);
        return out;
    }
    out.slack = c - static_cast<int>(out.m) - 2;
    if (out.slack < 0) {
        violations.push_back("c=" + std::to_string(c) + " < m+2=" + std::to_string(out.m + 2));
        return out;
    }

    const long long bound_sq = circumference_bound_squared(l, out.slack, out.parity);
    const long long c_sq = static_cast<long long>(c) * c;
    out.bound_met = c_sq >= bound_sq;
    out.tight = c_sq == bound_sq;
    if (!out.bound_met) {
        violations.push_back("circumference bound violated: c^2=" + std::to_string(c_sq) + " < " +
                             std::to_string(bound_sq));
    }

    if (out.m == 1) {
        Cycle q = single_ear_cycle(g, vine);
        const int formula = static_cast<int>(vine.base.length() + vine.ears[0].length());
        check_cycle(violations, "P+L1", q, formula, c);
        out.q0_len = static_cast<int>(q.length());
        if (c < l + 1) {
            violations.push_back("m=1 but c=" + std::to_string(c) + " < l+1=" + std::to_string(l + 1));
        }
        return out;
    }

    SegmentDecomposition d = decompose(vine.base, vine);
    const std::size_t m = d.m();
    if (d.a.front() < 1 || d.a.back() < 1) {
        violations.push_back("a_1 or a_m is below 1");
    }
    for (std::size_t i = 0; i < d.b.size(); ++i) {
        if (d.b[i] < 1) {
            violations.push_back("b_" + std::to_string(i + 1) + " is below 1");
        }
    }

    Cycle q0 = build_q0(g, d);
    check_cycle(violations, "Q0", q0, q0_length_formula(d), c);
    out.q0_len = static_cast<int>(q0.length());

    out.ineq1 = check_inequality_1(d, c);
    if (!out.ineq1->holds()) {
        violations.push_back("end-segment inequality fails: " + std::to_string(out.ineq1->lhs) + " > " +
                             std::to_string(out.ineq1->rhs));
    }

    for (std::size_t j = 1; j <= (m - 1) / 2; ++j) {
        Cycle qj = build_qj(g, d, j);
        check_cycle(violations, "Q" + std::to_string(j), qj, qj_length_formula(d, j), c);
        out.qj_lens.push_back(static_cast<int>(qj.length()));

        Inequality2 ineq = check_inequality_2(d, c, j);
        if (!ineq.holds() || !ineq.weak_holds()) {
            violations.push_back("inner-segment inequality fails for j=" + std::to_string(j) + ": " +
                                 std::to_string(ineq.lhs) + " > " + std::to_string(ineq.rhs));
        }
        out.ineq2.push_back(ineq);
    }

    if (m % 2 == 0) {
        Cycle qstar = build_qstar(g, d);
        check_cycle(violations, "Q*", qstar, qstar_length_formula(d), c);
        out.qstar_len = static_cast<int>(qstar.length());
        const std::size_t k = m / 2;
        const int pair = d.b[k - 1] + (k >= 2 ? d.b[k - 2] : 0);
        if (pair > out.slack + static_cast<int>(m) + 1) {
            violations.push_back("b_{m/2} + b_{(m-2)/2} = " + std::to_string(pair) + " exceeds y+m+1");
        }
    }
    return out;
}

namespace {

void merge_violations(std::vector<std::string>& into, const std::vector<std::string>& from,
                      const std::string& prefix) {
    for (const auto& v : from) {
        into.push_back(prefix + v);
    }
}

// Vine checks on one longest path. Returns the number of vines examined.
std::size_t check_all_vines(const Graph& g, const Path& path, int l, int c, const AnalyzeOptions& options,
                            BoundReport& report, const std::string& label) {
    VineList list = enumerate_vines(g, path, options.vine_cap, options.ear_cap, options.state_cap);
    report.vines_truncated = report.vines_truncated || list.truncated;
    for (std::size_t i = 0; i < list.vines.size(); ++i) {
        VineCheck check = check_vine(g, l, c, list.vines[i]);
        merge_violations(report.violations, check.violations, label + "vine #" + std::to_string(i + 1) + ": ");
    }
    return list.vines.size();
}

} // namespace

BoundReport analyze(const Graph& g, const AnalyzeOptions& options) {
    if (auto conn = check_two_connectivity(g); !conn.ok()) {
        throw PreconditionError("graph is not 2-connected: " + conn.describe());
    }
    if (g.vertex_count() > kMaxSolverVertices) {
        throw PreconditionError("analysis supports at most " + std::to_string(kMaxSolverVertices) + " vertices");
    }

    BoundReport report;
    report.n = g.vertex_count();
    report.edge_count = g.edge_count();

    PathSolution path = longest_path(g, options.limits);
    report.longest_path = path.path;
    report.l = static_cast<int>(path.path.length());
    std::optional<CycleSolution> cycle;
    try {
        cycle = longest_cycle(g, options.limits);
    } catch (const ResourceLimitError& e) {
        report.uncertified_reason = e.what();
        return report;
    }
    report.longest_cycle = cycle->cycle;
    report.c = static_cast<int>(cycle->cycle.length());
    if (!path.optimal || !cycle->optimal) {
        report.uncertified_reason = !path.optimal ? "longest path search exhausted its budget"
                                                  : "longest cycle search exhausted its budget";
        return report;
    }
    try {
        report.vine = find_min_vine(g, path.path, options.ear_cap, options.state_cap);
    } catch (const ResourceLimitError& e) {
        report.uncertified_reason = e.what();
        return report;
    }
    report.certified = true;

    const int l = report.l;
    const int c = report.c;
    VineCheck main = check_vine(g, l, c, *report.vine);
    report.m = main.m;
    report.slack = main.slack;
    report.parity = main.parity;
    if (main.slack >= 0) {
        report.bound = circumference_bound(l, main.slack, main.parity);
    }
    report.bound_met = main.bound_met;
    report.tight = main.tight;
    report.ineq1 = main.ineq1;
    report.ineq2 = main.ineq2;
    report.q0_len = main.q0_len;
    report.qj_lens = main.qj_lens;
    report.qstar_len = main.qstar_len;
    report.violations = main.violations;

    report.dirac = dirac_check(l, c);
    if (!report.dirac.theorem) {
        report.violations.push_back("Dirac theorem fails: c^2 <= 2l");
    }
    if (!report.dirac.conjecture) {
        report.violations.push_back("Dirac conjecture fails: c^2 < 4l");
    }
    if (report.bound_met && !report.dirac.conjecture) {
        report.violations.push_back("implication circumference bound => Dirac conjecture broken");
    }
    if (report.dirac.conjecture && !report.dirac.theorem) {
        report.violations.push_back("implication Dirac conjecture => Dirac theorem broken");
    }

    report.paths_checked = 1;
    if (options.all_vines) {
        report.vines_checked = check_all_vines(g, path.path, l, c, options, report, "");
    }
    if (options.all_longest_paths) {
        if (g.vertex_count() > 10) {
            throw PreconditionError("checking every longest path is limited to n <= 10");
        }
        auto paths = enumerate_paths_of_length(g, static_cast<std::size_t>(l), static_cast<std::size_t>(-1));
        report.paths_checked = paths.size();
        for (std::size_t i = 0; i < paths.size(); ++i) {
            if (paths[i] == path.path) {
                continue;
            }
            const std::string label = "path #" + std::to_string(i + 1) + ": ";
            Vine vine = find_min_vine(g, paths[i], options.ear_cap, options.state_cap);
            merge_violations(report.violations, check_vine(g, l, c, vine).violations, label + "min vine: ");
            if (options.all_vines) {
                report.vines_checked += check_all_vines(g, paths[i], l, c, options, report, label);
            }
        }
    }
    return report;
}

} // namespace vinebound
