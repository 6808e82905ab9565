#ifndef VINEBOUND_THEOREM_HPP
#define VINEBOUND_THEOREM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vinebound/graph.hpp"
#include "vinebound/solver.hpp"
#include "vinebound/vine.hpp"

namespace vinebound {

enum class Parity { odd, even };

inline Parity parity_of(std::size_t m) { return m % 2 == 1 ? Parity::odd : Parity::even; }
inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

// Subpath of the base path between two positions, from <= to.
struct Segment {
    std::size_t from;
    std::size_t to;
    int length() const { return static_cast<int>(to - from); }
};

// Tiling of P = A_1 B_1 A_2 B_2 ... B_{m-1} A_m induced by a vine with m >= 2:
//   A_1 = x_1..x_2,  A_m = y_{m-1}..y_m,  A_i = y_{i-1}..x_{i+1},  B_i = x_{i+1}..y_i.
// Vectors are 0-based: a[0] is a_1, b[0] is b_1.
struct SegmentDecomposition {
    Vine vine;
    std::vector<std::size_t> x_pos; // position of x_i on P
    std::vector<std::size_t> y_pos;
    std::vector<Segment> a_segments; // m entries
    std::vector<Segment> b_segments; // m - 1 entries
    std::vector<int> a;
    std::vector<int> b;

    std::size_t m() const { return vine.m(); }
    const Path& base() const { return vine.base; }
};

// decompose() refuses m = 1 with this error; use single_ear_cycle instead.
class SingleEarVineError : public PreconditionError {
public:
    SingleEarVineError()
        : PreconditionError("a vine with m = 1 has no segment decomposition; use the single-ear pathway") {}
};

// Requires a verified vine on p with m >= 2.
SegmentDecomposition decompose(const Path& p, const Vine& v);

// Q_0 = union of (A_i + L_i), i = 1..m.
Cycle build_q0(const Graph& g, const SegmentDecomposition& d);
// Q_j = union of (A_i + L_i), i = j+1..m-j, plus B_j and B_{m-j}. 1 <= j <= (m-1)/2.
Cycle build_qj(const Graph& g, const SegmentDecomposition& d, std::size_t j);
// Q* = B_{m/2} + B_{(m-2)/2} + A_{m/2} + L_{m/2} for even m, with B_0 the
// empty segment at x_1.
Cycle build_qstar(const Graph& g, const SegmentDecomposition& d);
// P + L_1 for a single-ear vine.
Cycle single_ear_cycle(const Graph& g, const Vine& v);

// Closed-form lengths, computed from a, b and ear lengths only.
int q0_length_formula(const SegmentDecomposition& d);
int qj_length_formula(const SegmentDecomposition& d, std::size_t j);
int qstar_length_formula(const SegmentDecomposition& d);

// a_1 + a_m <= y + 2 - sum_{i=2}^{m-1} a_i, with y = c - m - 2.
struct Inequality1 {
    int lhs = 0;
    int rhs = 0;
    bool holds() const { return lhs <= rhs; }
    bool tight() const { return lhs == rhs; }
};

// b_j + b_{m-j} <= y + 2(j+1) - sum_{i=j+1}^{m-j} a_i, and the weaker form
// without the sum.
struct Inequality2 {
    std::size_t j = 0;
    int lhs = 0;
    int rhs = 0;
    int weak_rhs = 0;
    bool holds() const { return lhs <= rhs; }
    bool weak_holds() const { return lhs <= weak_rhs; }
    bool tight() const { return lhs == rhs; }
};

// Both throw InternalError when c < m + 2 (negative slack).
Inequality1 check_inequality_1(const SegmentDecomposition& d, int c);
Inequality2 check_inequality_2(const SegmentDecomposition& d, int c, std::size_t j);

// 4l + (slack+1)^2, minus 1 for even m. The bound is its square root.
long long circumference_bound_squared(long long l, long long slack, Parity parity);
double circumference_bound(long long l, long long slack, Parity parity);

struct DiracVerdict {
    bool theorem = false;    // c^2 > 2l
    bool conjecture = false; // c^2 >= 4l
};
DiracVerdict dirac_check(long long l, long long c);

// Everything that can be checked for one vine on a longest path, given the
// certified l and c.
struct VineCheck {
    std::size_t m = 0;
    int slack = 0;
    Parity parity = Parity::odd;
    bool bound_met = false; // c^2 >= bound^2
    bool tight = false;    // c^2 == bound^2
    std::optional<Inequality1> ineq1;
    std::vector<Inequality2> ineq2;
    int q0_len = 0; // for m = 1, the length of P + L_1
    std::vector<int> qj_lens;
    std::optional<int> qstar_len;
    std::vector<std::string> violations;
};
VineCheck check_vine(const Graph& g, int l, int c, const Vine& vine);

struct AnalyzeOptions {
    SolveLimits limits;
    bool all_vines = false;         // also check every vine on the longest path
    std::size_t vine_cap = 200;     // vines per path when all_vines is set
    bool all_longest_paths = false; // repeat for every longest path (n <= 10)
    std::size_t ear_cap = kDefaultEarCap;
    std::size_t state_cap = kDefaultVineStateCap;
};

struct BoundReport {
    int n = 0;
    std::size_t edge_count = 0;
    bool certified = false;
    std::string uncertified_reason;

    int l = 0;
    int c = 0;
    std::size_t m = 0;
    int slack = 0;
    Parity parity = Parity::odd;
    std::optional<double> bound; // absent when the slack is negative
    bool bound_met = false;
    bool tight = false;
    std::optional<Inequality1> ineq1;
    std::vector<Inequality2> ineq2;
    int q0_len = 0;
    std::vector<int> qj_lens;
    std::optional<int> qstar_len;
    DiracVerdict dirac;

    std::optional<Path> longest_path;
    std::optional<Cycle> longest_cycle;
    std::optional<Vine> vine;

    std::size_t vines_checked = 0;
    bool vines_truncated = false;
    std::size_t paths_checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return certified && violations.empty(); }
};

// Solves l and c exactly, finds the minimum vine on the canonical longest
// path and runs every check on it. A solver budget overrun yields a report
// with certified = false and no theorem verdicts.
// Throws PreconditionError when g is not 2-connected.
BoundReport analyze(const Graph& g, const AnalyzeOptions& options = {});

} // namespace vinebound

#endif // VINEBOUND_THEOREM_HPP
