#ifndef VINEBOUND_REPORT_HPP
#define VINEBOUND_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "vinebound/extremal.hpp"
#include "vinebound/theorem.hpp"

namespace vinebound::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Bound value for display: the exact integer when 4l + (y+1)^2 [- 1] is a
// perfect square, otherwise six decimals.
std::string format_bound(const BoundReport& r);

// "l=6 c=5 m=3 y=0 bound=5 TIGHT" and variants.
std::string summary_line(const BoundReport& r);

Json vertices_json(std::span<const Vertex> vs);
Json vine_json(const Vine& v);
Json instance_json(const Graph& g, const std::string& source);

// {l, c, m, slack, parity, bound, bound_met, tight, ineq1, ineq2[], q0_len,
//  qj_lens[], qstar_len?, dirac{...}, ...}
Json results_json(const BoundReport& r);
// {longest_path[], longest_cycle[], vine{ears[]}}
Json witnesses_json(const BoundReport& r);

Json analyze_document(const std::vector<std::string>& command, const std::string& source, const Graph& g,
                      const BoundReport& r);
Json extremal_document(const std::vector<std::string>& command, const ExtremalInstance& inst,
                       const BoundReport* verification);
Json fuzz_document(const std::vector<std::string>& command, const FuzzReport& fr, bool with_timing);
Json oracle_document(const std::vector<std::string>& command, const std::vector<OracleCase>& cases);

// Comment block appended to an extremal graph file.
std::string extremal_certificate(const ExtremalInstance& inst);

} // namespace vinebound::report

#endif // VINEBOUND_REPORT_HPP
