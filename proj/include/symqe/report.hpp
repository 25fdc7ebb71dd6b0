#pragma once

#include <string>

#include "json.hpp"
#include "symqe/verdict.hpp"

namespace symqe {

// "0 <= f, true" or "0 <= f, false" (no newline).
std::string decision_line(bool decision);

// "witness: (x1, ..., xn) value: v"
std::string witness_line(const Witness& witness);

// One line per check:
//   k=<k> value=<v>
//   (1,-1) value=<v> branch=<name>
//   (r,s)=(r,s) alpha=.. beta=.. gamma=.. Delta=.. [P=.. Q=.. R=..] branch=<name>
//   r=<r> Delta=.. G=.. H=.. K=.. branch=<name>
std::string trace_line(const TraceRecord& record);

nlohmann::json trace_json(const TraceRecord& record);
nlohmann::json witness_json(const Witness& witness);

// {"decision", "witness"?, "trace"?, "timing_ms"}; rationals are strings.
nlohmann::json verdict_json(const Verdict& verdict, double timing_ms, bool with_witness, bool with_trace);

}  // namespace symqe
