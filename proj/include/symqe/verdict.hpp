#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "symqe/rational.hpp"

namespace symqe {

enum class Domain { orthant, real };

struct PqrTriple {
  Rational P, Q, R;
};

struct RealDiscriminants {
  Rational Delta, G, H, K;
};

// How a pair check of the orthant procedure was settled.
enum class PairBranch {
  alpha_zero,        // gate: alpha = 0, condition not required
  complex_roots,     // gate: Delta < 0
  beta_zero,         // shortcut: beta = 0
  coeffs_nonneg,     // shortcut: alpha, beta, gamma >= 0
  coeffs_nonpos,     // shortcut: alpha, beta, gamma <= 0
  p_r_nonneg,        // shortcut: P >= 0 and R >= 0
  discriminants,     // both sign lines hold
  failed,            // a sign line fails
};

enum class RealBranch {
  complex_critical,  // K >= 0 > Delta
  critical_nonneg,   // G, H, K >= 0
  failed,
};

std::string_view to_string(PairBranch branch);
std::string_view to_string(RealBranch branch);
std::string_view to_string(Domain domain);

struct OnesCheck {
  long k = 0;
  Rational value;
  bool passed = true;
};

// f(1, -1, 0_{n-2}) <= 0 settles the orthant question once the ones-checks pass.
struct OneMinusOneCheck {
  Rational value;
  bool decisive = false;
};

struct PairCheck {
  long r = 0;
  long s = 0;
  Rational alpha, beta, gamma, Delta;
  std::optional<PqrTriple> pqr;
  PairBranch branch = PairBranch::failed;
  bool passed = false;
};

struct SplitCheck {
  long r = 0;
  std::array<Rational, 5> coeffs;  // A..E of t -> f(t 1_r, 1_{n-r})
  RealDiscriminants disc;
  RealBranch branch = RealBranch::failed;
  bool passed = false;
};

using TraceRecord = std::variant<OnesCheck, OneMinusOneCheck, PairCheck, SplitCheck>;

struct OnesFailure {
  long k = 0;
};
struct PairFailure {
  long r = 0;
  long s = 0;
};
struct SplitFailure {
  long r = 0;
};
using FailingStage = std::variant<OnesFailure, PairFailure, SplitFailure>;

struct Witness {
  std::vector<Rational> point;
  Rational value;  // f(point) < 0
};

struct Verdict {
  bool decision = true;
  std::optional<FailingStage> failing_stage;
  std::optional<Witness> witness;
  std::vector<TraceRecord> trace;  // filled only when requested
};

using OrthantVerdict = Verdict;
using RealVerdict = Verdict;

struct DecideOptions {
  bool trace = false;
  // Evaluate the pair checks on several threads; the reported failure is
  // still the first one in the deterministic order.
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
  // Check (s, r) wherever the order lists (r, s).
  bool swap_pairs = false;
};

}  // namespace symqe
