#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symqe/symquartic.hpp"
#include "symqe/verdict.hpp"

namespace symqe::oracle {

// Ordered tuple of positive parts.
using Composition = std::vector<long>;

enum class SumMode {
  exact,    // parts sum to q
  at_most,  // parts sum to at most q
};

// All compositions with `parts` positive entries, in lexicographic order.
// Counts: C(q-1, parts-1) for exact sums, C(q, parts) for at-most sums.
std::vector<Composition> enumerate_compositions(long parts, long q, SumMode mode);

// Quadratic-time reference: every two-block restriction checked for
// nonnegativity on [0, inf) with Sturm sequences, plus f(1_r, 0) >= 0.
bool decide_orthant_reference(const SymmetricQuartic& f);

// Reference for R^n: t -> f(t 1_r, 1_{n-r}) >= 0 on R for r <= n/2.
bool decide_real_reference(const SymmetricQuartic& f);

// Exact evaluation at seeded pseudorandom rational points. Returns the
// first point found with f < 0.
std::optional<Witness> sample_falsify(const SymmetricQuartic& f, Domain domain, long trials, std::uint64_t seed);

// e_1(u), ..., e_m(u).
std::vector<Rational> elementary_symmetric(std::span<const Rational> u);

// True iff every e_k(u) >= 0, which happens exactly when every u_i >= 0.
bool elementary_symmetric_nonneg(std::span<const Rational> u);

}  // namespace symqe::oracle
