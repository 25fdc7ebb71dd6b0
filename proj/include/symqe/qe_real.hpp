#pragma once

#include <span>

#include "symqe/symquartic.hpp"
#include "symqe/verdict.hpp"

namespace symqe {

// Delta (discriminant of F' up to a positive factor), G, H and K of the
// quartic F = A t^4 + B t^3 + C t^2 + D t + E. All four are polynomial in
// the coefficients and stay defined when A = 0. K is the 7x7 determinant.
RealDiscriminants compute_dghk(std::span<const Rational, 5> quartic);

// K >= 0 > Delta, or G, H, K >= 0.
RealBranch classify_real(const RealDiscriminants& disc);

// F >= 0 on the whole real line, for A > 0. Throws std::domain_error
// otherwise.
bool quartic_nonneg_real(std::span<const Rational, 5> quartic);

// Linear-time decision of f >= 0 on R^n.
RealVerdict decide_real(const SymmetricQuartic& f, const DecideOptions& options = {});

}  // namespace symqe
