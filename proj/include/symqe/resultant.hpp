#pragma once

#include <array>
#include <span>
#include <vector>

#include "symqe/polynomial.hpp"
#include "symqe/rational.hpp"

namespace symqe {

using Matrix = std::vector<std::vector<Rational>>;

// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(Matrix m);

// 6x6 Sylvester-type determinant of the quartic A t^4 + ... + E and the
// quadratic alpha t^2 + beta t + gamma (two quartic rows, four quadratic
// rows). Leading zeros are allowed; the matrix is evaluated as written.
Rational resultant_quartic_quadratic(std::span<const Rational, 5> quartic, std::span<const Rational, 3> quadratic);
Rational resultant_quartic_quadratic(const Polynomial& quartic, const Polynomial& quadratic);

// 7x7 determinant equal to R(F, F') / A for F = A t^4 + ... + E. The first
// column is (1, 0, 0, 4, 0, 0, 0), so it stays defined when A = 0.
Rational det_k(std::span<const Rational, 5> quartic);
Rational det_k(const Polynomial& quartic);

// u + v * sqrt(delta) >= 0 without radicals, from
//   u, v >= 0  or  rho, u >= 0  or  rho <= 0 <= v,   rho = u^2 - v^2 delta.
// Throws std::domain_error when delta < 0.
bool sign_u_plus_v_sqrt(const Rational& u, const Rational& v, const Rational& delta);

// Descending coefficients {A, B, C, D, E} of a polynomial of degree <= 4.
std::array<Rational, 5> quartic_coefficients(const Polynomial& p);

}  // namespace symqe
