#pragma once

#include <array>
#include <span>
#include <vector>

#include "symqe/polynomial.hpp"
#include "symqe/rational.hpp"

namespace symqe {

// f = a P4 + b P3 P1 + c P2^2 + d P2 P1^2 + e P1^4 in n >= 2 variables,
// where Pk is the k-th power sum.
class SymmetricQuartic {
 public:
  SymmetricQuartic(long n, Rational a, Rational b, Rational c, Rational d, Rational e);
  SymmetricQuartic(long n, std::span<const Rational, 5> coeffs);

  long n() const { return n_; }
  const std::array<Rational, 5>& coefficients() const { return coeffs_; }
  const Rational& a() const { return coeffs_[0]; }
  const Rational& b() const { return coeffs_[1]; }
  const Rational& c() const { return coeffs_[2]; }
  const Rational& d() const { return coeffs_[3]; }
  const Rational& e() const { return coeffs_[4]; }

 private:
  long n_;
  std::array<Rational, 5> coeffs_;
};

// f = alpha M4 + beta M31 + gamma M22 + delta M211 + epsilon M1111 in the
// monomial symmetric basis; coefficients stored in that order.
struct MonomialQuartic {
  long n = 2;
  std::array<Rational, 5> coeffs;
};

// f = a3 P3 + a21 P2 P1 + a111 P1^3.
class SymmetricCubic {
 public:
  SymmetricCubic(long n, Rational a3, Rational a21, Rational a111);

  long n() const { return n_; }
  const Rational& a3() const { return a3_; }
  const Rational& a21() const { return a21_; }
  const Rational& a111() const { return a111_; }

 private:
  long n_;
  Rational a3_, a21_, a111_;
};

// Coefficients of the restriction t -> f(t 1_r, 1_s, 0_{n-r-s}) and of the
// quadratic (df/dx_1 - df/dx_{r+1}) / (t - 1) along it.
struct RestrictionCoeffs {
  long r = 0;
  long s = 0;
  Rational A, B, C, D, E;
  Rational alpha, beta, gamma;
  Rational Delta;  // beta^2 - 4 alpha gamma

  std::array<Rational, 5> quartic_coeffs() const { return {A, B, C, D, E}; }
  std::array<Rational, 3> quadratic_coeffs() const { return {alpha, beta, gamma}; }
  Polynomial quartic() const { return Polynomial{E, D, C, B, A}; }
  Polynomial quadratic() const { return Polynomial{gamma, beta, alpha}; }
};

SymmetricQuartic from_monomial(const MonomialQuartic& m);
MonomialQuartic to_monomial(const SymmetricQuartic& f);

// Exact value at a point of length n; throws std::invalid_argument otherwise.
Rational eval_point(const SymmetricQuartic& f, std::span<const Rational> x);

// f(1_k, 0_{n-k}) = k (a + (b + c) k + d k^2 + e k^3), for 1 <= k <= n.
// Throws std::out_of_range for other k.
Rational eval_ones(const SymmetricQuartic& f, long k);

// f(1, -1, 0_{n-2}) = 2 (a + 2c).
Rational eval_one_minus_one(const SymmetricQuartic& f);

// Requires r, s >= 1 and r + s <= n; throws std::invalid_argument otherwise.
RestrictionCoeffs restriction(const SymmetricQuartic& f, long r, long s);

// The point (t 1_r, 1_s, 0_{n-r-s}).
std::vector<Rational> block_point(long n, const Rational& t, long r, long s);

}  // namespace symqe
