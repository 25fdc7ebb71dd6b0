#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "symqe/rational.hpp"

namespace symqe {

// Univariate polynomial over exact rationals. coeff(i) is the coefficient
// of t^i; trailing zeros are stripped so the zero polynomial has no
// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  // Coefficients listed from the leading term down, e.g. {A, B, C, D, E}
  // for A t^4 + B t^3 + C t^2 + D t + E.
  static Polynomial from_descending(std::span<const Rational> descending);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& k, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Rational eval_poly(const Polynomial& p, const Rational& t);
Polynomial derivative(const Polynomial& p);

// Euclidean division; throws std::domain_error when divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), made monic. Requires p != 0.
Polynomial square_free_part(const Polynomial& p);

// Yun's decomposition: p = leading(p) * prod_i factors[i]^(i+1) with each
// factor monic, square-free and pairwise coprime. Requires p != 0.
std::vector<Polynomial> square_free_decomposition(const Polynomial& p);

// 1 + max |c_i / c_lead|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p);

// Sign of p(t) as t -> +inf (towards_positive) or t -> -inf.
int sign_at_infinity(const Polynomial& p, bool towards_positive);

}  // namespace symqe
