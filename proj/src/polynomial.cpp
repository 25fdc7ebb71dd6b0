#include "symqe/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace symqe {
namespace {
const Rational kZero = 0;
}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { normalize(); }

Polynomial Polynomial::from_descending(std::span<const Rational> descending) {
  return Polynomial(std::vector<Rational>(descending.rbegin(), descending.rend()));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const { return is_zero() ? kZero : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational lead = leading();
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c /= lead;
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < lhs.coeffs_.size()) out[i] += lhs.coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] += rhs.coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) { return lhs + (-rhs); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& k, const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& c : out) c *= k;
  return Polynomial(std::move(out));
}

Rational eval_poly(const Polynomial& p, const Rational& t) { return p(t); }

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coeff(i) * i;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(dividend.coefficients());
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial{}, dividend};

  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational& lead = divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
  if (p.degree() == 0) return Polynomial{Rational(1)};
  return divmod(p, gcd(p, derivative(p))).first.monic();
}

std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<Polynomial> factors;
  const Polynomial monic_p = p.monic();
  if (monic_p.degree() == 0) return factors;

  const Polynomial dp = derivative(monic_p);
  Polynomial a = gcd(monic_p, dp);
  Polynomial b = divmod(monic_p, a).first;
  Polynomial c = divmod(dp, a).first;
  Polynomial d = c - derivative(b);
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    factors.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - derivative(b);
  }
  return factors;
}

Rational cauchy_bound(const Polynomial& p) {
  Rational worst = 0;
  if (p.degree() < 1) return 1;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p.coeff(i)) / lead;
    if (ratio > worst) worst = ratio;
  }
  return worst + 1;
}

int sign_at_infinity(const Polynomial& p, bool towards_positive) {
  const int lead = sgn(p.leading());
  if (towards_positive || p.degree() % 2 == 0) return lead;
  return -lead;
}

}  // namespace symqe
