#include "support/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace symqe::testing {

Rational euclidean_resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (b.degree() == 0) {
    Rational out = 1;
    for (int i = 0; i < a.degree(); ++i) out *= b.leading();
    return out;
  }
  if (a.degree() < b.degree()) {
    const Rational swapped = euclidean_resultant(b, a);
    return (a.degree() * b.degree()) % 2 == 0 ? swapped : Rational(-swapped);
  }
  const Polynomial r = divmod(a, b).second;
  if (r.is_zero()) return 0;
  Rational factor = 1;
  for (int i = 0; i < a.degree() - r.degree(); ++i) factor *= b.leading();
  if ((a.degree() * b.degree()) % 2 != 0) factor = -factor;
  return factor * euclidean_resultant(b, r);
}

bool squaring_sign(const Rational& u, const Rational& v, const Rational& delta) {
  if (delta < 0) throw std::domain_error("negative delta");
  const Rational vv = v * v * delta;  // (v sqrt(delta))^2
  if (u >= 0 && v >= 0) return true;
  if (u < 0 && v <= 0) return false;
  if (u >= 0) return u * u >= vv;  // v < 0: need u >= |v| sqrt(delta)
  return vv >= u * u;              // u < 0 < v: need v sqrt(delta) >= |u|
}

double taylor_mismatch(const RestrictionCoeffs& rc, const Rational& P, const Rational& Q, bool plus_branch) {
  constexpr mp_bitcnt_t kBits = 512;
  auto to_f = [](const Rational& q) {
    mpf_class out(0, kBits);
    out = q;
    return out;
  };
  mpf_class root_delta(0, kBits);
  root_delta = sqrt(to_f(rc.Delta));
  const mpf_class signed_root = plus_branch ? mpf_class(root_delta, kBits) : mpf_class(-root_delta, kBits);
  mpf_class theta(0, kBits);
  theta = (-to_f(rc.beta) + signed_root) / (2 * to_f(rc.alpha));

  mpf_class value(0, kBits);
  for (const Rational& c : rc.quartic_coeffs()) value = value * theta + to_f(c);
  const mpf_class alpha = to_f(rc.alpha);
  mpf_class lhs(0, kBits);
  lhs = 2 * alpha * alpha * alpha * alpha * value;
  mpf_class rhs(0, kBits);
  rhs = to_f(P) + signed_root * to_f(Q);

  mpf_class scale(0, kBits);
  scale = abs(to_f(P)) + abs(signed_root * to_f(Q)) + 1;
  mpf_class diff(0, kBits);
  diff = abs(lhs - rhs) / scale;
  return diff.get_d();
}

}  // namespace symqe::testing
