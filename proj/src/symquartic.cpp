#include "symqe/symquartic.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace symqe {
namespace {

void require_variables(long n) {
  if (n < 2) throw std::invalid_argument("symmetric forms need n >= 2 variables, got " + std::to_string(n));
}

}  // namespace

SymmetricQuartic::SymmetricQuartic(long n, Rational a, Rational b, Rational c, Rational d, Rational e)
    : n_(n), coeffs_{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e)} {
  require_variables(n);
}

SymmetricQuartic::SymmetricQuartic(long n, std::span<const Rational, 5> coeffs)
    : SymmetricQuartic(n, coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]) {}

SymmetricCubic::SymmetricCubic(long n, Rational a3, Rational a21, Rational a111)
    : n_(n), a3_(std::move(a3)), a21_(std::move(a21)), a111_(std::move(a111)) {
  require_variables(n);
}

SymmetricQuartic from_monomial(const MonomialQuartic& m) {
  const auto& [al, be, ga, de, ep] = m.coeffs;
  const Rational half(1, 2), third(1, 3), quarter(1, 4), eighth(1, 8), twentyfourth(1, 24);
  return SymmetricQuartic(m.n,
                          al - be - half * ga + de - quarter * ep,
                          be - de + third * ep,
                          half * ga - half * de + eighth * ep,
                          half * de - quarter * ep,
                          twentyfourth * ep);
}

MonomialQuartic to_monomial(const SymmetricQuartic& f) {
  // Coefficients of x1^4, x1^3 x2, x1^2 x2^2, x1^2 x2 x3, x1 x2 x3 x4 in the
  // power-sum expansion.
  const auto& [a, b, c, d, e] = f.coefficients();
  return MonomialQuartic{f.n(),
                         {a + b + c + d + e, b + 2 * d + 4 * e, 2 * c + 2 * d + 6 * e, 2 * d + 12 * e, 24 * e}};
}

Rational eval_point(const SymmetricQuartic& f, std::span<const Rational> x) {
  if (static_cast<long>(x.size()) != f.n()) {
    throw std::invalid_argument("eval_point: expected " + std::to_string(f.n()) + " coordinates, got " +
                                std::to_string(x.size()));
  }
  Rational p1 = 0, p2 = 0, p3 = 0, p4 = 0;
  Rational sq;
  for (const auto& xi : x) {
    sq = xi * xi;
    p1 += xi;
    p2 += sq;
    p3 += sq * xi;
    p4 += sq * sq;
  }
  const Rational p1sq = p1 * p1;
  return f.a() * p4 + f.b() * p3 * p1 + f.c() * p2 * p2 + f.d() * p2 * p1sq + f.e() * p1sq * p1sq;
}

Rational eval_ones(const SymmetricQuartic& f, long k) {
  if (k < 1 || k > f.n()) {
    throw std::out_of_range("eval_ones: k must lie in [1, " + std::to_string(f.n()) + "], got " + std::to_string(k));
  }
  const Rational kk = k;
  return kk * (f.a() + (f.b() + f.c()) * kk + f.d() * kk * kk + f.e() * kk * kk * kk);
}

Rational eval_one_minus_one(const SymmetricQuartic& f) { return 2 * (f.a() + 2 * f.c()); }

RestrictionCoeffs restriction(const SymmetricQuartic& f, long r, long s) {
  if (r < 1 || s < 1 || r + s > f.n()) {
    throw std::invalid_argument("restriction: need r, s >= 1 and r + s <= n (r=" + std::to_string(r) +
                                ", s=" + std::to_string(s) + ", n=" + std::to_string(f.n()) + ")");
  }
  const auto& [a, b, c, d, e] = f.coefficients();
  const Rational R = r;
  const Rational S = s;
  const Rational rs = R * S;

  RestrictionCoeffs out;
  out.r = r;
  out.s = s;
  out.A = R * (a + (b + c) * R + d * R * R + e * R * R * R);
  out.B = rs * (b + 2 * d * R + 4 * e * R * R);
  out.C = rs * (2 * c + d * (R + S) + 6 * e * rs);
  out.D = rs * (b + 2 * d * S + 4 * e * S * S);
  out.E = S * (a + (b + c) * S + d * S * S + e * S * S * S);

  const Rational a4 = 4 * a;
  const Rational b3c4 = 3 * b + 4 * c;
  out.alpha = a4 + b3c4 * R + 2 * d * R * R;
  out.beta = a4 + 3 * b * (R + S) + 4 * d * rs;
  out.gamma = a4 + b3c4 * S + 2 * d * S * S;
  out.Delta = out.beta * out.beta - 4 * out.alpha * out.gamma;
  return out;
}

std::vector<Rational> block_point(long n, const Rational& t, long r, long s) {
  if (r < 0 || s < 0 || r + s > n) throw std::invalid_argument("block_point: blocks exceed n");
  std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
  for (long i = 0; i < r; ++i) x[static_cast<std::size_t>(i)] = t;
  for (long i = r; i < r + s; ++i) x[static_cast<std::size_t>(i)] = 1;
  return x;
}

}  // namespace symqe
