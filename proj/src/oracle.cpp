#include "symqe/oracle.hpp"

#include <random>
#include <stdexcept>

#include "symqe/sturm.hpp"

namespace symqe::oracle {
namespace {

void extend(std::vector<Composition>& out, Composition& prefix, long parts, long budget, SumMode mode) {
  const long remaining = parts - static_cast<long>(prefix.size());
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  if (remaining == 1 && mode == SumMode::exact) {
    if (budget >= 1) {
      prefix.push_back(budget);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // Leave room for at least one unit in each later part.
  for (long part = 1; part <= budget - (remaining - 1); ++part) {
    prefix.push_back(part);
    extend(out, prefix, parts, budget - part, mode);
    prefix.pop_back();
  }
}

Rational random_rational(std::mt19937_64& rng, long min_num, long max_num) {
  std::uniform_int_distribution<long> num(min_num, max_num);
  std::uniform_int_distribution<long> den(1, 10);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

std::vector<Composition> enumerate_compositions(long parts, long q, SumMode mode) {
  if (parts < 1 || q < 1) throw std::invalid_argument("enumerate_compositions: parts and q must be positive");
  std::vector<Composition> out;
  Composition prefix;
  prefix.reserve(static_cast<std::size_t>(parts));
  extend(out, prefix, parts, q, mode);
  return out;
}

bool decide_orthant_reference(const SymmetricQuartic& f) {
  for (long r = 1; r <= f.n(); ++r) {
    if (eval_ones(f, r) < 0) return false;
  }
  // Homogeneity: f(u 1_r, v 1_s, 0) >= 0 on the closed quadrant iff
  // t -> f(t 1_r, 1_s, 0) >= 0 on [0, inf) and f(1_r, 0) >= 0.
  for (const auto& pair : enumerate_compositions(2, f.n(), SumMode::at_most)) {
    const RestrictionCoeffs rc = restriction(f, pair[0], pair[1]);
    if (!nonneg_on(rc.quartic(), Interval::closed_ray(0))) return false;
  }
  return true;
}

bool decide_real_reference(const SymmetricQuartic& f) {
  // Permuting the blocks maps r to n - r, so r <= n/2 suffices. A negative
  // leading coefficient f(1_r, 0) shows up as F -> -inf.
  for (const auto& pair : enumerate_compositions(2, f.n(), SumMode::exact)) {
    if (pair[0] > pair[1]) continue;
    const RestrictionCoeffs rc = restriction(f, pair[0], pair[1]);
    if (!nonneg_on(rc.quartic(), Interval::real_line())) return false;
  }
  return true;
}

std::optional<Witness> sample_falsify(const SymmetricQuartic& f, Domain domain, long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("sample_falsify: trials must be positive");
  std::mt19937_64 rng(seed);
  const long n = f.n();
  const long lowest = domain == Domain::orthant ? 0 : -20;
  std::vector<Rational> x(static_cast<std::size_t>(n));

  for (long trial = 0; trial < trials; ++trial) {
    if (trial % 2 == 0) {
      for (auto& xi : x) xi = random_rational(rng, lowest, 20);
    } else {
      // Two-block points (t 1_r, 1_s, 0): where minima of symmetric quartics live.
      std::uniform_int_distribution<long> pick_r(1, n - 1);
      const long r = pick_r(rng);
      long s = n - r;
      if (domain == Domain::orthant) s = std::uniform_int_distribution<long>(1, n - r)(rng);
      x = block_point(n, random_rational(rng, lowest, 20), r, s);
    }
    Rational value = eval_point(f, x);
    if (value < 0) return Witness{x, value};
  }
  return std::nullopt;
}

std::vector<Rational> elementary_symmetric(std::span<const Rational> u) {
  std::vector<Rational> e(u.size() + 1, Rational(0));
  e[0] = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += u[i] * e[k - 1];
  }
  e.erase(e.begin());
  return e;
}

bool elementary_symmetric_nonneg(std::span<const Rational> u) {
  if (u.empty()) throw std::invalid_argument("elementary_symmetric_nonneg: empty tuple");
  for (const auto& ek : elementary_symmetric(u)) {
    if (ek < 0) return false;
  }
  return true;
}

}  // namespace symqe::oracle
