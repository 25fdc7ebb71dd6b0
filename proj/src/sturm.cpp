#include "symqe/sturm.hpp"

#include <stdexcept>

namespace symqe {
namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// leading(p) times the product of the odd-multiplicity square-free factors:
// it has the sign of p wherever p does not vanish, and only simple roots.
Polynomial sign_part(const Polynomial& p) {
  const auto factors = square_free_decomposition(p);
  Polynomial h{p.leading()};
  for (std::size_t i = 0; i < factors.size(); i += 2) h = h * factors[i];
  return h;
}

// Some point in the interior of a non-degenerate interval.
Rational interior_sample(const Interval& iv) {
  if (iv.lower.is_finite() && iv.upper.is_finite()) return (*iv.lower.value + *iv.upper.value) / 2;
  if (iv.lower.is_finite()) return *iv.lower.value + 1;
  if (iv.upper.is_finite()) return *iv.upper.value - 1;
  return 0;
}

}  // namespace

bool Interval::is_empty() const {
  if (!lower.is_finite() || !upper.is_finite()) return false;
  if (*lower.value > *upper.value) return true;
  return *lower.value == *upper.value && !(lower.closed && upper.closed);
}

bool Interval::is_point() const {
  return lower.is_finite() && upper.is_finite() && *lower.value == *upper.value && lower.closed && upper.closed;
}

bool Interval::contains(const Rational& t) const {
  if (lower.is_finite()) {
    if (t < *lower.value || (t == *lower.value && !lower.closed)) return false;
  }
  if (upper.is_finite()) {
    if (t > *upper.value || (t == *upper.value && !upper.closed)) return false;
  }
  return true;
}

SturmChain::SturmChain(const Polynomial& square_free) {
  if (square_free.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(square_free);
  Polynomial next = derivative(square_free);
  while (!next.is_zero()) {
    chain_.push_back(next);
    Polynomial rem = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    next = -rem;
  }
}

int SturmChain::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sgn(p(t)));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool towards_positive) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at_infinity(p, towards_positive));
  return count_variations(signs);
}

int SturmChain::variations_at_bound(const Bound& b, bool is_upper) const {
  return b.is_finite() ? variations_at(*b.value) : variations_at_infinity(is_upper);
}

std::size_t SturmChain::count_open(const Bound& lower, const Bound& upper) const {
  // V(a) - V(b) counts the distinct roots in (a, b].
  int count = variations_at_bound(lower, false) - variations_at_bound(upper, true);
  if (upper.is_finite() && base()(*upper.value) == 0) --count;
  return count > 0 ? static_cast<std::size_t>(count) : 0;
}

std::size_t sturm_count(const Polynomial& p, const Interval& iv) {
  if (p.is_zero()) throw std::domain_error("sturm_count of the zero polynomial");
  if (iv.is_empty()) return 0;
  const Polynomial q = square_free_part(p);
  if (iv.is_point()) return q(*iv.lower.value) == 0 ? 1 : 0;

  const SturmChain chain(q);
  std::size_t count = chain.count_open(iv.lower, iv.upper);
  if (iv.lower.is_finite() && iv.lower.closed && q(*iv.lower.value) == 0) ++count;
  if (iv.upper.is_finite() && iv.upper.closed && q(*iv.upper.value) == 0) ++count;
  return count;
}

bool nonneg_on(const Polynomial& p, const Interval& iv) {
  if (p.is_zero() || iv.is_empty()) return true;
  if (iv.is_point()) return p(*iv.lower.value) >= 0;

  const Polynomial h = sign_part(p);
  if (h.degree() == 0) return h.leading() > 0;
  // A simple root of h inside iv means a sign change, hence a negative value.
  if (SturmChain(h).count_open(iv.lower, iv.upper) > 0) return false;
  return h(interior_sample(iv)) > 0;
}

Rational find_negative_point(const Polynomial& p, const Interval& iv) {
  if (nonneg_on(p, iv)) throw std::domain_error("find_negative_point: polynomial is nonnegative on the interval");
  if (iv.is_point()) return *iv.lower.value;

  const Polynomial h = sign_part(p);
  const Rational bound = cauchy_bound(h);
  Rational lo = iv.lower.is_finite() ? *iv.lower.value : -bound - 1;
  Rational hi = iv.upper.is_finite() ? *iv.upper.value : bound + 1;
  if (!iv.lower.is_finite() && hi - 1 < lo) lo = hi - 1;
  if (!iv.upper.is_finite() && lo + 1 > hi) hi = lo + 1;

  const SturmChain chain(h);
  // Given h(x) < 0 with a < x, moves left from x inside a root-free piece of
  // (a, x] until p itself is negative; p and h differ by a factor that
  // vanishes at finitely many points and is otherwise positive.
  auto refine = [&](const Rational& a, Rational x) {
    Rational left = a;
    while (chain.count_open({left, false}, {x, false}) != 0) left = (left + x) / 2;
    while (p(x) >= 0) x = (left + x) / 2;
    return x;
  };
  // Bisection over the open interval (a, b), left half first. Every root of
  // h changes sign, so an interval holding one also holds a negative region
  // and some midpoint eventually lands in it.
  auto search = [&](auto&& self, const Rational& a, const Rational& b) -> std::optional<Rational> {
    const Rational mid = (a + b) / 2;
    if (h(mid) < 0) return refine(a, mid);
    if (chain.count_open({a, false}, {b, false}) == 0) return std::nullopt;
    if (auto found = self(self, a, mid)) return found;
    return self(self, mid, b);
  };

  if (auto t = search(search, lo, hi)) return *t;
  throw std::logic_error("find_negative_point: bisection found no negative region");
}

}  // namespace symqe
