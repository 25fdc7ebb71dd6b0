#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symqe/polynomial.hpp"
#include "symqe/rational.hpp"

namespace symqe {

// One end of an interval; an empty value means -inf or +inf depending on
// which side it sits.
struct Bound {
  std::optional<Rational> value;
  bool closed = false;

  bool is_finite() const { return value.has_value(); }
};

struct Interval {
  Bound lower;
  Bound upper;

  static Interval real_line() { return {}; }
  static Interval closed_ray(const Rational& from) { return {{from, true}, {}}; }
  static Interval open_ray(const Rational& from) { return {{from, false}, {}}; }
  static Interval closed(const Rational& lo, const Rational& hi) { return {{lo, true}, {hi, true}}; }
  static Interval open(const Rational& lo, const Rational& hi) { return {{lo, false}, {hi, false}}; }

  bool contains(const Rational& t) const;
  bool is_empty() const;
  bool is_point() const;
};

// Sturm chain of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& square_free);

  int variations_at(const Rational& t) const;
  int variations_at_infinity(bool towards_positive) const;

  // Distinct roots strictly inside the interval's interior.
  std::size_t count_open(const Bound& lower, const Bound& upper) const;

  const Polynomial& base() const { return chain_.front(); }

 private:
  int variations_at_bound(const Bound& b, bool is_upper) const;

  std::vector<Polynomial> chain_;
};

// Number of distinct real roots of p in iv. Throws std::domain_error on p = 0.
std::size_t sturm_count(const Polynomial& p, const Interval& iv);

// Exact test of p(t) >= 0 for every t in iv.
bool nonneg_on(const Polynomial& p, const Interval& iv);

// A rational t in iv with p(t) < 0, found deterministically by Sturm
// bisection inside the Cauchy bound, left halves first. Throws
// std::domain_error if p >= 0 on iv.
Rational find_negative_point(const Polynomial& p, const Interval& iv);

}  // namespace symqe
