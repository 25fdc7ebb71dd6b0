#include "symqe/qe_plus.hpp"

#include <stdexcept>
#include <string>

#include "scan.hpp"
#include "symqe/resultant.hpp"
#include "symqe/sturm.hpp"

namespace symqe {
namespace {

bool all_nonneg(const RestrictionCoeffs& rc) { return rc.alpha >= 0 && rc.beta >= 0 && rc.gamma >= 0; }
bool all_nonpos(const RestrictionCoeffs& rc) { return rc.alpha <= 0 && rc.beta <= 0 && rc.gamma <= 0; }

// Both lines of the sign system, assuming alpha != 0 and Delta >= 0.
bool sign_lines_hold(const RestrictionCoeffs& rc, const PqrTriple& pqr) {
  const auto& [alpha, beta, gamma] = rc.quadratic_coeffs();
  const auto& [P, Q, R] = pqr;
  const bool plus_root = (alpha <= 0 && beta <= 0) || (beta >= 0 && gamma >= 0) || (P >= 0 && Q >= 0) ||
                         (R >= 0 && P >= 0) || (R <= 0 && Q >= 0);
  const bool minus_root = (alpha >= 0 && beta >= 0) || (beta <= 0 && gamma <= 0) || (P >= 0 && Q <= 0) ||
                          (R >= 0 && P >= 0) || (R <= 0 && Q <= 0);
  return plus_root && minus_root;
}

std::optional<PairBranch> gate_or_shortcut(const RestrictionCoeffs& rc) {
  if (rc.alpha == 0) return PairBranch::alpha_zero;
  if (rc.Delta < 0) return PairBranch::complex_roots;
  if (rc.beta == 0) return PairBranch::beta_zero;
  if (all_nonneg(rc)) return PairBranch::coeffs_nonneg;
  if (all_nonpos(rc)) return PairBranch::coeffs_nonpos;
  return std::nullopt;
}

PairBranch settle_with_pqr(const RestrictionCoeffs& rc, const PqrTriple& pqr) {
  if (pqr.P >= 0 && pqr.R >= 0) return PairBranch::p_r_nonneg;
  return sign_lines_hold(rc, pqr) ? PairBranch::discriminants : PairBranch::failed;
}

Witness ones_witness(const SymmetricQuartic& f, long k) {
  Witness w{block_point(f.n(), 1, k, 0), 0};
  w.value = eval_point(f, w.point);
  return w;
}

Witness verified(const SymmetricQuartic& f, std::vector<Rational> point) {
  Witness w{std::move(point), 0};
  w.value = eval_point(f, w.point);
  if (w.value >= 0) throw std::logic_error("witness extraction produced a point with f >= 0");
  return w;
}

}  // namespace

PairOrder::PairOrder(const SymmetricQuartic& f) : n_(f.n()), splits_(f.a() > 0 && f.b() < 0) {}

std::size_t PairOrder::size() const {
  const auto n = static_cast<std::size_t>(n_);
  std::size_t total = (n - 1) + (n - 2);
  if (splits_ && n >= 4) total += n - 3;
  return total;
}

BlockPair PairOrder::operator[](std::size_t index) const {
  const auto i = static_cast<long>(index);
  if (i < n_ - 1) return {1, i + 1};
  if (i < 2 * n_ - 3) return {i - (n_ - 1) + 2, 1};
  if (splits_ && static_cast<std::size_t>(index) < size()) {
    const long k = i - (2 * n_ - 3) + 2;
    return {k, n_ - k};
  }
  throw std::out_of_range("PairOrder index " + std::to_string(index));
}

std::vector<BlockPair> build_z(const SymmetricQuartic& f) {
  const PairOrder order(f);
  std::vector<BlockPair> pairs;
  pairs.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pairs.push_back(order[i]);
  return pairs;
}

PqrTriple compute_pqr(const RestrictionCoeffs& rc) {
  const auto& [A, B, C, D, E] = rc.quartic_coeffs();
  const Rational& al = rc.alpha;
  const Rational& be = rc.beta;
  const Rational& ga = rc.gamma;
  const Rational al2 = al * al;
  const Rational al3 = al2 * al;
  const Rational be2 = be * be;
  const Rational alga = al * ga;

  PqrTriple out;
  out.P = A * (be2 * be2 - 4 * be2 * alga + 2 * alga * alga) - B * be * al * (be2 - 3 * alga) +
          C * al2 * (be2 - 2 * alga) - D * be * al3 + 2 * E * al2 * al2;
  out.Q = -A * be * (be2 - 2 * alga) + B * al * (be2 - alga) - C * be * al2 + D * al3;
  out.R = resultant_quartic_quadratic(rc.quartic_coeffs(), rc.quadratic_coeffs());
  return out;
}

PairBranch classify_pair(const RestrictionCoeffs& rc, std::optional<PqrTriple>& pqr) {
  if (auto settled = gate_or_shortcut(rc)) return *settled;
  pqr = compute_pqr(rc);
  return settle_with_pqr(rc, *pqr);
}

bool check_discriminant_pair(const RestrictionCoeffs& rc, const PqrTriple& pqr) {
  if (gate_or_shortcut(rc)) return true;
  return settle_with_pqr(rc, pqr) != PairBranch::failed;
}

OrthantVerdict decide_orthant(const SymmetricQuartic& f, const DecideOptions& options) {
  OrthantVerdict verdict;
  auto* trace = options.trace ? &verdict.trace : nullptr;

  for (long k = 1; k <= f.n(); ++k) {
    Rational value = eval_ones(f, k);
    const bool passed = value >= 0;
    if (trace) trace->push_back(OnesCheck{k, value, passed});
    if (!passed) {
      verdict.decision = false;
      verdict.failing_stage = OnesFailure{k};
      verdict.witness = ones_witness(f, k);
      return verdict;
    }
  }

  const Rational opposite = eval_one_minus_one(f);
  const bool decisive = opposite <= 0;
  if (trace) trace->push_back(OneMinusOneCheck{opposite, decisive});
  if (decisive) return verdict;

  const PairOrder order(f);
  auto pair_at = [&](std::size_t i) {
    const BlockPair p = order[i];
    return options.swap_pairs ? BlockPair{p.s, p.r} : p;
  };
  auto evaluate = [&](std::size_t i) {
    const BlockPair p = pair_at(i);
    const RestrictionCoeffs rc = restriction(f, p.r, p.s);
    PairCheck check{p.r, p.s, rc.alpha, rc.beta, rc.gamma, rc.Delta, std::nullopt, PairBranch::failed, false};
    check.branch = classify_pair(rc, check.pqr);
    check.passed = check.branch != PairBranch::failed;
    return check;
  };

  const auto failure = detail::scan_checks<PairCheck>(order.size(), evaluate, options, trace);
  if (!failure) return verdict;

  const BlockPair p = pair_at(*failure);
  const RestrictionCoeffs rc = restriction(f, p.r, p.s);
  const Rational t = find_negative_point(rc.quartic(), Interval::open_ray(0));
  verdict.decision = false;
  verdict.failing_stage = PairFailure{p.r, p.s};
  verdict.witness = verified(f, block_point(f.n(), t, p.r, p.s));
  return verdict;
}

Rational eval_ones(const SymmetricCubic& f, long k) {
  if (k < 1 || k > f.n()) throw std::out_of_range("eval_ones: k out of range");
  const Rational kk = k;
  return kk * (f.a3() + kk * (f.a21() + kk * f.a111()));
}

OrthantVerdict decide_orthant_cubic(const SymmetricCubic& f, const DecideOptions& options) {
  OrthantVerdict verdict;
  for (long k = 1; k <= f.n(); ++k) {
    Rational value = eval_ones(f, k);
    const bool passed = value >= 0;
    if (options.trace) verdict.trace.push_back(OnesCheck{k, value, passed});
    if (!passed) {
      verdict.decision = false;
      verdict.failing_stage = OnesFailure{k};
      verdict.witness = Witness{block_point(f.n(), 1, k, 0), value};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace symqe
