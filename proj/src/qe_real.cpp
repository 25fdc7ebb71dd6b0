#include "symqe/qe_real.hpp"

#include <stdexcept>

#include "scan.hpp"
#include "symqe/resultant.hpp"
#include "symqe/sturm.hpp"

namespace symqe {

RealDiscriminants compute_dghk(std::span<const Rational, 5> F) {
  const Rational& A = F[0];
  const Rational& B = F[1];
  const Rational& C = F[2];
  const Rational& D = F[3];
  const Rational& E = F[4];
  const Rational A2 = A * A;
  const Rational A3 = A2 * A;
  const Rational B2 = B * B;
  const Rational C2 = C * C;
  const Rational D2 = D * D;
  const Rational BD = B * D;

  RealDiscriminants out;
  out.Delta = -108 * A2 * D2 + 4 * A * C * (27 * BD - 8 * C2) - 9 * B2 * (3 * BD - C2);
  out.G = 768 * A3 * E - 64 * A2 * (3 * BD + 2 * C2) + 144 * A * B2 * C - 27 * B2 * B2;
  out.H = 384 * A3 * E * E - 8 * A2 * (24 * BD * E + 16 * C2 * E - 9 * C * D2) +
          A * (144 * B2 * C * E - 3 * B2 * D2 - 40 * B * C2 * D + 8 * C2 * C2) -
          B2 * (27 * B2 * E - 9 * B * C * D + 2 * C2 * C);
  out.K = det_k(F);
  return out;
}

RealBranch classify_real(const RealDiscriminants& disc) {
  if (disc.K >= 0 && disc.Delta < 0) return RealBranch::complex_critical;
  if (disc.G >= 0 && disc.H >= 0 && disc.K >= 0) return RealBranch::critical_nonneg;
  return RealBranch::failed;
}

bool quartic_nonneg_real(std::span<const Rational, 5> quartic) {
  if (quartic[0] <= 0) throw std::domain_error("quartic_nonneg_real: leading coefficient must be positive");
  return classify_real(compute_dghk(quartic)) != RealBranch::failed;
}

RealVerdict decide_real(const SymmetricQuartic& f, const DecideOptions& options) {
  RealVerdict verdict;
  auto* trace = options.trace ? &verdict.trace : nullptr;

  for (long k = 1; k <= f.n(); ++k) {
    Rational value = eval_ones(f, k);
    const bool passed = value >= 0;
    if (trace) trace->push_back(OnesCheck{k, value, passed});
    if (!passed) {
      verdict.decision = false;
      verdict.failing_stage = OnesFailure{k};
      Witness w{block_point(f.n(), 1, k, 0), 0};
      w.value = eval_point(f, w.point);
      verdict.witness = std::move(w);
      return verdict;
    }
  }

  const long n = f.n();
  auto evaluate = [&](std::size_t i) {
    const long r = static_cast<long>(i) + 1;
    const RestrictionCoeffs rc = restriction(f, r, n - r);
    SplitCheck check{r, rc.quartic_coeffs(), {}, RealBranch::failed, false};
    check.disc = compute_dghk(check.coeffs);
    check.branch = classify_real(check.disc);
    check.passed = check.branch != RealBranch::failed;
    return check;
  };

  const auto failure = detail::scan_checks<SplitCheck>(static_cast<std::size_t>(n - 1), evaluate, options, trace);
  if (!failure) return verdict;

  const long r = static_cast<long>(*failure) + 1;
  const RestrictionCoeffs rc = restriction(f, r, n - r);
  const Rational t = find_negative_point(rc.quartic(), Interval::real_line());
  Witness w{block_point(n, t, r, n - r), 0};
  w.value = eval_point(f, w.point);
  if (w.value >= 0) throw std::logic_error("witness extraction produced a point with f >= 0");
  verdict.decision = false;
  verdict.failing_stage = SplitFailure{r};
  verdict.witness = std::move(w);
  return verdict;
}

}  // namespace symqe
