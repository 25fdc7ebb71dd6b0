#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symqe/symquartic.hpp"
#include "symqe/verdict.hpp"

namespace symqe {

struct BlockPair {
  long r = 0;
  long s = 0;
  friend bool operator==(const BlockPair&, const BlockPair&) = default;
};

// The block pairs that decide orthant nonnegativity, in checking order:
// (1, k) for k = 1..n-1, then (k, 1) for k = 2..n-1, then, only when
// a > 0 > b, (k, n-k) for k = 2..n-2. Indexed lazily so that the order
// costs O(1) memory.
class PairOrder {
 public:
  explicit PairOrder(const SymmetricQuartic& f);

  std::size_t size() const;
  BlockPair operator[](std::size_t index) const;
  bool includes_splits() const { return splits_; }

 private:
  long n_;
  bool splits_;
};

std::vector<BlockPair> build_z(const SymmetricQuartic& f);

// P and Q from the closed forms; R as the 6x6 resultant determinant.
PqrTriple compute_pqr(const RestrictionCoeffs& rc);

// Settles one pair. Gates and shortcuts are tried before P, Q, R are
// needed; pqr is filled in only when they were computed.
PairBranch classify_pair(const RestrictionCoeffs& rc, std::optional<PqrTriple>& pqr);

// True when the pair's sign condition holds or is not required.
bool check_discriminant_pair(const RestrictionCoeffs& rc, const PqrTriple& pqr);

// Linear-time decision of f >= 0 on the nonnegative orthant.
OrthantVerdict decide_orthant(const SymmetricQuartic& f, const DecideOptions& options = {});

// f(1_k, 0_{n-k}) for a cubic.
Rational eval_ones(const SymmetricCubic& f, long k);

// A symmetric cubic is nonnegative on the orthant iff every f(1_k, 0_{n-k}) >= 0.
OrthantVerdict decide_orthant_cubic(const SymmetricCubic& f, const DecideOptions& options = {});

}  // namespace symqe
