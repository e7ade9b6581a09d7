#pragma once

#include "qshuffle/blocks.hpp"
#include "qshuffle/rational.hpp"

#include <cstdint>
#include <map>
#include <mutex>

namespace qshuffle {

struct EvalParams {
  std::uint64_t cutoff = 1'000'000;  // N; must be >= 10

  void validate() const;
};

struct MzvValue {
  double value = 0.0;
  /// Conservative bound on |value - zeta|.
  double error_bound = 0.0;
  /// The plain nested partial sum over k_r <= N, before tail correction.
  double partial_sum = 0.0;
  /// Conservative bound on the discarded tail of `partial_sum`.
  double tail_bound = 0.0;
};

/// zeta(n_1, ..., n_r) = sum_{1 <= k_1 < ... < k_r} prod k_i^{-n_i}.
///
/// Nested partial sums up to N by dynamic programming (O(N r), compensated
/// summation). The tail is added back exactly by splitting the index tuple at
/// N: zeta = sum_j zeta_{<=N}(n_1..n_j) * zeta_{>N}(n_{j+1}..n_r), with each
/// zeta_{>N} expanded asymptotically in 1/N by Euler-Maclaurin.
/// Throws std::domain_error on a divergent index.
MzvValue mzv_eval(const MZVIndex& idx, const EvalParams& params = {});

/// Thread-safe memoizing front end to mzv_eval for a fixed cutoff.
class MzvCache {
 public:
  explicit MzvCache(EvalParams params = {});
  MzvValue get(const MZVIndex& idx);
  [[nodiscard]] const EvalParams& params() const { return params_; }

 private:
  EvalParams params_;
  std::mutex mutex_;
  std::map<MZVIndex, MzvValue> cache_;
};

/// zeta({2}^m) = pi^{2m} / (2m+1)!: the rational coefficient of pi^{2m}.
Rational zeta_twos_closed_form(unsigned m);

/// q * pi^{2m} in extended precision.
long double pi_power_value(const Rational& q, unsigned even_power);

}  // namespace qshuffle
