#include "qshuffle/mzv.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qshuffle {

void EvalParams::validate() const {
  if (cutoff < 10) throw std::invalid_argument("EvalParams: cutoff N must be >= 10");
}

namespace {

using Real = long double;

// Asymptotic expansion sum_e coef[e] x^{-e}.
using Expansion = std::map<int, Real>;

constexpr int kBernoulliTerms = 7;
// B_2, B_4, ..., B_14
constexpr Real kBernoulli[kBernoulliTerms] = {1.0L / 6,      -1.0L / 30,        1.0L / 42, -1.0L / 30,
                                              5.0L / 66, -691.0L / 2730, 7.0L / 6};
// Orders kept beyond the leading exponent of each tail expansion.
constexpr int kKeptOrders = 12;

Real factorial_real(int n) {
  Real r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// sum_{k > x} k^{-s}, s >= 2, by Euler-Maclaurin:
//   x^{1-s}/(s-1) - x^{-s}/2 + sum_j B_2j/(2j)! (s)_{2j-1} x^{-s-2j+1}
Expansion hurwitz_tail(int s) {
  Expansion e;
  e[s - 1] += 1.0L / (s - 1);
  e[s] += -0.5L;
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    Real rising = 1;
    for (int i = 0; i < 2 * j - 1; ++i) rising *= (s + i);
    e[s + 2 * j - 1] += kBernoulli[j - 1] / factorial_real(2 * j) * rising;
  }
  return e;
}

void truncate(Expansion& e) {
  if (e.empty()) return;
  const int limit = e.begin()->first + kKeptOrders;
  e.erase(e.upper_bound(limit), e.end());
}

// sum_{x < k_1 < ... < k_m} prod k_i^{-t_i}
Expansion nested_tail(const std::vector<std::uint32_t>& t, std::size_t from) {
  Expansion inner = hurwitz_tail(static_cast<int>(t.back()));
  truncate(inner);
  for (std::size_t i = t.size() - 1; i-- > from;) {
    Expansion next;
    for (const auto& [exponent, coef] : inner) {
      for (const auto& [e2, c2] : hurwitz_tail(static_cast<int>(t[i]) + exponent)) next[e2] += coef * c2;
    }
    truncate(next);
    inner = std::move(next);
  }
  return inner;
}

struct TailValue {
  Real value;
  Real last_order;  // magnitude of the highest kept order, an estimate of the truncation error
};

TailValue evaluate(const Expansion& e, Real x) {
  TailValue out{0, 0};
  for (const auto& [exponent, coef] : e) out.value += coef * std::pow(x, -static_cast<Real>(exponent));
  if (!e.empty()) {
    const auto& [exponent, coef] = *e.rbegin();
    out.last_order = std::fabs(coef * std::pow(x, -static_cast<Real>(exponent)));
  }
  return out;
}

struct Compensated {
  Real sum = 0;
  Real carry = 0;

  void add(Real v) {
    const Real t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  [[nodiscard]] Real value() const { return sum + carry; }
};

}  // namespace

MzvValue mzv_eval(const MZVIndex& idx, const EvalParams& params) {
  params.validate();
  if (!idx.convergent()) throw std::domain_error("mzv_eval: divergent index " + idx.to_string());
  if (idx.entries.empty()) return MzvValue{1.0, 0.0, 1.0, 0.0};

  const std::size_t depth = idx.depth();
  const std::uint64_t n_cut = params.cutoff;
  std::uint32_t max_exponent = 0;
  for (const auto n : idx.entries) max_exponent = std::max(max_exponent, n);

  // prefix[j] = sum over k_1 < ... < k_j <= K
  std::vector<Compensated> prefix(depth + 1);
  prefix[0].add(1);
  std::vector<Real> inv_powers(max_exponent + 1);
  for (std::uint64_t k = 1; k <= n_cut; ++k) {
    const Real inv = 1.0L / static_cast<Real>(k);
    inv_powers[0] = 1;
    for (std::uint32_t e = 1; e <= max_exponent; ++e) inv_powers[e] = inv_powers[e - 1] * inv;
    for (std::size_t j = depth; j >= 1; --j) {
      prefix[j].add(inv_powers[idx.entries[j - 1]] * prefix[j - 1].value());
    }
  }

  const Real x = static_cast<Real>(n_cut);
  Real total = prefix[depth].value();
  Real tail = 0;
  Real truncation = 0;
  Real magnitude = std::fabs(total);
  for (std::size_t j = 0; j < depth; ++j) {
    const TailValue t = evaluate(nested_tail(idx.entries, j), x);
    const Real head = prefix[j].value();
    tail += head * t.value;
    truncation += std::fabs(head) * t.last_order;
    magnitude += std::fabs(head * t.value);
  }
  total += tail;

  MzvValue out;
  out.value = static_cast<double>(total);
  out.partial_sum = static_cast<double>(prefix[depth].value());
  const Real rounding = 16 * LDBL_EPSILON * static_cast<Real>(depth + 1) * magnitude * std::log2(x) +
                        DBL_EPSILON * std::fabs(total);
  out.error_bound = static_cast<double>(truncation + rounding);
  out.tail_bound = static_cast<double>(std::fabs(tail) + truncation + rounding);
  return out;
}

MzvCache::MzvCache(EvalParams params) : params_(params) { params_.validate(); }

MzvValue MzvCache::get(const MZVIndex& idx) {
  {
    std::lock_guard lock(mutex_);
    if (const auto it = cache_.find(idx); it != cache_.end()) return it->second;
  }
  const MzvValue v = mzv_eval(idx, params_);
  std::lock_guard lock(mutex_);
  cache_.emplace(idx, v);
  return v;
}

Rational zeta_twos_closed_form(unsigned m) { return Rational(1) / Rational(factorial(2 * m + 1)); }

long double pi_power_value(const Rational& q, unsigned even_power) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double num = mpz_get_d(q.get_num_mpz_t());
  const long double den = mpz_get_d(q.get_den_mpz_t());
  return num / den * std::pow(pi, static_cast<long double>(even_power));
}

}  // namespace qshuffle
