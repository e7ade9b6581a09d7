#pragma once

// Independent reference implementations used only by the tests. They follow
// the textbook definitions directly and share no code with the library's
// algorithms beyond the basic containers.

#include "qshuffle/diamond.hpp"
#include "qshuffle/ncpoly.hpp"
#include "qshuffle/series.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using qshuffle::Integer;
using qshuffle::LetterIndex;
using qshuffle::NCPoly;
using qshuffle::Rational;
using qshuffle::Word;

// Shuffle by choosing which output slots hold the letters of u.
inline NCPoly shuffle(const Word& u, const Word& v) {
  const std::size_t n = u.size() + v.size();
  NCPoly out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != u.size()) continue;
    std::vector<LetterIndex> w;
    std::size_t i = 0, j = 0;
    for (std::size_t pos = 0; pos < n; ++pos) w.push_back((mask >> pos) & 1 ? u[i++] : v[j++]);
    out.add_term(Word(std::move(w)), 1);
  }
  return out;
}

// Quasi-shuffle by enumerating step sequences over {take u, take v, merge}.
inline void stuffle_steps(const Word& u, std::size_t i, const Word& v, std::size_t j, std::vector<LetterIndex>& cur,
                          NCPoly& out) {
  if (i == u.size() && j == v.size()) {
    out.add_term(Word(cur), 1);
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    stuffle_steps(u, i + 1, v, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    stuffle_steps(u, i, v, j + 1, cur, out);
    cur.pop_back();
  }
  if (i < u.size() && j < v.size()) {
    cur.push_back(u[i] + v[j]);
    stuffle_steps(u, i + 1, v, j + 1, cur, out);
    cur.pop_back();
  }
}

inline NCPoly stuffle(const Word& u, const Word& v) {
  NCPoly out;
  std::vector<LetterIndex> cur;
  stuffle_steps(u, 0, v, 0, cur, out);
  return out;
}

// The generalised quasi-shuffle written straight from its recursive
// definition with the additive diamond, no memoization:
//   au * bv = a(u * bv) + b(au * v) - L_{a+b}(u * v),
// L_c replacing the first letter x of each word by z_{c+x} and killing 1.
inline NCPoly block_shuffle(const Word& u, const Word& v) {
  if (u.empty()) return NCPoly(v);
  if (v.empty()) return NCPoly(u);
  NCPoly out;
  for (const auto& [w, c] : block_shuffle(u.tail(), v)) out.add_term(Word{u.front()} + w, c);
  for (const auto& [w, c] : block_shuffle(u, v.tail())) out.add_term(Word{v.front()} + w, c);
  for (const auto& [w, c] : block_shuffle(u.tail(), v.tail())) {
    if (w.empty()) continue;
    std::vector<LetterIndex> letters(w.begin(), w.end());
    letters[0] += u.front() + v.front();
    out.add_term(Word(std::move(letters)), -c);
  }
  return out;
}

// zeta_N(n_1..n_r) = sum_{1 <= k_1 < ... < k_r <= N} prod k_i^{-n_i}, exactly.
inline Rational truncated_zeta(const std::vector<std::uint32_t>& idx, unsigned cutoff) {
  const auto inv_power = [](unsigned k, std::uint32_t n) -> Rational {
    Integer p = 1;
    for (std::uint32_t e = 0; e < n; ++e) p *= k;
    return Rational(1) / Rational(p);
  };
  // ending[k]: sum over the tuples of the prefix processed so far whose last entry is k
  std::vector<Rational> ending(cutoff + 1, 1);
  ending[0] = 0;
  bool first = true;
  for (const auto n : idx) {
    std::vector<Rational> next(cutoff + 1, 0);
    Rational below = 0;
    for (unsigned k = 1; k <= cutoff; ++k) {
      next[k] = inv_power(k, n) * (first ? Rational(1) : below);
      below += ending[k];
    }
    ending = std::move(next);
    first = false;
  }
  Rational total = 0;
  for (unsigned k = 1; k <= cutoff; ++k) total += ending[k];
  return total;
}

// Psi_f(w) by peeling off the first segment: sum_i c_i [w_1..w_i] Psi_f(rest).
inline NCPoly psi_recursive(const qshuffle::FormalSeries& f, const Word& w) {
  if (w.empty()) return NCPoly::one();
  NCPoly out;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    LetterIndex merged = 0;
    for (std::size_t t = 0; t < i; ++t) merged += w[t];
    const Rational c = f[static_cast<unsigned>(i)];
    if (c == 0) continue;
    for (const auto& [rest, a] : psi_recursive(f, w.subword(i, w.size() - i))) {
      out.add_term(Word{merged} + rest, c * a);
    }
  }
  return out;
}

// Lyndon iff strictly smaller than every nontrivial rotation.
inline bool is_lyndon_by_rotation(const Word& w) {
  if (w.empty()) return false;
  const std::vector<LetterIndex> letters(w.begin(), w.end());
  for (std::size_t r = 1; r < letters.size(); ++r) {
    std::vector<LetterIndex> rot(letters.begin() + static_cast<std::ptrdiff_t>(r), letters.end());
    rot.insert(rot.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r));
    if (!(letters < rot)) return false;
  }
  return true;
}

// Number of aperiodic necklaces: (1/n) sum_{d | n} mu(d) M^{n/d}.
inline Integer necklace_count(unsigned letters, unsigned n) {
  const auto mu = [](unsigned m) {
    int result = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
      }
    }
    return m > 1 ? -result : result;
  };
  Integer total = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer power = 1;
    for (unsigned i = 0; i < n / d; ++i) power *= letters;
    total += mu(d) * power;
  }
  return total / n;
}

// Compositions of k into exactly n parts of size <= r, found by choosing
// n - 1 cut points among the k - 1 gaps; the second count requires a part
// equal to r.
inline std::pair<long, long> bounded_compositions(unsigned k, unsigned n, unsigned r) {
  long all = 0, plus = 0;
  if (k == 0) return {0, 0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) + 1 != n) continue;
    unsigned run = 1, largest = 0;
    bool has_r = false;
    for (unsigned gap = 0; gap < k; ++gap) {
      if (gap + 1 == k || (mask >> gap) & 1) {
        largest = std::max(largest, run);
        has_r = has_r || run == r;
        run = 1;
      } else {
        ++run;
      }
    }
    if (largest <= r) {
      ++all;
      if (has_r) ++plus;
    }
  }
  return {all, plus};
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_length, LetterIndex max_letter, bool allow_empty = false) {
  const std::size_t lo = allow_empty ? 0 : 1;
  const std::size_t len = lo + rng() % (max_length - lo + 1);
  std::vector<LetterIndex> letters;
  for (std::size_t i = 0; i < len; ++i) letters.push_back(1 + static_cast<LetterIndex>(rng() % max_letter));
  return Word(std::move(letters));
}

inline NCPoly random_poly(std::mt19937_64& rng, std::size_t terms, std::size_t max_length, LetterIndex max_letter) {
  NCPoly out;
  for (std::size_t t = 0; t < terms; ++t) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = 1 + static_cast<long>(rng() % 6);
    out.add_term(random_word(rng, max_length, max_letter, true), Rational(num) / Rational(den));
  }
  return out;
}

}  // namespace oracle
