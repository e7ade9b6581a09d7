#pragma once

#include "qshuffle/compositions.hpp"
#include "qshuffle/diamond.hpp"
#include "qshuffle/ncpoly.hpp"
#include "qshuffle/products.hpp"
#include "qshuffle/series.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qshuffle {

/// [z_{a_1} ... z_{a_k}] = z_{a_1} <> ... <> z_{a_k}; throws on the empty word.
LetterCombination bracket(const Word& w, const DiamondProduct& d);

/// I[w]: brackets of the consecutive segments of w cut by I, concatenated.
/// Zero when len(w) != total(I).
NCPoly composition_action(const Composition& comp, const Word& w, const DiamondProduct& d);

/// Psi_f(w) = sum over compositions I of len(w) of c_{i_1}...c_{i_l} I[w],
/// extended linearly, Psi_f(1) = 1. Requires f.degree() >= every word length.
NCPoly psi(const FormalSeries& f, const NCPoly& p, const DiamondProduct& d = DiamondProduct::additive());

/// A polynomial in a formal parameter lambda with NCPoly coefficients,
/// truncated above `degree()`. Entry k is the lambda^k component.
class GradedPoly {
 public:
  explicit GradedPoly(unsigned degree);

  [[nodiscard]] unsigned degree() const { return static_cast<unsigned>(parts_.size() - 1); }
  [[nodiscard]] const NCPoly& operator[](unsigned k) const { return parts_.at(k); }
  NCPoly& operator[](unsigned k) { return parts_.at(k); }

  /// lambda * p
  static GradedPoly lambda_times(const NCPoly& p, unsigned degree);
  static GradedPoly constant(const NCPoly& p, unsigned degree);

  GradedPoly& operator+=(const GradedPoly& rhs);
  GradedPoly& operator-=(const GradedPoly& rhs);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }

  bool operator==(const GradedPoly&) const = default;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<NCPoly> parts_;
};

/// The product selector for f_bullet.
enum class Bullet { shuffle, block_shuffle, diamond, concat };

Bullet parse_bullet(std::string_view name);

/// Product of two lambda-graded polynomials under `bullet`, truncated.
GradedPoly graded_product(const GradedPoly& x, const GradedPoly& y, Bullet bullet, const DiamondProduct& d);

/// f_bullet(X) = sum_i c_i X^{bullet i} for X without constant term,
/// truncated at X.degree(). For Bullet::diamond every component of X must be
/// supported on single letters.
GradedPoly f_bullet(const FormalSeries& f, const GradedPoly& x, Bullet bullet,
                    const DiamondProduct& d = DiamondProduct::additive());
/// f_bullet(lambda z).
GradedPoly f_bullet(const FormalSeries& f, const NCPoly& z, Bullet bullet, unsigned degree,
                    const DiamondProduct& d = DiamondProduct::additive());

/// 1 + f_bullet(X) with f = e^z - 1.
GradedPoly exp_bullet(const GradedPoly& x, Bullet bullet, const DiamondProduct& d = DiamondProduct::additive());

/// sum_n lambda^n z^n (concatenation powers).
GradedPoly geometric_series(const NCPoly& z, unsigned degree);
/// sum_n X^n (concatenation powers) for X without constant term.
GradedPoly geometric_series(const GradedPoly& x);

/// Psi_f applied degreewise (Psi_f(lambda) = lambda).
GradedPoly psi(const FormalSeries& f, const GradedPoly& x, const DiamondProduct& d = DiamondProduct::additive());

/// Psi_f(1/(1 - lambda z)) == 1/(1 - f_<>(lambda z)) up to lambda^degree.
bool check_geometric_identity(const FormalSeries& f, const NCPoly& z, unsigned degree,
                              const DiamondProduct& d = DiamondProduct::additive());
/// exp_bsh(lambda z) == Psi_tanh(1/(1 - lambda z)) up to lambda^degree.
bool check_exp_tanh(const NCPoly& z, unsigned degree);
/// exp_bsh(atanh_<>(lambda z)) == 1/(1 - lambda z) up to lambda^degree.
bool check_expgeo(const NCPoly& z, unsigned degree);
/// log_bullet(exp_bullet(lambda z)) == lambda z up to lambda^degree.
bool check_log_exp(const NCPoly& z, Bullet bullet, unsigned degree,
                   const DiamondProduct& d = DiamondProduct::additive());

/// First pair (u, v) with len(u) + len(v) <= max_total_length, letters <=
/// max_letter, for which Psi_f(u source v) != Psi_f(u) target Psi_f(v).
std::optional<std::pair<Word, Word>> find_morphism_counterexample(const FormalSeries& f, ProductKind source,
                                                                  ProductKind target, std::size_t max_total_length,
                                                                  LetterIndex max_letter);

/// First word w with len(w) <= max_length for which Psi_f(Psi_{f^-1}(w)) != w.
std::optional<Word> find_inverse_counterexample(const FormalSeries& f, std::size_t max_length, LetterIndex max_letter);

}  // namespace qshuffle
