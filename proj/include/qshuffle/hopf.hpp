#pragma once

#include "qshuffle/diamond.hpp"
#include "qshuffle/ncpoly.hpp"
#include "qshuffle/products.hpp"
#include "qshuffle/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qshuffle {

/// An element of Q<Z> (x) Q<Z>: finite combination of word pairs.
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  using TermMap = std::map<Key, Rational>;

  TensorPoly() = default;
  TensorPoly(const Word& left, const Word& right, const Rational& c = 1);

  static TensorPoly one() { return TensorPoly(Word{}, Word{}); }
  /// p (x) q
  static TensorPoly tensor(const NCPoly& p, const NCPoly& q);

  void add_term(const Word& left, const Word& right, const Rational& c);
  [[nodiscard]] const Rational& coefficient(const Word& left, const Word& right) const;
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  TensorPoly& operator+=(const TensorPoly& rhs);
  TensorPoly& operator-=(const TensorPoly& rhs);
  TensorPoly& operator*=(const Rational& c);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(const Rational& c, TensorPoly a) { return a *= c; }

  bool operator==(const TensorPoly& rhs) const { return terms_ == rhs.terms_; }

  /// u (x) v  ->  v (x) u
  [[nodiscard]] TensorPoly swapped() const;
  /// The component spanned by (length r) (x) (length s).
  [[nodiscard]] TensorPoly bidegree_component(std::size_t r, std::size_t s) const;

  [[nodiscard]] std::string to_string() const;

 private:
  TermMap terms_;
};

/// Componentwise concatenation (u1 (x) v1)(u2 (x) v2) = u1u2 (x) v1v2.
TensorPoly tensor_concat(const TensorPoly& a, const TensorPoly& b);

/// Componentwise product under `engine`: (u1 (x) v1)(u2 (x) v2) = u1*u2 (x) v1*v2.
TensorPoly tensor_product(const TensorPoly& a, const TensorPoly& b, const ProductEngine& engine);

/// (f (x) g)(t) for linear maps given on words.
TensorPoly apply_each(const TensorPoly& t, const std::function<NCPoly(const Word&)>& left,
                      const std::function<NCPoly(const Word&)>& right);

TensorPoly delta_decon(const NCPoly& p);
Rational counit(const NCPoly& p);
NCPoly antipode(const NCPoly& p);

/// The coproduct dual to the block shuffle, on letters
///   sum_k (-1)^k sum_{i_1+...+i_{2k+1} = n} z_{i_1..i_k} (x) z_{i_{k+1}..i_{2k+1}} + swap,
/// extended multiplicatively for concatenation. Requires the additive diamond.
TensorPoly delta_bl(const NCPoly& p, const DiamondProduct& d = DiamondProduct::additive());
TensorPoly delta_bl_letter(Letter z);

/// Phi(z) = sum_k 1/(2k+1) sum over odd-length factorizations of z.
NCPoly phi(Letter z);

/// Delta_bl(Phi(z)) - Phi(z) (x) 1 - 1 (x) Phi(z).
TensorPoly phi_primitive_defect(Letter z);
/// True iff every bidegree (r, s) component of the defect with
/// 0 < r <= s <= rs_bound vanishes.
bool check_phi_primitive(Letter z, std::size_t rs_bound);

/// Q_m(r, s) = sum_{q=0}^m (-1)^q binom(s-r+q, m) binom(m, q) / (s-r+q).
/// Throws std::domain_error if some s - r + q is zero.
Rational q_m_identity(long r, long s, long m);

/// Delta_decon(u * v) == Delta_decon(u) (*(x)*) Delta_decon(v).
bool check_delta_star_homomorphism(const Word& u, const Word& v, const DiamondProduct& d = DiamondProduct::additive());
bool check_delta_star_homomorphism(const Word& u, const Word& v, const ProductEngine& engine);

/// sum_k S(w_1..w_k) * w_{k+1}..w_r == 0 and the mirrored sum; w nonempty.
bool check_antipode(const Word& w, const DiamondProduct& d = DiamondProduct::additive());
bool check_antipode(const Word& w, const ProductEngine& engine);

/// Delta_decon(Psi_tanh(w)) == (Psi_tanh (x) Psi_tanh)(Delta_decon(w)) for
/// all words of length <= max_length over {z_1..z_max_letter}. Returns the
/// first counterexample, if any.
std::optional<Word> find_psi_hopf_counterexample(std::size_t max_length, LetterIndex max_letter);
bool check_psi_hopf_compat(std::size_t max_length, LetterIndex max_letter = 4);

}  // namespace qshuffle
