#pragma once

#include "qshuffle/blocks.hpp"
#include "qshuffle/diamond.hpp"
#include "qshuffle/mzv.hpp"
#include "qshuffle/ncpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qshuffle {

/// A rational combination of zeta values; the empty index is the constant 1.
struct ZetaCombination {
  std::map<MZVIndex, Rational> terms;
  /// Set when some term came out of shuffle regularization.
  bool regularized = false;

  void add_term(const MZVIndex& idx, const Rational& c);
  [[nodiscard]] bool is_zero() const { return terms.empty(); }
  /// "-zeta(2,1,2,1,3) + zeta(3,2,1,3)", or "0".
  [[nodiscard]] std::string to_string() const;
};

/// ic(p) written at the zeta level: ic(w) = (-1)^depth zeta(idx(w)).
/// Words whose iterated integral vanishes by parity are dropped; divergent
/// ones are replaced by their shuffle regularization at T = 0.
ZetaCombination ic_render(const NCPoly& p);

/// q * pi^power.
struct PiMultiple {
  Rational coefficient;
  unsigned power = 0;

  [[nodiscard]] long double value() const { return pi_power_value(coefficient, power); }
  [[nodiscard]] std::string to_string() const;
};

/// The statement ic(lhs) = 0, i.e. rendered = closed_form (or 0 when absent).
struct Relation {
  NCPoly lhs;
  ZetaCombination rendered;
  std::optional<PiMultiple> closed_form;
  std::string provenance;

  [[nodiscard]] bool regularized() const { return rendered.regularized; }
  /// The common MZV weight of every word, if homogeneous.
  [[nodiscard]] std::optional<std::uint64_t> weight() const;
};

Relation relation_from_block_product(const Word& u, const Word& v);

/// For each of the odd power 2k+1 and the even power 2k: the relation
/// z^{2k+1} - z^{<>(2k+1)}/(2k+1), resp. z^{2k}, split into components of
/// fixed weight. Zero components are omitted.
std::vector<Relation> quasipower_relations(const LetterCombination& z, unsigned k,
                                           const DiamondProduct& d = DiamondProduct::additive());

/// Compositions of k into exactly n parts, each at most r; and those among
/// them having at least one part equal to r.
Integer bounded_compositions(unsigned k, unsigned n, unsigned r);
Integer bounded_compositions_plus(unsigned k, unsigned n, unsigned r);

/// The distinct index sequences of {2}^k sh {1,3}^n.
std::vector<MZVIndex> twos_shuffle_one_three(unsigned n, unsigned k);

/// Length of the longest run of consecutive 2s.
unsigned longest_run_of_twos(const MZVIndex& idx);

/// Indices in {2}^k sh {1,3}^n whose longest run of 2s has length exactly p.
std::vector<MZVIndex> bunch_set(unsigned n, unsigned k, unsigned p);

/// Sum over the z-words of length 2n+1 in z_2, ..., z_{2p+2} with index sum
/// 2k+4n+2 that use z_{2p+2}. It renders to sum_{u in bunch_set} zeta(u),
/// whose closed form is |P+|/(2n+1) zeta({2}^{k+2n}) as a multiple of a pi power.
struct BunchRelation {
  Relation relation;
  std::vector<MZVIndex> bunch;  // enumerated on the zeta side
  Integer p_plus;
  PiMultiple bunch_value;
  /// The zeta-side enumeration agrees with the z-word side.
  bool sets_agree = false;
};

BunchRelation bunchsof2_relation(unsigned n, unsigned k, unsigned p);

/// Refined form: z-words of length sum(counts) where z_{2j} occurs counts[j-1]
/// times; with 2n+1 = sum(counts) and m = sum j*counts[j-1] the sum of their
/// ic-values is multinomial/(2n+1) * ic(z_{2m}).
Relation refined_twos_relation(const std::vector<unsigned>& counts);

/// zeta({2}^k sh {1,3}^n) against pi^{4n+2k} C(2n+k,k) / ((2n+1)(4n+2k+1)!).
struct ShuffleSumCheck {
  Relation relation;
  std::size_t word_count = 0;
  Integer expected_word_count;
};

ShuffleSumCheck bowman_bradley(unsigned n, unsigned k);

struct VerifyReport {
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  /// Accumulated evaluation error bound of the zeta terms.
  double tail = 0.0;
  bool regularized = false;
  bool pass = false;
};

/// Pass iff |rendered - closed_form| < tail + tolerance.
/// Throws std::domain_error if the weight exceeds what the cutoff can resolve.
VerifyReport verify_relation(const Relation& rel, MzvCache& cache, double tolerance);
VerifyReport verify_relation(const Relation& rel, const EvalParams& params, double tolerance);

}  // namespace qshuffle
