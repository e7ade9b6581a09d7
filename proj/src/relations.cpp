#include "qshuffle/relations.hpp"

#include "qshuffle/products.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qshuffle {

void ZetaCombination::add_term(const MZVIndex& idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string ZetaCombination::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rational mag = abs(c);
    if (idx.entries.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "zeta" << idx.to_string();
  }
  return os.str();
}

std::string PiMultiple::to_string() const {
  std::string out = coefficient.get_str();
  if (power > 0) out += "*pi^" + std::to_string(power);
  return out;
}

namespace {

Rational depth_sign(const MZVIndex& idx) { return idx.depth() % 2 ? Rational(-1) : Rational(1); }

}  // namespace

ZetaCombination ic_render(const NCPoly& p) {
  ZetaCombination out;
  for (const auto& [w, c] : p) {
    if (w.empty()) {
      // ic(1) = 1 by convention.
      out.add_term(MZVIndex{}, c);
      continue;
    }
    const BinaryWord b = z_word_to_binary(w);
    if (b.bits.back() == 0) continue;
    if (b.convergent()) {
      const MZVIndex idx = binary_to_index(b);
      out.add_term(idx, c * depth_sign(idx));
      continue;
    }
    out.regularized = true;
    const RegularizedWord reg = shuffle_regularize(b);
    for (const auto& [conv, a] : reg.at_zero()) {
      const MZVIndex idx = binary_to_index(conv);
      out.add_term(idx, c * a * depth_sign(idx));
    }
  }
  return out;
}

std::optional<std::uint64_t> Relation::weight() const {
  std::optional<std::uint64_t> w;
  for (const auto& [word, c] : lhs) {
    const std::uint64_t s = word.index_sum();
    const std::uint64_t ww = s >= 2 ? s - 2 : 0;
    if (w && *w != ww) return std::nullopt;
    w = ww;
  }
  return w;
}

Relation relation_from_block_product(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw std::invalid_argument("relation_from_block_product: words must be nonempty");
  Relation rel;
  rel.lhs = block_shuffle(NCPoly(u), NCPoly(v));
  rel.rendered = ic_render(rel.lhs);
  rel.provenance = "product bsh(" + u.to_string() + ", " + v.to_string() + ")";
  return rel;
}

namespace {

std::vector<Relation> weight_components(const NCPoly& p, const std::string& provenance) {
  std::set<std::uint64_t> sums;
  for (const auto& [w, c] : p) sums.insert(w.index_sum());
  std::vector<Relation> out;
  for (const auto s : sums) {
    Relation rel;
    rel.lhs = p.index_sum_component(s);
    rel.rendered = ic_render(rel.lhs);
    rel.provenance = provenance + " weight=" + std::to_string(s >= 2 ? s - 2 : 0);
    out.push_back(std::move(rel));
  }
  return out;
}

std::string letters_to_string(const LetterCombination& z) { return z.to_poly().to_string(); }

}  // namespace

std::vector<Relation> quasipower_relations(const LetterCombination& z, unsigned k, const DiamondProduct& d) {
  if (k == 0) throw std::invalid_argument("quasipower_relations: k must be >= 1");
  if (z.is_zero()) throw std::invalid_argument("quasipower_relations: z must be nonzero");
  const NCPoly zp = z.to_poly();
  const unsigned odd = 2 * k + 1;
  const NCPoly odd_rel = concat_power(zp, odd) - Rational(1, odd) * d.power(z, odd).to_poly();
  const NCPoly even_rel = concat_power(zp, 2 * k);

  const std::string base = "quasipower z=" + letters_to_string(z);
  auto out = weight_components(odd_rel, base + " power=" + std::to_string(odd));
  auto even = weight_components(even_rel, base + " power=" + std::to_string(2 * k));
  out.insert(out.end(), std::make_move_iterator(even.begin()), std::make_move_iterator(even.end()));
  return out;
}

Integer bounded_compositions(unsigned k, unsigned n, unsigned r) {
  // ways[s] = compositions of s into the parts placed so far
  std::vector<Integer> ways(k + 1, 0);
  ways[0] = 1;
  for (unsigned part = 0; part < n; ++part) {
    std::vector<Integer> next(k + 1, 0);
    for (unsigned s = 0; s <= k; ++s) {
      if (ways[s] == 0) continue;
      for (unsigned x = 1; x <= r && s + x <= k; ++x) next[s + x] += ways[s];
    }
    ways = std::move(next);
  }
  return ways[k];
}

Integer bounded_compositions_plus(unsigned k, unsigned n, unsigned r) {
  if (r == 0) return 0;
  return bounded_compositions(k, n, r) - bounded_compositions(k, n, r - 1);
}

std::vector<MZVIndex> twos_shuffle_one_three(unsigned n, unsigned k) {
  // Place the k twos among the 2n+1 gaps of (1,3)^n.
  std::vector<MZVIndex> out;
  std::vector<std::uint32_t> gaps(2 * n + 1, 0);
  const std::function<void(std::size_t, unsigned)> place = [&](std::size_t g, unsigned left) {
    if (g + 1 == gaps.size()) {
      gaps[g] = left;
      std::vector<std::uint32_t> entries;
      for (std::size_t i = 0; i < gaps.size(); ++i) {
        entries.insert(entries.end(), gaps[i], 2);
        if (i < 2 * n) entries.push_back(i % 2 ? 3 : 1);
      }
      out.emplace_back(std::move(entries));
      return;
    }
    for (unsigned c = 0; c <= left; ++c) {
      gaps[g] = c;
      place(g + 1, left - c);
    }
  };
  place(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned longest_run_of_twos(const MZVIndex& idx) {
  unsigned best = 0;
  unsigned run = 0;
  for (const auto e : idx.entries) {
    run = e == 2 ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

std::vector<MZVIndex> bunch_set(unsigned n, unsigned k, unsigned p) {
  std::vector<MZVIndex> out;
  for (auto& idx : twos_shuffle_one_three(n, k)) {
    if (longest_run_of_twos(idx) == p) out.push_back(std::move(idx));
  }
  return out;
}

namespace {

// Words of the given length in the even letters z_2, z_4, ..., z_{2 max_half}
// whose halved letters sum to half_sum.
std::vector<Word> even_letter_words(std::size_t length, unsigned half_sum, unsigned max_half) {
  std::vector<Word> out;
  std::vector<LetterIndex> cur;
  const std::function<void(unsigned)> rec = [&](unsigned left) {
    const std::size_t remaining = length - cur.size();
    if (remaining == 0) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    if (left < remaining) return;
    for (unsigned j = 1; j <= max_half && j <= left - (remaining - 1); ++j) {
      cur.push_back(2 * j);
      rec(left - j);
      cur.pop_back();
    }
  };
  rec(half_sum);
  return out;
}

// zeta({2}^m) = pi^{2m}/(2m+1)!, scaled.
PiMultiple twos_value(const Rational& scale, unsigned m) {
  return PiMultiple{scale * zeta_twos_closed_form(m), 2 * m};
}

Rational parity_sign(unsigned e) { return e % 2 ? Rational(-1) : Rational(1); }

}  // namespace

BunchRelation bunchsof2_relation(unsigned n, unsigned k, unsigned p) {
  if (n == 0 || p == 0) throw std::invalid_argument("bunchsof2_relation: n and p must be >= 1");
  const unsigned length = 2 * n + 1;
  const unsigned half = k + length;  // letters z_{2j} with sum of j = k + 2n + 1

  BunchRelation out;
  NCPoly lhs;
  for (const auto& w : even_letter_words(length, half, p + 1)) {
    if (std::find(w.begin(), w.end(), 2 * (p + 1)) != w.end()) lhs.add_term(w, 1);
  }
  // Each such word renders with depth 2n + k.
  lhs *= parity_sign(k);
  out.relation.lhs = std::move(lhs);
  out.relation.rendered = ic_render(out.relation.lhs);
  out.p_plus = bounded_compositions_plus(half, length, p + 1);
  out.bunch_value = twos_value(Rational(out.p_plus) / Rational(length), k + 2 * n);
  out.relation.closed_form = out.bunch_value;
  out.relation.provenance = "bunchsof2 n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p);

  out.bunch = bunch_set(n, k, p);
  std::map<MZVIndex, Rational> expected;
  for (const auto& idx : out.bunch) expected.emplace(idx, 1);
  out.sets_agree = !out.relation.rendered.regularized && out.relation.rendered.terms == expected;
  return out;
}

Relation refined_twos_relation(const std::vector<unsigned>& counts) {
  unsigned length = 0;
  unsigned half = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    length += counts[j];
    half += static_cast<unsigned>(j + 1) * counts[j];
  }
  if (length == 0) throw std::invalid_argument("refined_twos_relation: no letters requested");

  NCPoly lhs;
  for (const auto& w : even_letter_words(length, half, static_cast<unsigned>(counts.size()))) {
    std::vector<unsigned> seen(counts.size(), 0);
    for (const auto letter : w) ++seen[letter / 2 - 1];
    if (seen == counts) lhs.add_term(w, 1);
  }
  // Depth of each rendered index: (length - 1) ones and threes plus (half - length) twos.
  lhs *= parity_sign(half - 1);

  Relation rel;
  rel.lhs = std::move(lhs);
  rel.rendered = ic_render(rel.lhs);
  Rational coef = 0;
  if (length % 2 == 1) {
    Integer multinomial = factorial(length);
    for (const auto c : counts) multinomial /= factorial(c);
    coef = Rational(multinomial) / Rational(length);
  }
  rel.closed_form = twos_value(coef, half - 1);
  std::string desc;
  for (std::size_t j = 0; j < counts.size(); ++j) desc += (j ? "," : "") + std::to_string(counts[j]);
  rel.provenance = "refined counts=(" + desc + ")";
  return rel;
}

ShuffleSumCheck bowman_bradley(unsigned n, unsigned k) {
  if (4 * n + 2 * k > 12) throw std::invalid_argument("bowman_bradley: weight above 12 is out of range");
  if (n == 0 && k == 0) throw std::invalid_argument("bowman_bradley: (n, k) = (0, 0) is the empty sum");
  ShuffleSumCheck out;
  Relation& rel = out.relation;
  for (const auto& idx : twos_shuffle_one_three(n, k)) rel.rendered.add_term(idx, 1);
  out.word_count = rel.rendered.terms.size();
  out.expected_word_count = binomial(2 * n + k, k);

  const unsigned length = 2 * n + 1;
  const unsigned half = k + length;
  for (const auto& w : even_letter_words(length, half, k + 1)) rel.lhs.add_term(w, parity_sign(k));

  const Rational coef = Rational(binomial(2 * n + k, k)) / Rational(length * factorial(4 * n + 2 * k + 1));
  rel.closed_form = PiMultiple{coef, 4 * n + 2 * k};
  rel.provenance = "bowman-bradley n=" + std::to_string(n) + " k=" + std::to_string(k);
  return out;
}

VerifyReport verify_relation(const Relation& rel, MzvCache& cache, double tolerance) {
  VerifyReport rep;
  rep.tolerance = tolerance;
  rep.regularized = rel.regularized();
  long double lhs = 0;
  long double tail = 0;
  for (const auto& [idx, c] : rel.rendered.terms) {
    const MzvValue v = cache.get(idx);
    const long double cd = c.get_d();
    lhs += cd * v.value;
    tail += std::fabs(cd) * v.error_bound;
  }
  if (tail >= tolerance) {
    throw std::domain_error("verify_relation: evaluation error " + std::to_string(static_cast<double>(tail)) +
                            " at N = " + std::to_string(cache.params().cutoff) + " exceeds the tolerance");
  }
  const long double rhs = rel.closed_form ? rel.closed_form->value() : 0.0L;
  rep.lhs_value = static_cast<double>(lhs);
  rep.rhs_value = static_cast<double>(rhs);
  rep.residual = static_cast<double>(lhs - rhs);
  rep.tail = static_cast<double>(tail);
  rep.pass = std::fabs(lhs - rhs) < tail + tolerance;
  return rep;
}

VerifyReport verify_relation(const Relation& rel, const EvalParams& params, double tolerance) {
  MzvCache cache(params);
  return verify_relation(rel, cache, tolerance);
}

}  // namespace qshuffle
