#include "qshuffle/diamond.hpp"

#include <stdexcept>

namespace qshuffle {

LetterCombination::LetterCombination(Letter a, const Rational& c) {
  if (a.index == 0) throw std::invalid_argument("letter index must be >= 1");
  add_term(a.index, c);
}

void LetterCombination::add_term(LetterIndex index, const Rational& c) {
  if (c == 0) return;
  if (index == 0) throw std::invalid_argument("letter index must be >= 1");
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Rational& LetterCombination::coefficient(LetterIndex index) const {
  static const Rational zero_coefficient{0};
  const auto it = terms_.find(index);
  return it == terms_.end() ? zero_coefficient : it->second;
}

LetterCombination& LetterCombination::operator+=(const LetterCombination& rhs) {
  for (const auto& [i, c] : rhs.terms_) add_term(i, c);
  return *this;
}

LetterCombination& LetterCombination::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, coef] : terms_) coef *= c;
  return *this;
}

NCPoly LetterCombination::to_poly() const {
  NCPoly out;
  for (const auto& [i, c] : terms_) out.add_term(Word{i}, c);
  return out;
}

LetterCombination LetterCombination::from_poly(const NCPoly& p) {
  LetterCombination out;
  for (const auto& [w, c] : p) {
    if (w.size() != 1) throw std::invalid_argument("polynomial is not supported on single letters: " + p.to_string());
    out.add_term(w.front(), c);
  }
  return out;
}

DiamondProduct::DiamondProduct(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

DiamondProduct DiamondProduct::additive() {
  DiamondProduct d("additive", [](Letter a, Letter b) { return LetterCombination(Letter(a.index + b.index)); });
  d.additive_ = true;
  return d;
}

LetterCombination DiamondProduct::operator()(const LetterCombination& a, const LetterCombination& b) const {
  LetterCombination out;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) out += (ci * cj) * rule_(Letter(i), Letter(j));
  }
  return out;
}

LetterCombination DiamondProduct::fold(std::span<const LetterIndex> letters) const {
  if (letters.empty()) throw std::invalid_argument("diamond bracket of the empty word");
  LetterCombination acc{Letter(letters.front())};
  for (std::size_t i = 1; i < letters.size(); ++i) acc = (*this)(acc, LetterCombination(Letter(letters[i])));
  return acc;
}

LetterCombination DiamondProduct::power(const LetterCombination& z, unsigned n) const {
  if (n == 0) throw std::invalid_argument("diamond power must be >= 1");
  LetterCombination acc = z;
  for (unsigned i = 1; i < n; ++i) acc = (*this)(acc, z);
  return acc;
}

std::optional<std::string> DiamondProduct::validate(LetterIndex bound) const {
  for (LetterIndex a = 1; a <= bound; ++a) {
    for (LetterIndex b = 1; b <= bound; ++b) {
      const LetterCombination ab = rule_(Letter(a), Letter(b));
      if (ab != rule_(Letter(b), Letter(a))) {
        return "not commutative on (z" + std::to_string(a) + ", z" + std::to_string(b) + ")";
      }
      for (LetterIndex c = 1; c <= bound; ++c) {
        const LetterCombination lhs = (*this)(ab, LetterCombination(Letter(c)));
        const LetterCombination rhs = (*this)(LetterCombination(Letter(a)), rule_(Letter(b), Letter(c)));
        if (lhs != rhs) {
          return "not associative on (z" + std::to_string(a) + ", z" + std::to_string(b) + ", z" +
                 std::to_string(c) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace qshuffle
