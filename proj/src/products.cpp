#include "qshuffle/products.hpp"

namespace qshuffle {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::shuffle:
      return "shuffle";
    case ProductKind::quasi_shuffle:
      return "quasi-shuffle";
    case ProductKind::gen_quasi_shuffle:
      return "generalised quasi-shuffle";
  }
  return "?";
}

namespace {

// c . p: prepends each letter of c to every word of p.
NCPoly prepend_combination(const LetterCombination& c, const NCPoly& p) {
  NCPoly out;
  for (const auto& [i, a] : c) {
    for (const auto& [w, b] : p) out.add_term(Word{i} + w, a * b);
  }
  return out;
}

}  // namespace

NCPoly letter_action(const LetterCombination& a, const NCPoly& p, const DiamondProduct& d) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    if (w.empty()) continue;
    const LetterCombination head = d(a, LetterCombination(Letter(w.front())));
    const Word rest = w.tail();
    for (const auto& [i, ci] : head) out.add_term(Word{i} + rest, c * ci);
  }
  return out;
}

ProductEngine::ProductEngine(ProductKind kind, DiamondProduct diamond) : kind_(kind), diamond_(std::move(diamond)) {}

const NCPoly& ProductEngine::multiply_words(const Word& u, const Word& v) const {
  const auto key = std::make_pair(u, v);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

  NCPoly result;
  if (u.empty()) {
    result = NCPoly(v);
  } else if (v.empty()) {
    result = NCPoly(u);
  } else {
    const Word a{u.front()};
    const Word b{v.front()};
    const Word u_rest = u.tail();
    const Word v_rest = v.tail();
    result = prepend(a, multiply_words(u_rest, v));
    result += prepend(b, multiply_words(u, v_rest));
    if (kind_ != ProductKind::shuffle) {
      const LetterCombination merged = diamond_(Letter(u.front()), Letter(v.front()));
      const NCPoly& inner = multiply_words(u_rest, v_rest);
      if (kind_ == ProductKind::quasi_shuffle) {
        result += prepend_combination(merged, inner);
      } else {
        result -= letter_action(merged, inner, diamond_);
      }
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

NCPoly ProductEngine::multiply(const NCPoly& p, const NCPoly& q) const {
  NCPoly out;
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) {
      const Rational ab = a * b;
      for (const auto& [w, c] : multiply_words(u, v)) out.add_term(w, ab * c);
    }
  }
  return out;
}

NCPoly ProductEngine::power(const NCPoly& p, unsigned n) const {
  NCPoly out = NCPoly::one();
  for (unsigned i = 0; i < n; ++i) out = multiply(out, p);
  return out;
}

NCPoly shuffle(const NCPoly& u, const NCPoly& v) { return ProductEngine(ProductKind::shuffle).multiply(u, v); }

NCPoly hoffman_quasi_shuffle(const NCPoly& u, const NCPoly& v, const DiamondProduct& d) {
  return ProductEngine(ProductKind::quasi_shuffle, d).multiply(u, v);
}

NCPoly gen_quasi_shuffle(const NCPoly& u, const NCPoly& v, const DiamondProduct& d) {
  return ProductEngine(ProductKind::gen_quasi_shuffle, d).multiply(u, v);
}

NCPoly block_shuffle(const NCPoly& u, const NCPoly& v) {
  return gen_quasi_shuffle(u, v, DiamondProduct::additive());
}

}  // namespace qshuffle
