#include "qshuffle/hopf.hpp"

#include "qshuffle/compositions.hpp"
#include "qshuffle/psi.hpp"

#include <sstream>
#include <stdexcept>

namespace qshuffle {

TensorPoly::TensorPoly(const Word& left, const Word& right, const Rational& c) { add_term(left, right, c); }

TensorPoly TensorPoly::tensor(const NCPoly& p, const NCPoly& q) {
  TensorPoly out;
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) out.add_term(u, v, a * b);
  }
  return out;
}

void TensorPoly::add_term(const Word& left, const Word& right, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Rational& TensorPoly::coefficient(const Word& left, const Word& right) const {
  static const Rational zero_coefficient{0};
  const auto it = terms_.find(Key{left, right});
  return it == terms_.end() ? zero_coefficient : it->second;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorPoly& TensorPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coef] : terms_) coef *= c;
  return *this;
}

TensorPoly TensorPoly::swapped() const {
  TensorPoly out;
  for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

TensorPoly TensorPoly::bidegree_component(std::size_t r, std::size_t s) const {
  TensorPoly out;
  for (const auto& [k, c] : terms_) {
    if (k.first.size() == r && k.second.size() == s) out.add_term(k.first, k.second, c);
  }
  return out;
}

std::string TensorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    os << k.first.to_string() << "(x)" << k.second.to_string();
  }
  return os.str();
}

TensorPoly tensor_concat(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

TensorPoly tensor_product(const TensorPoly& a, const TensorPoly& b, const ProductEngine& engine) {
  TensorPoly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const NCPoly& left = engine.multiply_words(ka.first, kb.first);
      const NCPoly& right = engine.multiply_words(ka.second, kb.second);
      const Rational c = ca * cb;
      for (const auto& [u, cu] : left) {
        for (const auto& [v, cv] : right) out.add_term(u, v, c * cu * cv);
      }
    }
  }
  return out;
}

TensorPoly apply_each(const TensorPoly& t, const std::function<NCPoly(const Word&)>& left,
                      const std::function<NCPoly(const Word&)>& right) {
  TensorPoly out;
  for (const auto& [k, c] : t) out += c * TensorPoly::tensor(left(k.first), right(k.second));
  return out;
}

TensorPoly delta_decon(const NCPoly& p) {
  TensorPoly out;
  for (const auto& [w, c] : p) {
    for (std::size_t k = 0; k <= w.size(); ++k) out.add_term(w.subword(0, k), w.subword(k, w.size() - k), c);
  }
  return out;
}

Rational counit(const NCPoly& p) { return p.coefficient(Word{}); }

NCPoly antipode(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p) out.add_term(w.reversed(), w.size() % 2 ? -c : c);
  return out;
}

TensorPoly delta_bl_letter(Letter z) {
  TensorPoly out;
  for (std::uint32_t parts = 1; parts <= z.index; parts += 2) {
    const std::size_t k = (parts - 1) / 2;
    const Rational sign = k % 2 ? -1 : 1;
    for (const auto& comp : compositions_into(z.index, parts)) {
      const Word w(comp.parts());
      const Word head = w.subword(0, k);
      const Word rest = w.subword(k, k + 1);
      out.add_term(head, rest, sign);
      out.add_term(rest, head, sign);
    }
  }
  return out;
}

TensorPoly delta_bl(const NCPoly& p, const DiamondProduct& d) {
  if (!d.is_additive()) {
    throw std::invalid_argument("delta_bl: letter factorizations are only enumerable for the additive diamond");
  }
  std::map<LetterIndex, TensorPoly> letter_cache;
  TensorPoly out;
  for (const auto& [w, c] : p) {
    TensorPoly acc = TensorPoly::one();
    for (const auto i : w) {
      auto it = letter_cache.find(i);
      if (it == letter_cache.end()) it = letter_cache.emplace(i, delta_bl_letter(Letter(i))).first;
      acc = tensor_concat(acc, it->second);
    }
    out += c * acc;
  }
  return out;
}

NCPoly phi(Letter z) {
  NCPoly out;
  for (std::uint32_t parts = 1; parts <= z.index; parts += 2) {
    const Rational weight(1, parts);
    for (const auto& comp : compositions_into(z.index, parts)) out.add_term(Word(comp.parts()), weight);
  }
  return out;
}

TensorPoly phi_primitive_defect(Letter z) {
  const NCPoly p = phi(z);
  return delta_bl(p) - TensorPoly::tensor(p, NCPoly::one()) - TensorPoly::tensor(NCPoly::one(), p);
}

bool check_phi_primitive(Letter z, std::size_t rs_bound) {
  const TensorPoly defect = phi_primitive_defect(z);
  for (const auto& [k, c] : defect) {
    const std::size_t r = k.first.size();
    const std::size_t s = k.second.size();
    if (r > 0 && r <= s && s <= rs_bound) return false;
  }
  return true;
}

Rational q_m_identity(long r, long s, long m) {
  Rational sum = 0;
  for (long q = 0; q <= m; ++q) {
    const long top = s - r + q;
    if (top == 0) {
      throw std::domain_error("Q_m: division by zero at q = " + std::to_string(q) + " (s - r + q = 0)");
    }
    const Rational term = Rational(binomial(top, m) * binomial(m, q)) / Rational(top);
    sum += (q % 2 ? -term : term);
  }
  return sum;
}

bool check_delta_star_homomorphism(const Word& u, const Word& v, const ProductEngine& engine) {
  const TensorPoly lhs = delta_decon(engine.multiply_words(u, v));
  const TensorPoly rhs = tensor_product(delta_decon(NCPoly(u)), delta_decon(NCPoly(v)), engine);
  return lhs == rhs;
}

bool check_delta_star_homomorphism(const Word& u, const Word& v, const DiamondProduct& d) {
  return check_delta_star_homomorphism(u, v, ProductEngine(ProductKind::gen_quasi_shuffle, d));
}

bool check_antipode(const Word& w, const ProductEngine& engine) {
  if (w.empty()) throw std::invalid_argument("check_antipode: the identity is stated for nonempty words");
  NCPoly left_sum;
  NCPoly right_sum;
  for (std::size_t k = 0; k <= w.size(); ++k) {
    const Word head = w.subword(0, k);
    const Word rest = w.subword(k, w.size() - k);
    left_sum += engine.multiply(antipode(NCPoly(head)), NCPoly(rest));
    right_sum += engine.multiply(NCPoly(head), antipode(NCPoly(rest)));
  }
  return left_sum.is_zero() && right_sum.is_zero();
}

bool check_antipode(const Word& w, const DiamondProduct& d) {
  return check_antipode(w, ProductEngine(ProductKind::gen_quasi_shuffle, d));
}

std::optional<Word> find_psi_hopf_counterexample(std::size_t max_length, LetterIndex max_letter) {
  const unsigned degree = static_cast<unsigned>(std::max<std::size_t>(max_length, 1));
  const FormalSeries tanh = FormalSeries::tanh(degree);
  const auto psi_word = [&](const Word& w) { return psi(tanh, NCPoly(w)); };
  for (const auto& w : all_words_up_to(max_letter, max_length)) {
    const TensorPoly lhs = delta_decon(psi_word(w));
    const TensorPoly rhs = apply_each(delta_decon(NCPoly(w)), psi_word, psi_word);
    if (lhs != rhs) return w;
  }
  return std::nullopt;
}

bool check_psi_hopf_compat(std::size_t max_length, LetterIndex max_letter) {
  return !find_psi_hopf_counterexample(max_length, max_letter).has_value();
}

}  // namespace qshuffle
