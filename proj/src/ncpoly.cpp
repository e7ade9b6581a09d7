#include "qshuffle/ncpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qshuffle {

namespace {

void check_letters(std::span<const LetterIndex> letters) {
  for (const auto i : letters) {
    if (i == 0) throw std::invalid_argument("letter index must be >= 1");
  }
}

}  // namespace

Word::Word(std::initializer_list<LetterIndex> letters) : letters_(letters) { check_letters(letters_); }

Word::Word(std::vector<LetterIndex> letters) : letters_(std::move(letters)) { check_letters(letters_); }

Word::Word(std::span<const LetterIndex> letters) : letters_(letters.begin(), letters.end()) {
  check_letters(letters_);
}

std::uint64_t Word::index_sum() const {
  return std::accumulate(letters_.begin(), letters_.end(), std::uint64_t{0});
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto i : letters_) out += "z" + std::to_string(i);
  return out;
}

NCPoly::NCPoly(const Word& w, const Rational& c) { add_term(w, c); }

const Rational& NCPoly::coefficient(const Word& w) const {
  static const Rational zero_coefficient{0};
  const auto it = terms_.find(w);
  return it == terms_.end() ? zero_coefficient : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t NCPoly::max_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

NCPoly NCPoly::length_component(std::size_t length) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    if (w.size() == length) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

NCPoly NCPoly::index_sum_component(std::uint64_t sum) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    if (w.index_sum() == sum) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << w.to_string();
    }
  }
  return os.str();
}

NCPoly add(const NCPoly& p, const NCPoly& q) { return p + q; }

NCPoly scale(const Rational& c, const NCPoly& p) { return c * p; }

NCPoly concat(const NCPoly& p, const NCPoly& q) {
  NCPoly out;
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) out.add_term(u + v, a * b);
  }
  return out;
}

NCPoly concat_power(const NCPoly& p, unsigned n) {
  NCPoly out = NCPoly::one();
  for (unsigned i = 0; i < n; ++i) out = concat(out, p);
  return out;
}

NCPoly prepend(const Word& w, const NCPoly& p) {
  NCPoly out;
  for (const auto& [u, c] : p) out.add_term(w + u, c);
  return out;
}

Rational pair(const NCPoly& p, const NCPoly& q) {
  Rational sum = 0;
  const NCPoly& small = p.size() <= q.size() ? p : q;
  const NCPoly& large = p.size() <= q.size() ? q : p;
  for (const auto& [w, c] : small) sum += c * large.coefficient(w);
  return sum;
}

std::vector<Word> all_words(LetterIndex max_letter, std::size_t length) {
  std::vector<Word> out;
  std::vector<LetterIndex> cur(length, 1);
  if (max_letter == 0) return length == 0 ? std::vector<Word>{Word{}} : out;
  while (true) {
    out.emplace_back(cur);
    std::size_t pos = length;
    while (pos > 0 && cur[pos - 1] == max_letter) {
      cur[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++cur[pos - 1];
  }
  return out;
}

std::vector<Word> all_words_up_to(LetterIndex max_letter, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto words = all_words(max_letter, n);
    out.insert(out.end(), words.begin(), words.end());
  }
  return out;
}

}  // namespace qshuffle
