#include "qshuffle/lyndon.hpp"

#include "qshuffle/compositions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qshuffle {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const auto letters = w.letters();
  for (std::size_t i = 1; i < letters.size(); ++i) {
    const auto suffix = letters.subspan(i);
    if (!std::lexicographical_compare(letters.begin(), letters.end(), suffix.begin(), suffix.end())) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(LetterIndex max_letter, std::size_t length) {
  std::vector<Word> out;
  if (max_letter == 0 || length == 0) return out;
  // Duval (1988): successive Lyndon words of length <= n in lexicographic order.
  std::vector<LetterIndex> w{1};
  while (!w.empty()) {
    if (w.size() == length) out.emplace_back(w);
    const std::size_t m = w.size();
    while (w.size() < length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == max_letter) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::vector<Word> lyndon_words_of_weight(std::uint32_t weight) {
  std::vector<Word> out;
  if (weight == 0) return out;
  for (const auto& comp : compositions(weight)) {
    Word w(comp.parts());
    if (is_lyndon(w)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> cfl_factorize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cfl_factorize: empty word");
  std::vector<Word> factors;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && w[k] <= w[j]) {
      k = (w[k] < w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      factors.push_back(w.subword(i, j - k));
      i += j - k;
    }
  }
  return factors;
}

void LyndonBasisExpr::add_term(std::vector<Word> factors, const Rational& c) {
  if (c == 0) return;
  std::sort(factors.begin(), factors.end());
  auto [it, inserted] = terms.try_emplace(std::move(factors), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string LyndonBasisExpr::to_string() const {
  if (terms.empty()) return "0";
  const std::string op = product == ProductKind::shuffle ? " sh " : " * ";
  std::ostringstream os;
  bool first = true;
  for (const auto& [factors, c] : terms) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rational mag = abs(c);
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    if (factors.size() > 1) os << "(";
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? op : "") << factors[i].to_string();
    if (factors.size() > 1) os << ")";
  }
  return os.str();
}

NCPoly expand(const LyndonBasisExpr& expr, const DiamondProduct& d) {
  const ProductEngine engine(expr.product, d);
  NCPoly out;
  for (const auto& [factors, c] : expr.terms) {
    NCPoly term = NCPoly::one();
    for (const auto& f : factors) term = engine.multiply(term, NCPoly(f));
    out += c * term;
  }
  return out;
}

namespace {

// For w with CFL factors l_1 >= ... >= l_k, the largest word of
// l_1 sh ... sh l_k is w, with coefficient the product of the factorials of
// the factor multiplicities.
Rational multiplicity_factor(const std::vector<Word>& factors) {
  Integer denom = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= factors.size(); ++i) {
    if (i < factors.size() && factors[i] == factors[i - 1]) {
      ++run;
    } else {
      denom *= factorial(static_cast<unsigned>(run));
      run = 1;
    }
  }
  return Rational(denom);
}

}  // namespace

LyndonBasisExpr decompose_shuffle(const NCPoly& p) {
  LyndonBasisExpr out;
  out.product = ProductKind::shuffle;
  const ProductEngine engine(ProductKind::shuffle);
  NCPoly rest = p;
  while (!rest.is_zero()) {
    const Word top = rest.terms().rbegin()->first;
    const Rational coef = rest.terms().rbegin()->second;
    if (top.empty()) {
      out.add_term({}, coef);
      rest.add_term(top, -coef);
      continue;
    }
    const std::vector<Word> factors = cfl_factorize(top);
    const Rational c = coef / multiplicity_factor(factors);
    NCPoly product = NCPoly::one();
    for (const auto& f : factors) product = engine.multiply(product, NCPoly(f));
    out.add_term(factors, c);
    rest -= c * product;
  }
  return out;
}

LyndonBasisExpr decompose_star(const NCPoly& p, const DiamondProduct& d) {
  LyndonBasisExpr out;
  out.product = ProductKind::gen_quasi_shuffle;
  const ProductEngine engine(ProductKind::gen_quasi_shuffle, d);
  NCPoly rest = p;
  while (!rest.is_zero()) {
    const std::size_t top_length = rest.max_length();
    const LyndonBasisExpr top = decompose_shuffle(rest.length_component(top_length));
    for (const auto& [factors, c] : top.terms) {
      NCPoly product = NCPoly::one();
      for (const auto& f : factors) product = engine.multiply(product, NCPoly(f));
      rest -= c * product;
      out.add_term(factors, c);
    }
    if (rest.max_length() >= top_length && !rest.length_component(top_length).is_zero()) {
      throw std::logic_error("decompose_star: leading length did not drop; the diamond product is not length-lowering");
    }
  }
  return out;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0)");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Integer lyndon_count_from_dimensions(const std::vector<Integer>& dims, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("lyndon_count: n must be >= 1");
  if (dims.size() <= n || dims[0] != 1) throw std::invalid_argument("lyndon_count: need dims[0] = 1 and dims up to n");
  // x Z'(x) = Z(x) C(x)  =>  k a_k = sum_{j=1}^k c_j a_{k-j}
  std::vector<Integer> c(n + 1, 0);
  for (std::uint32_t k = 1; k <= n; ++k) {
    Integer acc = Integer(k) * dims[k];
    for (std::uint32_t j = 1; j < k; ++j) acc -= c[j] * dims[k - j];
    c[k] = acc;
  }
  Integer sum = 0;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d == 0) sum += mobius(n / d) * c[d];
  }
  if (sum % n != 0) throw std::logic_error("lyndon_count: Moebius sum not divisible by n");
  return sum / n;
}

Integer lyndon_count(LyndonGrading grading, std::uint32_t n, std::uint32_t letters) {
  std::vector<Integer> dims(n + 1);
  dims[0] = 1;
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (grading == LyndonGrading::by_length) {
      // Z(x) = 1/(1 - Mx)
      mpz_ui_pow_ui(dims[k].get_mpz_t(), letters, k);
    } else {
      // Z(x) = (1 - x)/(1 - 2x): 2^(k-1) words of weight k
      mpz_ui_pow_ui(dims[k].get_mpz_t(), 2, k - 1);
    }
  }
  return lyndon_count_from_dimensions(dims, n);
}

}  // namespace qshuffle
