#include "qshuffle/blocks.hpp"

#include <numeric>
#include <stdexcept>

namespace qshuffle {

namespace {

using Bits = std::vector<std::uint8_t>;

void check_bits(const Bits& bits) {
  for (const auto b : bits) {
    if (b > 1) throw std::invalid_argument("binary word letters must be e0 or e1");
  }
}

}  // namespace

BinaryWord::BinaryWord(std::initializer_list<std::uint8_t> b) : bits(b) { check_bits(bits); }

BinaryWord::BinaryWord(std::vector<std::uint8_t> b) : bits(std::move(b)) { check_bits(bits); }

bool BinaryWord::integral_shaped() const { return bits.size() >= 2 && bits.front() == 0 && bits.back() == 1; }

bool BinaryWord::convergent() const {
  if (!integral_shaped()) return false;
  if (bits.size() == 2) return true;
  return bits[1] == 1 && bits[bits.size() - 2] == 0;
}

BinaryWord BinaryWord::interior() const {
  if (bits.size() < 2) throw std::invalid_argument("binary word too short to have an interior");
  return BinaryWord(Bits(bits.begin() + 1, bits.end() - 1));
}

std::string BinaryWord::to_string() const {
  std::string out;
  for (const auto b : bits) out += b ? "e1" : "e0";
  return out.empty() ? "1" : out;
}

BinaryWord BinaryWord::parse(const std::string& text) {
  Bits bits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == ',') continue;
    if (c == 'e' && i + 1 < text.size()) continue;
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
      continue;
    }
    throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in binary word");
  }
  return BinaryWord(std::move(bits));
}

MZVIndex::MZVIndex(std::initializer_list<std::uint32_t> e) : MZVIndex(std::vector<std::uint32_t>(e)) {}

MZVIndex::MZVIndex(std::vector<std::uint32_t> e) : entries(std::move(e)) {
  for (const auto n : entries) {
    if (n == 0) throw std::invalid_argument("MZV index entries must be positive");
  }
}

std::uint64_t MZVIndex::weight() const { return std::accumulate(entries.begin(), entries.end(), std::uint64_t{0}); }

bool MZVIndex::convergent() const { return entries.empty() || entries.back() >= 2; }

std::string MZVIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

BinaryWord phi_index(const MZVIndex& idx) {
  Bits bits{0};
  for (const auto n : idx.entries) {
    bits.push_back(1);
    bits.insert(bits.end(), n - 1, 0);
  }
  bits.push_back(1);
  return BinaryWord(std::move(bits));
}

BinaryWord z_word_to_binary(const Word& w) {
  if (w.empty()) throw std::invalid_argument("z_word_to_binary: empty word");
  Bits bits;
  std::uint8_t next = 0;
  for (const auto len : w) {
    // Each block alternates and starts with the previous block's last letter.
    for (std::uint32_t k = 0; k < len; ++k) {
      bits.push_back(next);
      next ^= 1;
    }
    next ^= 1;
  }
  return BinaryWord(std::move(bits));
}

Word block_decompose(const BinaryWord& b) {
  if (b.empty()) throw std::invalid_argument("block_decompose: empty binary word");
  if (b.bits.front() != 0) throw std::invalid_argument("block_decompose: word must start with e0");
  std::vector<LetterIndex> lengths;
  LetterIndex run = 1;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b.bits[i] == b.bits[i - 1]) {
      lengths.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  lengths.push_back(run);
  return Word(std::move(lengths));
}

MZVIndex binary_to_index(const BinaryWord& b) {
  if (!b.convergent()) {
    throw std::invalid_argument("binary_to_index: " + b.to_string() + " is not of convergent integral shape");
  }
  std::vector<std::uint32_t> entries;
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    if (b.bits[i] == 1) {
      entries.push_back(1);
    } else {
      ++entries.back();
    }
  }
  return MZVIndex(std::move(entries));
}

bool parity_vanishes(const Word& w) { return z_word_to_binary(w).bits.back() == 0; }

bool parity_vanishes_arithmetic(const Word& w) {
  if (w.empty()) throw std::invalid_argument("parity_vanishes_arithmetic: empty word");
  return (w.index_sum() % 2) == (w.size() % 2);
}

void add_term(BinaryPoly& p, const BinaryWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

namespace {

void shuffle_rec(const Bits& u, std::size_t i, const Bits& v, std::size_t j, Bits& cur, BinaryPoly& out) {
  if (i == u.size() && j == v.size()) {
    add_term(out, BinaryWord(cur), 1);
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, cur, out);
    cur.pop_back();
  }
}

using TPoly = std::vector<BinaryPoly>;

void add_scaled(TPoly& acc, const TPoly& x, const Rational& c, std::size_t shift) {
  if (acc.size() < x.size() + shift) acc.resize(x.size() + shift);
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (const auto& [w, a] : x[k]) add_term(acc[k + shift], w, c * a);
  }
}

// Regularizes an interior word: the shuffle homomorphism fixing convergent
// words and sending both single letters to T.
class Regularizer {
 public:
  const TPoly& run(const Bits& x) {
    if (const auto it = memo_.find(x); it != memo_.end()) return it->second;
    TPoly result;
    if (!x.empty() && x.back() == 1) {
      // x = v 1^m:  v1^{m-1} sh 1 = m v1^m + sum over 1 inserted strictly inside v.
      std::size_t m = 0;
      while (m < x.size() && x[x.size() - 1 - m] == 1) ++m;
      const Bits v(x.begin(), x.end() - static_cast<std::ptrdiff_t>(m));
      const Bits shorter(x.begin(), x.end() - 1);
      const Rational inv_m(1, static_cast<unsigned long>(m));
      add_scaled(result, run(shorter), inv_m, 1);
      for (std::size_t p = 0; p < v.size(); ++p) {
        Bits y = v;
        y.insert(y.begin() + static_cast<std::ptrdiff_t>(p), 1);
        y.insert(y.end(), m - 1, 1);
        add_scaled(result, run(y), -inv_m, 0);
      }
    } else if (!x.empty() && x.front() == 0) {
      // x = 0^m v:  0 sh 0^{m-1}v = m 0^m v + sum over 0 inserted strictly after v's first letter.
      std::size_t m = 0;
      while (m < x.size() && x[m] == 0) ++m;
      const Bits v(x.begin() + static_cast<std::ptrdiff_t>(m), x.end());
      const Bits shorter(x.begin() + 1, x.end());
      const Rational inv_m(1, static_cast<unsigned long>(m));
      add_scaled(result, run(shorter), inv_m, 1);
      for (std::size_t p = 1; p <= v.size(); ++p) {
        Bits y(m - 1, 0);
        y.insert(y.end(), v.begin(), v.end());
        y.insert(y.begin() + static_cast<std::ptrdiff_t>(m - 1 + p), 0);
        add_scaled(result, run(y), -inv_m, 0);
      }
    } else {
      result.resize(1);
      add_term(result[0], BinaryWord(x), 1);
    }
    if (result.empty()) result.resize(1);
    return memo_.emplace(x, std::move(result)).first->second;
  }

 private:
  std::map<Bits, TPoly> memo_;
};

}  // namespace

BinaryPoly shuffle_binary(const Bits& u, const Bits& v) {
  BinaryPoly out;
  Bits cur;
  shuffle_rec(u, 0, v, 0, cur, out);
  return out;
}

RegularizedWord shuffle_regularize(const BinaryWord& b) {
  if (!b.integral_shaped()) {
    throw std::invalid_argument("shuffle_regularize: " + b.to_string() + " does not start with e0 and end with e1");
  }
  Regularizer reg;
  const TPoly interior = reg.run(b.interior().bits);
  RegularizedWord out;
  out.by_t_degree.resize(std::max<std::size_t>(interior.size(), 1));
  for (std::size_t k = 0; k < interior.size(); ++k) {
    for (const auto& [w, c] : interior[k]) {
      Bits full{0};
      full.insert(full.end(), w.bits.begin(), w.bits.end());
      full.push_back(1);
      add_term(out.by_t_degree[k], BinaryWord(std::move(full)), c);
    }
  }
  return out;
}

}  // namespace qshuffle
