#include "qshuffle/compositions.hpp"

#include <numeric>
#include <stdexcept>

namespace qshuffle {

Composition::Composition(std::initializer_list<std::uint32_t> parts) : Composition(std::vector<std::uint32_t>(parts)) {}

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a composition has at least one part");
  for (const auto p : parts_) {
    if (p == 0) throw std::invalid_argument("composition parts must be positive");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Composition> compositions(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("compositions(n) requires n >= 1");
  if (n > 30) throw std::invalid_argument("compositions(n): n too large to enumerate");
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  // Bit i of the mask set means a cut after position i + 1.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<std::uint32_t> parts;
    std::uint32_t run = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  return out;
}

namespace {

void compositions_into_rec(std::uint32_t remaining, std::uint32_t parts_left, std::vector<std::uint32_t>& cur,
                           std::vector<Composition>& out) {
  if (parts_left == 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint32_t p = 1; p + (parts_left - 1) <= remaining; ++p) {
    cur.push_back(p);
    compositions_into_rec(remaining - p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_into(std::uint32_t r, std::uint32_t m) {
  std::vector<Composition> out;
  if (m == 0 || m > r) return out;
  std::vector<std::uint32_t> cur;
  compositions_into_rec(r, m, cur, out);
  return out;
}

Composition compose_compositions(const Composition& outer, const Composition& inner) {
  if (outer.total() != inner.length()) {
    throw std::invalid_argument("compose_compositions: " + outer.to_string() + " does not partition the " +
                                std::to_string(inner.length()) + " parts of " + inner.to_string());
  }
  std::vector<std::uint32_t> parts;
  std::size_t pos = 0;
  for (const auto group : outer.parts()) {
    std::uint32_t sum = 0;
    for (std::uint32_t k = 0; k < group; ++k) sum += inner[pos++];
    parts.push_back(sum);
  }
  return Composition(std::move(parts));
}

}  // namespace qshuffle
