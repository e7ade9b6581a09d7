#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qshuffle {

/// A composition (i_1, ..., i_l) of n = i_1 + ... + i_l into positive parts.
class Composition {
 public:
  Composition(std::initializer_list<std::uint32_t> parts);
  explicit Composition(std::vector<std::uint32_t> parts);

  [[nodiscard]] const std::vector<std::uint32_t>& parts() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] std::uint64_t total() const { return total_; }
  [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return parts_[i]; }

  auto operator<=>(const Composition& rhs) const { return parts_ <=> rhs.parts_; }
  bool operator==(const Composition& rhs) const { return parts_ == rhs.parts_; }

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t total_ = 0;
};

/// All 2^(n-1) compositions of n >= 1.
std::vector<Composition> compositions(std::uint32_t n);

/// Compositions of r into exactly m parts; empty when m > r or m == 0.
std::vector<Composition> compositions_into(std::uint32_t r, std::uint32_t m);

/// J o I: groups consecutive parts of I according to J. Requires
/// total(J) == length(I); throws std::invalid_argument otherwise.
Composition compose_compositions(const Composition& outer, const Composition& inner);

}  // namespace qshuffle
