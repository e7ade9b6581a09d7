#pragma once

#include "qshuffle/rational.hpp"

#include <string>
#include <vector>

namespace qshuffle {

/// Truncated power series c_1 z + c_2 z^2 + ... + c_D z^D with rational
/// coefficients and no constant term.
class FormalSeries {
 public:
  explicit FormalSeries(unsigned degree);
  FormalSeries(unsigned degree, const std::vector<Rational>& coefficients_from_1);

  static FormalSeries identity(unsigned degree);
  static FormalSeries tanh(unsigned degree);
  static FormalSeries atanh(unsigned degree);
  static FormalSeries expm1(unsigned degree);
  static FormalSeries log1p(unsigned degree);
  /// "tanh", "atanh", "exp" (e^z - 1), "log" (log(1+z)), "identity".
  static FormalSeries named(const std::string& name, unsigned degree);

  [[nodiscard]] unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  /// Coefficient of z^k; zero for k = 0. Throws std::out_of_range beyond the truncation degree.
  [[nodiscard]] const Rational& operator[](unsigned k) const;
  void set(unsigned k, const Rational& c);

  /// f(g(z)) truncated at min(degree(), g.degree()).
  [[nodiscard]] FormalSeries compose(const FormalSeries& g) const;
  /// The compositional inverse; throws std::domain_error if c_1 = 0.
  [[nodiscard]] FormalSeries compose_inverse() const;

  bool operator==(const FormalSeries&) const = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;  // coeffs_[0] == 0 always
};

FormalSeries series_tanh(unsigned degree);
FormalSeries series_atanh(unsigned degree);
FormalSeries series_expm1(unsigned degree);
FormalSeries series_log1p(unsigned degree);
FormalSeries series_compose_inverse(const FormalSeries& f);

}  // namespace qshuffle
