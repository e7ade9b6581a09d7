#include "qshuffle/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qshuffle {

namespace {

// Dense truncated series including the constant term.
using Dense = std::vector<Rational>;

Dense multiply(const Dense& a, const Dense& b, unsigned degree) {
  Dense out(degree + 1, Rational(0));
  for (unsigned i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < b.size() && i + j <= degree; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Dense divide(const Dense& num, const Dense& den, unsigned degree) {
  if (den.empty() || den[0] == 0) throw std::domain_error("series division by a non-unit");
  Dense q(degree + 1, Rational(0));
  for (unsigned n = 0; n <= degree; ++n) {
    Rational acc = n < num.size() ? num[n] : Rational(0);
    for (unsigned k = 1; k <= n && k < den.size(); ++k) acc -= den[k] * q[n - k];
    q[n] = acc / den[0];
  }
  return q;
}

// Antiderivative with zero constant term.
Dense integrate(const Dense& a, unsigned degree) {
  Dense out(degree + 1, Rational(0));
  for (unsigned n = 1; n <= degree; ++n) {
    if (n - 1 < a.size()) out[n] = a[n - 1] / Rational(n);
  }
  return out;
}

Dense exp_like(unsigned degree, int parity) {
  // parity 0: cosh, 1: sinh, -1: exp
  Dense out(degree + 1, Rational(0));
  for (unsigned n = 0; n <= degree; ++n) {
    if (parity >= 0 && static_cast<int>(n % 2) != parity) continue;
    out[n] = Rational(1, 1) / Rational(factorial(n));
  }
  return out;
}

}  // namespace

FormalSeries::FormalSeries(unsigned degree) : coeffs_(degree + 1, Rational(0)) {
  if (degree == 0) throw std::invalid_argument("series truncation degree must be >= 1");
}

FormalSeries::FormalSeries(unsigned degree, const std::vector<Rational>& coefficients_from_1) : FormalSeries(degree) {
  for (unsigned k = 1; k <= degree && k <= coefficients_from_1.size(); ++k) coeffs_[k] = coefficients_from_1[k - 1];
}

const Rational& FormalSeries::operator[](unsigned k) const {
  if (k > degree()) {
    throw std::out_of_range("coefficient z^" + std::to_string(k) + " beyond truncation degree " +
                            std::to_string(degree()));
  }
  return coeffs_[k];
}

void FormalSeries::set(unsigned k, const Rational& c) {
  if (k == 0) throw std::invalid_argument("formal series have no constant term");
  if (k > degree()) throw std::out_of_range("coefficient beyond truncation degree");
  coeffs_[k] = c;
}

FormalSeries FormalSeries::identity(unsigned degree) {
  FormalSeries f(degree);
  f.set(1, 1);
  return f;
}

FormalSeries FormalSeries::tanh(unsigned degree) {
  const Dense q = divide(exp_like(degree, 1), exp_like(degree, 0), degree);
  return FormalSeries(degree, Dense(q.begin() + 1, q.end()));
}

FormalSeries FormalSeries::atanh(unsigned degree) {
  // d/dx atanh(x) = 1/(1 - x^2)
  Dense one_minus_x2(3, Rational(0));
  one_minus_x2[0] = 1;
  one_minus_x2[2] = -1;
  const Dense q = integrate(divide(Dense{Rational(1)}, one_minus_x2, degree), degree);
  return FormalSeries(degree, Dense(q.begin() + 1, q.end()));
}

FormalSeries FormalSeries::expm1(unsigned degree) {
  const Dense e = exp_like(degree, -1);
  return FormalSeries(degree, Dense(e.begin() + 1, e.end()));
}

FormalSeries FormalSeries::log1p(unsigned degree) {
  // d/dx log(1+x) = 1/(1 + x)
  const Dense q = integrate(divide(Dense{Rational(1)}, Dense{Rational(1), Rational(1)}, degree), degree);
  return FormalSeries(degree, Dense(q.begin() + 1, q.end()));
}

FormalSeries FormalSeries::named(const std::string& name, unsigned degree) {
  if (name == "tanh") return tanh(degree);
  if (name == "atanh") return atanh(degree);
  if (name == "exp" || name == "expm1") return expm1(degree);
  if (name == "log" || name == "log1p") return log1p(degree);
  if (name == "identity") return identity(degree);
  throw std::invalid_argument("unknown series: " + name);
}

FormalSeries FormalSeries::compose(const FormalSeries& g) const {
  const unsigned d = std::min(degree(), g.degree());
  const Dense inner(g.coeffs_.begin(), g.coeffs_.begin() + d + 1);
  // Horner: f(g) = g (c_1 + g (c_2 + ... ))
  Dense acc(d + 1, Rational(0));
  for (unsigned k = d; k >= 1; --k) {
    acc = multiply(acc, inner, d);
    acc[0] += coeffs_[k];
  }
  acc = multiply(acc, inner, d);
  return FormalSeries(d, Dense(acc.begin() + 1, acc.end()));
}

FormalSeries FormalSeries::compose_inverse() const {
  if (coeffs_[1] == 0) throw std::domain_error("series with zero linear coefficient has no compositional inverse");
  const unsigned d = degree();
  FormalSeries g(d);
  g.set(1, Rational(1) / coeffs_[1]);
  // Fix b_n so that the z^n coefficient of f(g) vanishes; b_n enters it as c_1 b_n.
  for (unsigned n = 2; n <= d; ++n) {
    const FormalSeries fg = compose(g);
    g.set(n, -fg[n] / coeffs_[1]);
  }
  return g;
}

std::string FormalSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 1; k <= degree(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k].get_str() << ")z^" << k;
  }
  if (first) os << "0";
  os << " + O(z^" << degree() + 1 << ")";
  return os.str();
}

FormalSeries series_tanh(unsigned degree) { return FormalSeries::tanh(degree); }
FormalSeries series_atanh(unsigned degree) { return FormalSeries::atanh(degree); }
FormalSeries series_expm1(unsigned degree) { return FormalSeries::expm1(degree); }
FormalSeries series_log1p(unsigned degree) { return FormalSeries::log1p(degree); }
FormalSeries series_compose_inverse(const FormalSeries& f) { return f.compose_inverse(); }

}  // namespace qshuffle
