#include "qshuffle/psi.hpp"

#include "qshuffle/products.hpp"

#include <sstream>
#include <stdexcept>

namespace qshuffle {

LetterCombination bracket(const Word& w, const DiamondProduct& d) { return d.fold(w.letters()); }

NCPoly composition_action(const Composition& comp, const Word& w, const DiamondProduct& d) {
  if (comp.total() != w.size()) return NCPoly{};
  NCPoly out = NCPoly::one();
  std::size_t pos = 0;
  for (const auto part : comp.parts()) {
    const LetterCombination segment = d.fold(w.letters().subspan(pos, part));
    out = concat(out, segment.to_poly());
    pos += part;
  }
  return out;
}

NCPoly psi(const FormalSeries& f, const NCPoly& p, const DiamondProduct& d) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    if (w.empty()) {
      out.add_term(w, c);
      continue;
    }
    if (w.size() > f.degree()) {
      throw std::invalid_argument("psi: word of length " + std::to_string(w.size()) +
                                  " exceeds series truncation degree " + std::to_string(f.degree()));
    }
    for (const auto& comp : compositions(static_cast<std::uint32_t>(w.size()))) {
      Rational weight = c;
      for (const auto part : comp.parts()) {
        weight *= f[part];
        if (weight == 0) break;
      }
      if (weight == 0) continue;
      out += weight * composition_action(comp, w, d);
    }
  }
  return out;
}

GradedPoly::GradedPoly(unsigned degree) : parts_(degree + 1) {}

GradedPoly GradedPoly::lambda_times(const NCPoly& p, unsigned degree) {
  GradedPoly g(degree);
  if (degree >= 1) g[1] = p;
  return g;
}

GradedPoly GradedPoly::constant(const NCPoly& p, unsigned degree) {
  GradedPoly g(degree);
  g[0] = p;
  return g;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
  if (rhs.degree() != degree()) throw std::invalid_argument("graded polynomials of different truncation");
  for (unsigned k = 0; k < parts_.size(); ++k) parts_[k] += rhs.parts_[k];
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
  if (rhs.degree() != degree()) throw std::invalid_argument("graded polynomials of different truncation");
  for (unsigned k = 0; k < parts_.size(); ++k) parts_[k] -= rhs.parts_[k];
  return *this;
}

bool GradedPoly::is_zero() const {
  for (const auto& p : parts_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::string GradedPoly::to_string() const {
  std::ostringstream os;
  for (unsigned k = 0; k < parts_.size(); ++k) {
    if (parts_[k].is_zero()) continue;
    os << "lambda^" << k << ": " << parts_[k].to_string() << "\n";
  }
  return os.str();
}

Bullet parse_bullet(std::string_view name) {
  if (name == "sh" || name == "shuffle") return Bullet::shuffle;
  if (name == "bsh" || name == "star" || name == "block-shuffle") return Bullet::block_shuffle;
  if (name == "diamond") return Bullet::diamond;
  if (name == "concat") return Bullet::concat;
  throw std::invalid_argument("unknown product selector: " + std::string(name));
}

namespace {

NCPoly multiply(const NCPoly& a, const NCPoly& b, Bullet bullet, const DiamondProduct& d, const ProductEngine* engine) {
  switch (bullet) {
    case Bullet::concat:
      return concat(a, b);
    case Bullet::diamond:
      return d(LetterCombination::from_poly(a), LetterCombination::from_poly(b)).to_poly();
    case Bullet::shuffle:
    case Bullet::block_shuffle:
      return engine->multiply(a, b);
  }
  return {};
}

ProductEngine engine_for(Bullet bullet, const DiamondProduct& d) {
  return ProductEngine(bullet == Bullet::shuffle ? ProductKind::shuffle : ProductKind::gen_quasi_shuffle, d);
}

GradedPoly graded_product_with(const GradedPoly& x, const GradedPoly& y, Bullet bullet, const DiamondProduct& d,
                               const ProductEngine& engine) {
  const unsigned degree = std::min(x.degree(), y.degree());
  GradedPoly out(degree);
  for (unsigned i = 0; i <= degree; ++i) {
    if (x[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= degree; ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += multiply(x[i], y[j], bullet, d, &engine);
    }
  }
  return out;
}

}  // namespace

GradedPoly graded_product(const GradedPoly& x, const GradedPoly& y, Bullet bullet, const DiamondProduct& d) {
  const ProductEngine engine = engine_for(bullet, d);
  return graded_product_with(x, y, bullet, d, engine);
}

GradedPoly f_bullet(const FormalSeries& f, const GradedPoly& x, Bullet bullet, const DiamondProduct& d) {
  if (!x[0].is_zero()) throw std::invalid_argument("f_bullet: argument must have no lambda^0 component");
  const unsigned degree = x.degree();
  if (f.degree() < degree) {
    throw std::invalid_argument("f_bullet: series truncated below the requested lambda degree");
  }
  if (bullet == Bullet::diamond) {
    for (unsigned k = 0; k <= degree; ++k) LetterCombination::from_poly(x[k]);
  }
  const ProductEngine engine = engine_for(bullet, d);
  GradedPoly out(degree);
  GradedPoly power = x;
  for (unsigned i = 1; i <= degree; ++i) {
    if (i > 1) power = graded_product_with(power, x, bullet, d, engine);
    if (f[i] != 0) {
      for (unsigned k = 0; k <= degree; ++k) out[k] += f[i] * power[k];
    }
  }
  return out;
}

GradedPoly f_bullet(const FormalSeries& f, const NCPoly& z, Bullet bullet, unsigned degree, const DiamondProduct& d) {
  return f_bullet(f, GradedPoly::lambda_times(z, degree), bullet, d);
}

GradedPoly exp_bullet(const GradedPoly& x, Bullet bullet, const DiamondProduct& d) {
  GradedPoly out = f_bullet(FormalSeries::expm1(x.degree()), x, bullet, d);
  out[0] += NCPoly::one();
  return out;
}

GradedPoly geometric_series(const NCPoly& z, unsigned degree) {
  GradedPoly out(degree);
  NCPoly power = NCPoly::one();
  for (unsigned n = 0; n <= degree; ++n) {
    out[n] = power;
    power = concat(power, z);
  }
  return out;
}

GradedPoly geometric_series(const GradedPoly& x) {
  if (!x[0].is_zero()) throw std::invalid_argument("geometric_series: argument must have no lambda^0 component");
  const unsigned degree = x.degree();
  const DiamondProduct d = DiamondProduct::additive();
  GradedPoly out = GradedPoly::constant(NCPoly::one(), degree);
  GradedPoly power = out;
  for (unsigned n = 1; n <= degree; ++n) {
    power = graded_product(power, x, Bullet::concat, d);
    out += power;
  }
  return out;
}

GradedPoly psi(const FormalSeries& f, const GradedPoly& x, const DiamondProduct& d) {
  GradedPoly out(x.degree());
  for (unsigned k = 0; k <= x.degree(); ++k) out[k] = psi(f, x[k], d);
  return out;
}

bool check_geometric_identity(const FormalSeries& f, const NCPoly& z, unsigned degree, const DiamondProduct& d) {
  const GradedPoly lhs = psi(f, geometric_series(z, degree), d);
  const GradedPoly rhs = geometric_series(f_bullet(f, z, Bullet::diamond, degree, d));
  return lhs == rhs;
}

bool check_exp_tanh(const NCPoly& z, unsigned degree) {
  const GradedPoly lhs = exp_bullet(GradedPoly::lambda_times(z, degree), Bullet::block_shuffle);
  const GradedPoly rhs = psi(FormalSeries::tanh(degree), geometric_series(z, degree));
  return lhs == rhs;
}

bool check_expgeo(const NCPoly& z, unsigned degree) {
  const GradedPoly inner = f_bullet(FormalSeries::atanh(degree), z, Bullet::diamond, degree);
  const GradedPoly lhs = exp_bullet(inner, Bullet::block_shuffle);
  return lhs == geometric_series(z, degree);
}

bool check_log_exp(const NCPoly& z, Bullet bullet, unsigned degree, const DiamondProduct& d) {
  GradedPoly e = exp_bullet(GradedPoly::lambda_times(z, degree), bullet, d);
  e[0] -= NCPoly::one();
  return f_bullet(FormalSeries::log1p(degree), e, bullet, d) == GradedPoly::lambda_times(z, degree);
}

std::optional<std::pair<Word, Word>> find_morphism_counterexample(const FormalSeries& f, ProductKind source,
                                                                  ProductKind target, std::size_t max_total_length,
                                                                  LetterIndex max_letter) {
  if (f.degree() < max_total_length) throw std::invalid_argument("find_morphism_counterexample: series degree too low");
  const ProductEngine src(source);
  const ProductEngine dst(target);
  std::map<Word, NCPoly> images;
  const auto image = [&](const Word& w) -> const NCPoly& {
    auto it = images.find(w);
    if (it == images.end()) it = images.emplace(w, psi(f, NCPoly(w))).first;
    return it->second;
  };
  for (const auto& u : all_words_up_to(max_letter, max_total_length)) {
    if (u.empty()) continue;
    for (const auto& v : all_words_up_to(max_letter, max_total_length - u.size())) {
      if (v.empty()) continue;
      const NCPoly lhs = psi(f, src.multiply_words(u, v));
      if (lhs != dst.multiply(image(u), image(v))) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

std::optional<Word> find_inverse_counterexample(const FormalSeries& f, std::size_t max_length, LetterIndex max_letter) {
  if (f.degree() < max_length) throw std::invalid_argument("find_inverse_counterexample: series degree too low");
  const FormalSeries g = f.compose_inverse();
  for (const auto& w : all_words_up_to(max_letter, max_length)) {
    if (psi(f, psi(g, NCPoly(w))) != NCPoly(w)) return w;
  }
  return std::nullopt;
}

}  // namespace qshuffle
