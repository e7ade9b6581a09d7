#include "qshuffle/json_io.hpp"

#include <stdexcept>

namespace qshuffle {

Json to_json(const NCPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p) {
    terms.push_back({{"coef", to_fraction_string(c)}, {"word", std::vector<LetterIndex>(w.begin(), w.end())}});
  }
  return Json{{"terms", terms}};
}

NCPoly ncpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("NCPoly JSON must be an object with a \"terms\" array");
  }
  NCPoly out;
  for (const auto& t : j["terms"]) {
    if (!t.contains("coef") || !t["coef"].is_string() || !t.contains("word") || !t["word"].is_array()) {
      throw std::invalid_argument("NCPoly JSON term needs a string \"coef\" and an array \"word\"");
    }
    std::vector<LetterIndex> letters;
    for (const auto& i : t["word"]) {
      if (!i.is_number_unsigned() || i.get<std::uint64_t>() == 0) {
        throw std::invalid_argument("NCPoly JSON letter indices must be positive integers");
      }
      letters.push_back(i.get<LetterIndex>());
    }
    out.add_term(Word(std::move(letters)), parse_rational(t["coef"].get<std::string>()));
  }
  return out;
}

Json to_json(const ZetaCombination& z) {
  Json out = Json::array();
  for (const auto& [idx, c] : z.terms) out.push_back({{"coef", to_fraction_string(c)}, {"index", idx.entries}});
  return out;
}

Json to_json(const Relation& rel) {
  Json out{{"lhs", to_json(rel.lhs)},
           {"rendered", to_json(rel.rendered)},
           {"regularized", rel.regularized()},
           {"provenance", rel.provenance}};
  if (rel.closed_form) {
    out["closed_form"] = {{"coef", to_fraction_string(rel.closed_form->coefficient)},
                          {"pi_power", rel.closed_form->power}};
  }
  return out;
}

Json to_json(const VerifyReport& rep) {
  return Json{{"lhs_value", rep.lhs_value}, {"rhs_value", rep.rhs_value}, {"residual", rep.residual},
              {"tolerance", rep.tolerance}, {"tail", rep.tail},           {"regularized", rep.regularized},
              {"pass", rep.pass}};
}

}  // namespace qshuffle
