#include "comather/emit.hpp"

#include <algorithm>

namespace comather {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, csv, json or latex)");
}

nlohmann::json poly_to_json(const EquivPoly& p, int rank) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [exps, coeff] : p.to_exponent_list(rank)) out.push_back({{"exponents", exps}, {"coeff", coeff}});
  return out;
}

namespace {

std::vector<std::pair<WeylElt, EquivPoly>> descending(const SchubertClass& c) {
  auto terms = c.sorted();
  std::reverse(terms.begin(), terms.end());
  return terms;
}

template <class PolyFn, class BasisFn>
std::string render_class(const SchubertClass& c, PolyFn poly, BasisFn basis, const std::string& sep) {
  std::string s;
  for (const auto& [w, a] : descending(c)) {
    std::string body;
    bool negative = false;
    if (a.is_constant()) {
      mpq_class q = a.constant_term();
      negative = q < 0;
      if (negative) q = -q;
      if (q != 1) body = format_rational(q);
    } else {
      body = "(" + poly(a) + ")";
    }
    if (!s.empty()) s += negative ? sep + "-" + sep : sep + "+" + sep;
    else if (negative) s += "-";
    s += body + basis(c.space().label(w));
  }
  return s.empty() ? "0" : s;
}

}  // namespace

nlohmann::json class_to_json(const SchubertClass& c) {
  nlohmann::json terms = nlohmann::json::array();
  const WeylGroup& W = c.space().weyl();
  for (const auto& [w, a] : c.sorted())
    terms.push_back({{"label", c.space().label(w)},
                     {"word", W.word_string(w)},
                     {"length", w.length()},
                     {"coeff", a.to_string()},
                     {"monomials", poly_to_json(a, W.rank())}});
  return {{"space", c.space().name()}, {"equivariant", c.equivariant()}, {"terms", std::move(terms)}};
}

std::string class_to_text(const SchubertClass& c) {
  return render_class(
      c, [](const EquivPoly& p) { return p.to_string(); }, [](const std::string& l) { return "[" + l + "]"; }, " ");
}

std::string class_to_latex(const SchubertClass& c) {
  return render_class(
      c, [](const EquivPoly& p) { return p.to_latex(); },
      [](const std::string& l) { return "[X_{" + (l == "()" ? std::string("\\emptyset") : l) + "}]"; }, " ");
}

std::string class_to_csv(const SchubertClass& c) {
  std::string s = "label,word,coeff\n";
  for (const auto& [w, a] : c.sorted())
    s += c.space().label(w) + "," + c.space().weyl().word_string(w) + "," + a.to_string() + "\n";
  return s;
}

std::string emit_class(const SchubertClass& c, Format f) {
  switch (f) {
    case Format::Text: return class_to_text(c) + "\n";
    case Format::Csv: return class_to_csv(c);
    case Format::Json: return class_to_json(c).dump(2) + "\n";
    case Format::Latex: return class_to_latex(c) + "\n";
  }
  return "";
}

}  // namespace comather
