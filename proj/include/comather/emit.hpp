#pragma once

#include <json.hpp>

#include <string>

#include "comather/chow.hpp"

namespace comather {

enum class Format { Text, Csv, Json, Latex };

Format parse_format(const std::string& s);

// {exponents, coeff} list with "p/q" coefficients.
nlohmann::json poly_to_json(const EquivPoly& p, int rank);

// {space, equivariant, terms: [{label, word, length, coeff, monomials}]}, terms in canonical order.
nlohmann::json class_to_json(const SchubertClass& c);

// "[21]+3[2]+..." in decreasing length, or a LaTeX display.
std::string class_to_text(const SchubertClass& c);
std::string class_to_latex(const SchubertClass& c);
// label,word,coeff rows.
std::string class_to_csv(const SchubertClass& c);

std::string emit_class(const SchubertClass& c, Format f);

}  // namespace comather
