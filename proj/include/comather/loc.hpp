#pragma once

#include <span>
#include <vector>

#include "comather/chow.hpp"

namespace comather {

// Opposite Schubert class xi^u restricted to the fixed point v, via the subword sum
// along the given reduced word of v.
EquivPoly opposite_localize(const WeylGroup& W, const WeylElt& u, std::span<const int> word_of_v);

// [X_w]|_v on G/B; zero unless v <= w. The word, when given, is a reduced word of w0 v.
EquivPoly billey_localize(const WeylGroup& W, const WeylElt& w, const WeylElt& v);
EquivPoly billey_localize_along(const WeylGroup& W, const WeylElt& w, const WeylElt& v,
                                std::span<const int> word_of_w0v);

// [X_v^P]|_u for v, u in W^P.
EquivPoly schubert_localize(const FlagSpace& space, const WeylElt& v, const WeylElt& u);

// Localization of a class (on any G/P) at the fixed point u of its space.
EquivPoly localize(const SchubertClass& c, const WeylElt& u);

// prod over R+ \ R_P+ of u(-alpha).
EquivPoly point_euler(const FlagSpace& space, const WeylElt& u);

// pi_*(kappa) at uW_P from the G/B localizations of kappa over the coset; certified
// polynomial by exact division (throws NotPolynomial otherwise).
EquivPoly parabolic_localize(const SchubertClass& kappa, const FlagSpace& target, const WeylElt& u);

// Closed form prod_{alpha in I(w)} (-hbar + v(alpha)) [X_w]|_v on G/B.
EquivPoly ctwloc(const WeylGroup& W, const WeylElt& w, const WeylElt& v);

// Localization of the conormal space of X_w^P at uW_P.
EquivPoly conormal_localize(const FlagSpace& space, const WeylElt& w, const WeylElt& u);

}  // namespace comather
