#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "comather/chow.hpp"

namespace comather {

struct MatherResult {
  WeylElt w;
  SchubertClass upstairs;    // c(T_w) cap [X_w] on G/B
  SchubertClass downstairs;  // Mather class on G/P
  bool equivariant = false;
};

// Throws std::invalid_argument unless the space is a cominuscule G/P.
void require_cominuscule(const FlagSpace& space);

// Memoized per (space, w, equivariant).
const MatherResult& mather_class(const FlagSpace& space, const WeylElt& w, bool equivariant);

// Sign flip (-1)^(dim - homological degree) on each term; dim is the variety's dimension.
SchubertClass dual_class(const SchubertClass& c, int dim);
SchubertClass dual_mather(const MatherResult& m);

// Mather class of the preimage of X_w^P under G/Q -> G/P.
SchubertClass pullback_mather(const FlagSpace& space, const WeylElt& w, const FlagSpace& target, bool equivariant);

// Segre class of the conormal space of X_w^P.
SchubertClass segre_conormal(const FlagSpace& space, const WeylElt& w, bool equivariant);
// Segre-Mather class of X_w^P.
SchubertClass segre_mather(const FlagSpace& space, const WeylElt& w, bool equivariant);
// c(T^*(G/P)) cap segre_conormal, applied upstairs before the push-forward.
SchubertClass dual_mather_from_segre(const FlagSpace& space, const WeylElt& w, bool equivariant);

// coeffs[i] is the coefficient of x^i.
struct MatherPolynomial {
  std::vector<mpz_class> coeffs;
  std::string to_string() const;
};

MatherPolynomial mather_polynomial(const FlagSpace& space, const WeylElt& w);
bool is_unimodal(const MatherPolynomial& p);
bool is_log_concave(const MatherPolynomial& p);

struct Violation {
  WeylElt v;
  std::string detail;
};

// Non-equivariant: every v <= w in W^P must carry a positive coefficient.
// Equivariant: every monomial coefficient must be non-negative.
std::vector<Violation> check_positivity(const FlagSpace& space, const WeylElt& w, bool equivariant);

// Signs of a class by homological degree must alternate as (-1)^(dim - i).
std::vector<Violation> check_alternating(const SchubertClass& c, int dim);

}  // namespace comather
