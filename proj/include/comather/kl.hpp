#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "comather/csm.hpp"

namespace comather {

// Coefficients in q, lowest degree first; empty means zero.
using KLPoly = std::vector<int64_t>;

std::string kl_to_string(const KLPoly& p);
int64_t kl_at_one(const KLPoly& p);

// Ordinary Kazhdan-Lusztig polynomial P_{x,w}; zero unless x <= w.
// Columns are memoized per group and persisted under COMATHER_CACHE_DIR when set.
KLPoly kl_polynomial(const WeylGroupPtr& group, const WeylElt& x, const WeylElt& w);

// Polynomial attached to the pair (v, w) of minimal representatives: P_{v w_P, w w_P},
// which governs the intersection cohomology of X_w^P. With assume_ordinary, P_{v,w}.
KLPoly parabolic_kl(const FlagSpace& space, const WeylElt& v, const WeylElt& w, bool assume_ordinary = false);

// Pairs v <= w where the two choices above disagree at q = 1.
std::vector<std::pair<WeylElt, std::pair<int64_t, int64_t>>> ordinary_discrepancies(const FlagSpace& space,
                                                                                     const WeylElt& w);

SchubertClass kl_class(const FlagSpace& space, const WeylElt& w, bool equivariant, bool assume_ordinary = false);

struct CCDecomposition {
  FlagSpace space;
  WeylElt w;
  std::vector<std::pair<WeylElt, mpz_class>> multiplicities;  // nonzero entries, sorted canonically
  bool irreducible() const;
};

// Characteristic cycle of the IC sheaf of X_w^P in the conormal basis (cominuscule case).
CCDecomposition cc_multiplicities(const FlagSpace& space, const WeylElt& w, bool assume_ordinary = false);
// Same for the preimage of X_w^P in G/Q, against the pulled-back Mather basis.
CCDecomposition cc_pullback(const FlagSpace& space, const WeylElt& w, const FlagSpace& target);

// Irreducibility via Euler obstructions: e_{w,v} = P(1) for every v <= w.
bool cc_irreducible_by_euler(const FlagSpace& space, const WeylElt& w, bool assume_ordinary = false);

// Writes all memoized KL columns to the cache directory (no-op when unset).
void flush_kl_cache();

}  // namespace comather
