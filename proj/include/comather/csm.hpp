#pragma once

#include <map>
#include <vector>

#include "comather/mather.hpp"

namespace comather {

// CSM class of the Schubert cell of w in G/B (memoized per group).
const SchubertClass& csm_cell_gb(const WeylGroupPtr& group, const WeylElt& w, bool equivariant);
// Same recursion along an explicit reduced word; used to test word independence.
SchubertClass csm_cell_gb_along(const WeylGroupPtr& group, std::span<const int> word, bool equivariant);
// CSM class of the cell of v in G/P.
SchubertClass csm_cell(const FlagSpace& space, const WeylElt& v, bool equivariant);

// Sum of all cell classes on the space.
SchubertClass csm_total(const FlagSpace& space, bool equivariant);
// c(T(G/P)) cap [G/P], computed directly from the tangent weights.
SchubertClass tangent_total(const FlagSpace& space, bool equivariant);

// Expands a class in the CSM cell basis by back-substitution over decreasing length.
// Throws std::logic_error when a coefficient is not a constant.
std::map<WeylElt, mpq_class> expand_in_csm_basis(const SchubertClass& c);

struct EulerTable {
  WeylElt w;
  std::vector<std::pair<WeylElt, mpz_class>> values;  // all v <= w in W^P, sorted canonically
  mpz_class at(const WeylElt& v) const;
};

// Local Euler obstructions of X_w^P along each stratum; with verify, also checks the
// equivariant expansion has zero residual.
EulerTable euler_obstructions(const FlagSpace& space, const WeylElt& w, bool verify_equivariant = false);

// Expands pullback_mather in the G/Q cell basis and compares with the Euler table.
bool euler_pullback_check(const FlagSpace& space, const WeylElt& w, const FlagSpace& target);

std::vector<Violation> check_euler_nonneg(const FlagSpace& space, const WeylElt& w);

}  // namespace comather
