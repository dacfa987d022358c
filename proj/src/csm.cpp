#include "comather/csm.hpp"

#include <mutex>
#include <optional>

namespace comather {

namespace {

struct CellMemo {
  std::unordered_map<WeylElt, SchubertClass, WeylEltHash> cells[2];
};

std::recursive_mutex g_cell_mu;
std::map<const WeylGroup*, CellMemo> g_cells;

// Push to G/P_i and pull back: [X_v] -> [X_{v s_i}] when v s_i > v, else 0.
SchubertClass demazure_pushpull(const SchubertClass& c, int i) {
  const WeylGroup& W = c.space().weyl();
  SchubertClass out(c.space(), c.equivariant());
  for (const auto& [v, a] : c.terms())
    if (!W.is_right_descent(v, i)) out.add(W.right_mul(v, i), a);
  return out;
}

SchubertClass step(const SchubertClass& prev, int i) {
  const RootSystem& rs = prev.space().roots();
  Weight minus_alpha = -Weight::simple(rs.rank(), i);
  SchubertClass next = total_chern_mul(demazure_pushpull(prev, i), std::span(&minus_alpha, 1));
  next -= prev;
  return next;
}

}  // namespace

const SchubertClass& csm_cell_gb(const WeylGroupPtr& group, const WeylElt& w, bool equivariant) {
  std::lock_guard lock(g_cell_mu);
  auto& memo = g_cells[group.get()].cells[equivariant ? 1 : 0];
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  FlagSpace borel = FlagSpace::borel(group);
  if (w.is_identity()) return memo.emplace(w, schubert(borel, w, equivariant)).first->second;
  auto word = group->reduced_word(w);
  int last = word.back();
  const SchubertClass& prev = csm_cell_gb(group, group->right_mul(w, last), equivariant);
  SchubertClass next = step(prev, last);
  return memo.emplace(w, std::move(next)).first->second;
}

SchubertClass csm_cell_gb_along(const WeylGroupPtr& group, std::span<const int> word, bool equivariant) {
  FlagSpace borel = FlagSpace::borel(group);
  SchubertClass c = schubert(borel, group->identity(), equivariant);
  WeylElt w = group->identity();
  for (int i : word) {
    if (group->is_right_descent(w, i)) throw std::invalid_argument("word is not reduced");
    c = step(c, i);
    w = group->right_mul(w, i);
  }
  return c;
}

SchubertClass csm_cell(const FlagSpace& space, const WeylElt& v, bool equivariant) {
  space.require_member(v);
  return pushforward(csm_cell_gb(space.group(), v, equivariant), space);
}

SchubertClass csm_total(const FlagSpace& space, bool equivariant) {
  SchubertClass total(space, equivariant);
  for (const WeylElt& v : space.elements()) total += csm_cell(space, v, equivariant);
  return total;
}

SchubertClass tangent_total(const FlagSpace& space, bool equivariant) {
  FlagSpace borel = FlagSpace::borel(space.group());
  WeylElt top = space.elements().back();
  auto weights = negated_roots(space.roots(), space.roots_outside_levi());
  return pushforward(total_chern_mul(schubert(borel, top, equivariant), weights), space);
}

std::map<WeylElt, mpq_class> expand_in_csm_basis(const SchubertClass& c) {
  const FlagSpace& space = c.space();
  const WeylGroup& W = space.weyl();
  std::map<WeylElt, mpq_class> out;
  SchubertClass residual = c;
  while (!residual.is_zero()) {
    const WeylElt* top = nullptr;
    for (const auto& [v, a] : residual.terms())
      if (!top || W.canonical_less(*top, v)) top = &v;
    WeylElt v = *top;
    SchubertClass cell = csm_cell(space, v, c.equivariant());
    EquivPoly a = residual.coeff(v);
    std::optional<EquivPoly> ratio;
    try {
      ratio = exact_divide(a, cell.coeff(v));
    } catch (const NotPolynomial&) {
    }
    if (!ratio || !ratio->is_constant())
      throw std::logic_error("CSM expansion: non-constant coefficient " + a.to_string() + " on " + space.label(v));
    mpq_class k = ratio->constant_term();
    out[v] = k;
    cell *= k;
    residual -= cell;
  }
  return out;
}

mpz_class EulerTable::at(const WeylElt& v) const {
  for (const auto& [u, e] : values)
    if (u == v) return e;
  return 0;
}

EulerTable euler_obstructions(const FlagSpace& space, const WeylElt& w, bool verify_equivariant) {
  const MatherResult& m = mather_class(space, w, false);
  auto coeffs = expand_in_csm_basis(m.downstairs);
  EulerTable table;
  table.w = w;
  const WeylGroup& W = space.weyl();
  for (const WeylElt& v : space.elements()) {
    if (!W.bruhat_leq(v, w)) continue;
    mpq_class e = coeffs.count(v) ? coeffs.at(v) : mpq_class(0);
    if (e.get_den() != 1) throw std::logic_error("non-integral Euler obstruction at " + space.label(v));
    table.values.emplace_back(v, e.get_num());
  }
  for (const auto& [v, e] : coeffs)
    if (!W.bruhat_leq(v, w)) throw std::logic_error("Euler expansion escaped the Bruhat interval");
  if (verify_equivariant) {
    SchubertClass residual = mather_class(space, w, true).downstairs;
    for (const auto& [v, e] : table.values) {
      if (e == 0) continue;
      SchubertClass cell = csm_cell(space, v, true);
      cell *= mpq_class(e);
      residual -= cell;
    }
    if (!residual.is_zero())
      throw std::logic_error("equivariant residual of the Euler expansion is nonzero for " + space.label(w));
  }
  return table;
}

bool euler_pullback_check(const FlagSpace& space, const WeylElt& w, const FlagSpace& target) {
  EulerTable table = euler_obstructions(space, w);
  SchubertClass pm = pullback_mather(space, w, target, false);
  auto coeffs = expand_in_csm_basis(pm);
  const WeylGroup& W = space.weyl();
  WeylElt top = W.coset_decompose(W.mul(w, space.longest_levi()), target.levi()).first;
  for (const WeylElt& u : target.elements()) {
    mpq_class got = coeffs.count(u) ? coeffs.at(u) : mpq_class(0);
    mpq_class expected = 0;
    if (W.bruhat_leq(u, top)) expected = table.at(W.coset_decompose(u, space.levi()).first);
    if (got != expected) return false;
  }
  return true;
}

std::vector<Violation> check_euler_nonneg(const FlagSpace& space, const WeylElt& w) {
  std::vector<Violation> out;
  for (const auto& [v, e] : euler_obstructions(space, w).values)
    if (e < 0) out.push_back({v, "Euler obstruction " + e.get_str() + " at " + space.label(v)});
  return out;
}

}  // namespace comather
