#include "comather/loc.hpp"

#include <unordered_map>

namespace comather {

namespace {

EquivPoly apply_longest(const WeylGroup& W, const EquivPoly& p) {
  WeylElt w0 = W.longest();
  std::vector<EquivPoly> images;
  for (int i = 0; i < W.rank(); ++i) images.push_back(EquivPoly::from_weight(w0.column(i)));
  return p.substitute_alphas(images);
}

EquivPoly all_positive_roots(const RootSystem& rs) {
  EquivPoly d(1);
  for (const Weight& a : rs.positive_roots()) d *= EquivPoly::from_weight(a);
  return d;
}

std::vector<WeylElt> coset(const FlagSpace& space, const WeylElt& u) {
  std::vector<WeylElt> out;
  for (const WeylElt& x : space.weyl().lower_interval(space.longest_levi())) out.push_back(space.weyl().mul(u, x));
  return out;
}

// Sum over the coset of (-1)^(|R+| + l(v)) f(v), scaled by E_u and divided by prod R+.
template <class F>
EquivPoly coset_sum(const FlagSpace& space, const WeylElt& u, F f) {
  const RootSystem& rs = space.roots();
  EquivPoly sum;
  for (const WeylElt& v : coset(space, u)) {
    EquivPoly term = f(v);
    if (term.is_zero()) continue;
    sum.add_scaled(term, (rs.num_positive_roots() + v.length()) % 2 ? -1 : 1);
  }
  return exact_divide(point_euler(space, u) * sum, all_positive_roots(rs));
}

}  // namespace

EquivPoly opposite_localize(const WeylGroup& W, const WeylElt& u, std::span<const int> word_of_v) {
  // Each state records the part of u still to be produced by the remaining letters.
  std::unordered_map<WeylElt, EquivPoly, WeylEltHash> states{{u, EquivPoly(1)}};
  WeylElt prefix = W.identity();
  for (int letter : word_of_v) {
    EquivPoly beta = EquivPoly::from_weight(W.act(prefix, Weight::simple(W.rank(), letter)));
    std::unordered_map<WeylElt, EquivPoly, WeylEltHash> next = states;
    for (const auto& [rest, p] : states) {
      if (!W.is_left_descent(rest, letter)) continue;
      next[W.left_mul(letter, rest)] += p * beta;
    }
    states = std::move(next);
    prefix = W.right_mul(prefix, letter);
  }
  auto it = states.find(W.identity());
  return it == states.end() ? EquivPoly{} : it->second;
}

EquivPoly billey_localize_along(const WeylGroup& W, const WeylElt& w, const WeylElt& v,
                                std::span<const int> word_of_w0v) {
  if (!W.bruhat_leq(v, w)) return {};
  WeylElt w0 = W.longest();
  return apply_longest(W, opposite_localize(W, W.mul(w0, w), word_of_w0v));
}

EquivPoly billey_localize(const WeylGroup& W, const WeylElt& w, const WeylElt& v) {
  auto word = W.reduced_word(W.mul(W.longest(), v));
  return billey_localize_along(W, w, v, word);
}

EquivPoly schubert_localize(const FlagSpace& space, const WeylElt& v, const WeylElt& u) {
  space.require_member(v);
  space.require_member(u);
  return billey_localize(space.weyl(), space.weyl().mul(v, space.longest_levi()), u);
}

EquivPoly localize(const SchubertClass& c, const WeylElt& u) {
  EquivPoly out;
  for (const auto& [v, a] : c.terms()) {
    EquivPoly loc = schubert_localize(c.space(), v, u);
    if (!loc.is_zero()) out += a * loc;
  }
  return out;
}

EquivPoly point_euler(const FlagSpace& space, const WeylElt& u) {
  EquivPoly p(1);
  for (int k : space.roots_outside_levi())
    p *= EquivPoly::from_weight(space.weyl().act(u, -space.roots().root(k)));
  return p;
}

EquivPoly parabolic_localize(const SchubertClass& kappa, const FlagSpace& target, const WeylElt& u) {
  if (!kappa.space().is_borel()) throw std::invalid_argument("parabolic_localize expects a class on G/B");
  target.require_member(u);
  return coset_sum(target, u, [&](const WeylElt& v) { return localize(kappa, v); });
}

EquivPoly ctwloc(const WeylGroup& W, const WeylElt& w, const WeylElt& v) {
  EquivPoly loc = billey_localize(W, w, v);
  if (loc.is_zero()) return loc;
  for (int k : W.inversion_set(w)) loc *= EquivPoly::from_weight(W.act(v, W.roots().root(k))) - EquivPoly::hbar();
  return loc;
}

EquivPoly conormal_localize(const FlagSpace& space, const WeylElt& w, const WeylElt& u) {
  space.require_member(w);
  space.require_member(u);
  if (!space.weyl().bruhat_leq(u, w)) return {};
  return coset_sum(space, u, [&](const WeylElt& v) { return ctwloc(space.weyl(), w, v); });
}

}  // namespace comather
