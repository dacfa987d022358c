#include "comather/mather.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace comather {

namespace {

using MemoKey = std::tuple<const WeylGroup*, NodeMask, WeylElt, bool>;

std::mutex g_memo_mu;
std::map<MemoKey, std::unique_ptr<MatherResult>> g_memo;

FlagSpace borel_of(const FlagSpace& space) { return FlagSpace::borel(space.group()); }

// Roots alpha >= alpha_P, i.e. outside the Levi, with w(alpha) > 0.
std::vector<int> unipotent_complement(const FlagSpace& space, const WeylElt& w) {
  std::vector<int> out;
  for (int k : space.roots_outside_levi())
    if (space.weyl().act(w, space.roots().root(k)).is_positive()) out.push_back(k);
  return out;
}

}  // namespace

void require_cominuscule(const FlagSpace& space) {
  if (!space.is_cominuscule())
    throw std::invalid_argument(space.name() +
                                " is not cominuscule; Mather classes are available on cominuscule G/P "
                                "and on pull-backs to smaller parabolics");
}

const MatherResult& mather_class(const FlagSpace& space, const WeylElt& w, bool equivariant) {
  require_cominuscule(space);
  space.require_member(w);
  MemoKey key{&space.weyl(), space.levi(), w, equivariant};
  {
    std::lock_guard lock(g_memo_mu);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return *it->second;
  }
  auto result = std::make_unique<MatherResult>();
  result->w = w;
  result->equivariant = equivariant;
  const RootSystem& rs = space.roots();
  auto weights = negated_roots(rs, space.weyl().inversion_set(w));
  result->upstairs = total_chern_mul(schubert(borel_of(space), w, equivariant), weights);
  result->downstairs = pushforward(result->upstairs, space);
  std::lock_guard lock(g_memo_mu);
  auto [it, fresh] = g_memo.emplace(key, std::move(result));
  return *it->second;
}

SchubertClass dual_class(const SchubertClass& c, int dim) {
  SchubertClass out(c.space(), c.equivariant());
  for (const auto& [v, a] : c.terms()) {
    PolyBuilder b;
    for (const auto& [m, q] : a.terms()) {
      int homological = v.length() - m.degree();
      b.add(m, (dim - homological) % 2 ? mpq_class(-q) : q);
    }
    out.add(v, b.build());
  }
  return out;
}

SchubertClass dual_mather(const MatherResult& m) { return dual_class(m.downstairs, m.w.length()); }

SchubertClass pullback_mather(const FlagSpace& space, const WeylElt& w, const FlagSpace& target, bool equivariant) {
  const MatherResult& m = mather_class(space, w, equivariant);
  FlagSpace borel = borel_of(space);
  // Relative tangent bundle of G/Q -> G/P has Chern roots -alpha, alpha in R_P+ \ R_Q+.
  const auto& rp = space.weyl().enumerate_wp(space.levi()).r_p_plus;
  const auto& rq = space.weyl().enumerate_wp(target.levi()).r_p_plus;
  std::vector<int> relative;
  for (int k : rp)
    if (!std::binary_search(rq.begin(), rq.end(), k)) relative.push_back(k);
  SchubertClass up = total_chern_mul(pullback(m.downstairs, borel), negated_roots(space.roots(), relative));
  return descend(up, target);
}

SchubertClass segre_conormal(const FlagSpace& space, const WeylElt& w, bool equivariant) {
  require_cominuscule(space);
  space.require_member(w);
  auto weights = roots_as_weights(space.roots(), unipotent_complement(space, w));
  return pushforward(total_chern_inverse_mul(schubert(borel_of(space), w, equivariant), weights), space);
}

SchubertClass segre_mather(const FlagSpace& space, const WeylElt& w, bool equivariant) {
  require_cominuscule(space);
  space.require_member(w);
  auto weights = negated_roots(space.roots(), unipotent_complement(space, w));
  return pushforward(total_chern_inverse_mul(schubert(borel_of(space), w, equivariant), weights), space);
}

SchubertClass dual_mather_from_segre(const FlagSpace& space, const WeylElt& w, bool equivariant) {
  require_cominuscule(space);
  space.require_member(w);
  const RootSystem& rs = space.roots();
  auto inverse_weights = roots_as_weights(rs, unipotent_complement(space, w));
  auto cotangent = roots_as_weights(rs, space.roots_outside_levi());
  SchubertClass up = total_chern_inverse_mul(schubert(borel_of(space), w, equivariant), inverse_weights);
  // The inverse series is cut at degree 0, so the forward product leaves negative-degree debris.
  return pushforward(total_chern_mul(std::move(up), cotangent).truncate(), space);
}

std::string MatherPolynomial::to_string() const {
  std::string s;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const mpz_class& c = coeffs[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
    if (a != 1 || i == 0) s += a.get_str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

MatherPolynomial mather_polynomial(const FlagSpace& space, const WeylElt& w) {
  const MatherResult& m = mather_class(space, w, false);
  MatherPolynomial p;
  p.coeffs.assign(w.length() + 1, 0);
  for (const auto& [v, a] : m.downstairs.terms()) p.coeffs[v.length()] += a.constant_term().get_num();
  return p;
}

bool is_unimodal(const MatherPolynomial& p) {
  size_t i = 1;
  while (i < p.coeffs.size() && p.coeffs[i] >= p.coeffs[i - 1]) ++i;
  while (i < p.coeffs.size() && p.coeffs[i] <= p.coeffs[i - 1]) ++i;
  return i >= p.coeffs.size();
}

bool is_log_concave(const MatherPolynomial& p) {
  const auto& a = p.coeffs;
  auto at = [&](long i) { return i < 0 || i >= static_cast<long>(a.size()) ? mpz_class(0) : a[i]; };
  for (long i = 0; i < static_cast<long>(a.size()); ++i)
    if (a[i] * a[i] < at(i - 1) * at(i + 1)) return false;
  return true;
}

std::vector<Violation> check_positivity(const FlagSpace& space, const WeylElt& w, bool equivariant) {
  const MatherResult& m = mather_class(space, w, equivariant);
  const WeylGroup& W = space.weyl();
  std::vector<Violation> out;
  for (const WeylElt& v : space.elements()) {
    if (!W.bruhat_leq(v, w)) continue;
    EquivPoly a = m.downstairs.coeff(v);
    if (equivariant) {
      if (!a.has_nonnegative_coefficients() || a.is_zero())
        out.push_back({v, "coefficient " + a.to_string() + " on " + space.label(v)});
    } else if (a.constant_term() <= 0) {
      out.push_back({v, "coefficient " + a.to_string() + " on " + space.label(v)});
    }
  }
  return out;
}

std::vector<Violation> check_alternating(const SchubertClass& c, int dim) {
  std::vector<Violation> out;
  for (const auto& [v, a] : c.sorted()) {
    for (const auto& [m, q] : a.terms()) {
      int homological = v.length() - m.alpha_degree();
      if (m.exponent(kHbarSlot) != 0) continue;
      if (m.degree() != 0 && c.equivariant()) continue;
      bool should_be_positive = (dim - homological) % 2 == 0;
      if ((q > 0) != should_be_positive) {
        out.push_back({v, "sign of " + format_rational(q) + " on " + c.space().label(v)});
        break;
      }
    }
  }
  return out;
}

}  // namespace comather
