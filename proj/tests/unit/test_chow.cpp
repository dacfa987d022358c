#include "helpers.hpp"

#include <random>

#include "comather/chow.hpp"

using namespace comather;
using test::a;
using test::word;

namespace {

SchubertClass from_pairs(const FlagSpace& space, bool equivariant,
                         const std::vector<std::pair<std::string, EquivPoly>>& terms) {
  SchubertClass c(space, equivariant);
  for (const auto& [w, coeff] : terms) c.add(w == "id" ? space.weyl().identity() : word(space.weyl(), w), coeff);
  return c;
}

std::vector<Weight> minus_inversions(const WeylGroup& W, const WeylElt& w) {
  return negated_roots(W.roots(), W.inversion_set(w));
}

SchubertClass random_class(const FlagSpace& space, std::mt19937& rng, bool equivariant) {
  auto elts = space.elements();
  std::uniform_int_distribution<size_t> pick(0, elts.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  SchubertClass c(space, equivariant);
  for (int k = 0; k < 4; ++k) {
    EquivPoly p(coeff(rng));
    if (equivariant) p += coeff(rng) * EquivPoly::alpha(k % space.weyl().rank());
    c.add(elts[pick(rng)], p);
  }
  return c;
}

}  // namespace

TEST_CASE("schubert classes reject non-minimal representatives") {
  auto gr = FlagSpace::parse("A3/P2");
  CHECK(schubert(gr, gr.weyl().identity(), false).size() == 1);
  CHECK_THROWS_AS(schubert(gr, word(gr.weyl(), "1"), false), std::invalid_argument);
  CHECK(FlagSpace::parse("C4/P4").elements().size() == 16);
}

TEST_CASE("Chevalley formula on the projective line") {
  auto p1 = FlagSpace::parse("A1/B");
  const WeylGroup& W = p1.weyl();
  Weight minus_alpha(1, {-1});
  SchubertClass eq = chevalley_mul(schubert(p1, W.simple(0), true), minus_alpha);
  CHECK(eq == from_pairs(p1, true, {{"1", a(1)}, {"id", 2}}));
  SchubertClass plain = chevalley_mul(schubert(p1, W.simple(0), false), minus_alpha);
  CHECK(plain == from_pairs(p1, false, {{"id", 2}}));
}

TEST_CASE("tangent class of the lifted Gr(2,4) divisor") {
  auto fl = FlagSpace::parse("A3/B");
  WeylElt w = word(fl.weyl(), "132");
  SchubertClass got = total_chern_mul(schubert(fl, w, false), minus_inversions(fl.weyl(), w));
  SchubertClass expected = from_pairs(fl, false,
                                      {{"132", 1}, {"32", 3}, {"31", 4}, {"3", 3}, {"12", 3}, {"2", 8}, {"1", 3}, {"id", 6}});
  CHECK(got == expected);

  SchubertClass small = total_chern_mul(schubert(fl, word(fl.weyl(), "3"), false), minus_inversions(fl.weyl(), w));
  CHECK(small == from_pairs(fl, false, {{"3", 1}, {"id", -1}}));
}

TEST_CASE("diagonal coefficient of the tangent class") {
  for (const char* name : {"A3/B", "C3/B"}) {
    auto fl = FlagSpace::parse(name);
    const WeylGroup& W = fl.weyl();
    for (const auto& w : fl.elements()) {
      SchubertClass c = total_chern_mul(schubert(fl, w, true), minus_inversions(W, w));
      EquivPoly expected(1);
      for (int k : W.inversion_set(w)) expected *= EquivPoly(1) - EquivPoly::from_weight(W.act(w, W.roots().root(k)));
      CHECK(c.coeff(w) == expected);
    }
  }
}

TEST_CASE("Chevalley operators commute") {
  std::mt19937 rng(17);
  for (const char* name : {"A3/B", "B3/B", "C2/B"}) {
    auto fl = FlagSpace::parse(name);
    const RootSystem& rs = fl.roots();
    for (int trial = 0; trial < 5; ++trial) {
      SchubertClass c = random_class(fl, rng, true);
      for (int i = 0; i < rs.num_positive_roots(); i += 2)
        for (int j = 1; j < rs.num_positive_roots(); j += 3) {
          Weight l = rs.root(i), m = -rs.root(j);
          CHECK(chevalley_mul(chevalley_mul(c, l), m) == chevalley_mul(chevalley_mul(c, m), l));
        }
    }
  }
}

TEST_CASE("total Chern multiplication is order independent and specializes") {
  auto fl = FlagSpace::parse("A3/B");
  const WeylGroup& W = fl.weyl();
  WeylElt w = word(W, "1232");
  auto weights = minus_inversions(W, w);
  SchubertClass forward = total_chern_mul(schubert(fl, w, true), weights);
  std::reverse(weights.begin(), weights.end());
  CHECK(total_chern_mul(schubert(fl, w, true), weights) == forward);
  CHECK(forward.specialize() == total_chern_mul(schubert(fl, w, false), weights));
  CHECK(total_chern_mul(schubert(fl, w, true), {}) == schubert(fl, w, true));
}

TEST_CASE("inverse total Chern multiplication") {
  auto p1 = FlagSpace::parse("A1/B");
  std::vector<Weight> minus_alpha{Weight(1, {-1})};
  SchubertClass s = total_chern_inverse_mul(schubert(p1, p1.weyl().simple(0), false), minus_alpha);
  CHECK(s == from_pairs(p1, false, {{"1", 1}, {"id", -2}}));

  auto fl = FlagSpace::parse("A3/B");
  WeylElt w = word(fl.weyl(), "2132");
  auto weights = minus_inversions(fl.weyl(), w);
  for (bool eq : {false, true}) {
    SchubertClass c = schubert(fl, w, eq);
    CHECK(total_chern_mul(total_chern_inverse_mul(c, weights), weights).truncate() == c);
  }
}

TEST_CASE("push-forward and pull-back") {
  auto fl = FlagSpace::parse("A3/B");
  auto gr = FlagSpace::parse("A3/P2");
  const WeylGroup& W = fl.weyl();
  SchubertClass up = from_pairs(fl, false,
                                {{"132", 1}, {"32", 3}, {"31", 4}, {"3", 3}, {"12", 3}, {"2", 8}, {"1", 3}, {"id", 6}});
  SchubertClass down = pushforward(up, gr);
  CHECK(down == from_pairs(gr, false, {{"132", 1}, {"32", 3}, {"12", 3}, {"2", 8}, {"id", 6}}));
  CHECK(pushforward(schubert(fl, word(W, "1"), false), gr).is_zero());

  CHECK(pullback(schubert(gr, word(W, "132"), false), fl) == schubert(fl, word(W, "12321"), false));
  CHECK(pullback(schubert(gr, W.identity(), false), fl) == schubert(fl, gr.longest_levi(), false));
  for (const auto& v : gr.elements()) {
    SchubertClass pulled = pullback(schubert(gr, v, true), fl);
    CHECK(pushforward(pulled, gr).is_zero());
    CHECK(descend(pulled, gr) == schubert(gr, v, true));
  }

  auto sf = FlagSpace::parse("C2/B");
  auto lg = FlagSpace::parse("C2/P2");
  CHECK(pullback(schubert(lg, lg.weyl().identity(), false), sf) == schubert(sf, sf.weyl().simple(0), false));
}

TEST_CASE("relative Euler class pushes forward to the fiber Euler characteristic") {
  for (const char* name : {"A3/P2", "C3/P3"}) {
    auto space = FlagSpace::parse(name);
    auto fl = FlagSpace::borel(space.group());
    const ParabolicQuotient& q = space.weyl().enumerate_wp(space.levi());
    auto fiber = negated_roots(space.roots(), q.r_p_plus);
    mpq_class chi = space.weyl().lower_interval(space.longest_levi()).size();
    for (const auto& v : space.elements())
      for (bool eq : {false, true}) {
        SchubertClass c = pushforward(total_chern_mul(pullback(schubert(space, v, eq), fl), fiber), space);
        CHECK(c == chi * schubert(space, v, eq));
      }
  }
}

TEST_CASE("Euler characteristic from the tangent class") {
  for (const char* name : {"A3/P2", "C3/P3", "B3/P1", "A2/B"}) {
    auto space = FlagSpace::parse(name);
    auto fl = FlagSpace::borel(space.group());
    const WeylGroup& W = space.weyl();
    auto tangent = negated_roots(space.roots(), space.roots_outside_levi());
    SchubertClass top = total_chern_mul(schubert(fl, space.elements().back(), false), tangent);
    CHECK(pushforward(top, space).coeff(W.identity()) == EquivPoly(static_cast<long>(space.elements().size())));
    std::vector<int> all(space.roots().num_positive_roots());
    std::iota(all.begin(), all.end(), 0);
    SchubertClass full = total_chern_mul(schubert(fl, W.longest(), false), negated_roots(space.roots(), all));
    CHECK(full.coeff(W.identity()) == EquivPoly(static_cast<long>(W.lower_interval(W.longest()).size())));
  }
}

TEST_CASE("homogenization") {
  auto fl = FlagSpace::parse("A3/B");
  WeylElt v = word(fl.weyl(), "13");
  SchubertClass c(fl, true);
  c.add(v, (1 + a(1)) * (1 + a(3)));
  c.add(fl.weyl().identity(), EquivPoly(6));
  SchubertClass h = homogenize(c);
  EquivPoly hb = EquivPoly::hbar();
  CHECK(h.coeff(v) == (hb + a(1)) * (hb + a(3)));
  CHECK(h.coeff(fl.weyl().identity()) == EquivPoly(6));
  CHECK(h.dehomogenize() == c);

  auto gr = FlagSpace::parse("A3/P2");
  SchubertClass m = from_pairs(gr, false, {{"132", 1}, {"32", 3}, {"12", 3}, {"2", 8}, {"id", 6}});
  SchubertClass hm = homogenize(m);
  CHECK(hm.coeff(word(gr.weyl(), "2")) == 8 * hb);
  CHECK(hm.coeff(word(gr.weyl(), "132")) == hb.power(3));
  CHECK(hm.coeff(gr.weyl().identity()) == EquivPoly(6));
}
