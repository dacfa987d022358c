#include "helpers.hpp"

#include "comather/kl.hpp"

using namespace comather;
using test::word;

namespace {

std::map<std::string, long> multiplicities(const CCDecomposition& cc) {
  std::map<std::string, long> out;
  for (const auto& [v, m] : cc.multiplicities) out[cc.space.label(v)] = m.get_si();
  return out;
}

}  // namespace

TEST_CASE("diagonal and constant terms") {
  for (const char* name : {"A3", "B3", "D4"}) {
    auto W = WeylGroup::get(name);
    for (const auto& w : W->lower_interval(W->longest())) {
      CHECK(kl_polynomial(W, w, w) == KLPoly{1});
      for (const auto& x : W->lower_interval(w)) {
        KLPoly p = kl_polynomial(W, x, w);
        REQUIRE_FALSE(p.empty());
        CHECK(p[0] == 1);
        CHECK(2 * (static_cast<int>(p.size()) - 1) <= std::max(0, w.length() - x.length() - 1));
      }
    }
  }
  auto A3 = WeylGroup::get("A3");
  CHECK(kl_polynomial(A3, word(*A3, "1"), word(*A3, "2")).empty());
}

TEST_CASE("rank two KL polynomials are trivial") {
  auto C2 = WeylGroup::get("C2");
  WeylElt w = word(*C2, "121");
  for (const auto& v : C2->lower_interval(w)) CHECK(kl_polynomial(C2, v, w) == KLPoly{1});
}

TEST_CASE("KL polynomials of A3 singular elements") {
  auto W = WeylGroup::get("A3");
  WeylElt w = word(*W, "2132");
  CHECK(kl_to_string(kl_polynomial(W, W->identity(), w)) == "1+q");
  CHECK(kl_to_string(kl_polynomial(W, word(*W, "2"), w)) == "1+q");
  CHECK(kl_to_string(kl_polynomial(W, word(*W, "1"), w)) == "1");
  CHECK(kl_at_one(kl_polynomial(W, W->identity(), w)) == 2);
}

TEST_CASE("KL polynomials agree with the R-polynomial recursion") {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'A', 3}, {'B', 3}}) {
    auto W = WeylGroup::get(std::string(1, type) + std::to_string(rank));
    oracle::EpsGroup eps(type, rank);
    oracle::KLOracle kl(eps);
    auto elts = W->lower_interval(W->longest());
    for (const auto& w : elts) {
      int iw = kl.index.at(test::to_oracle(eps, *W, w));
      for (const auto& x : elts) {
        int ix = kl.index.at(test::to_oracle(eps, *W, x));
        CHECK(kl_polynomial(W, x, w) == kl.P[ix][iw]);
      }
    }
  }
}

TEST_CASE("KL columns persist in the cache directory") {
  auto W = WeylGroup::get("A3");
  KLPoly before = kl_polynomial(W, W->identity(), word(*W, "2132"));
  flush_kl_cache();
  CHECK(kl_polynomial(W, W->identity(), word(*W, "2132")) == before);
}

TEST_CASE("characteristic cycles on Grassmannians are irreducible") {
  for (const char* name : {"A3/P2", "A5/P3"}) {
    auto gr = FlagSpace::parse(name);
    for (const auto& w : gr.elements()) {
      CHECK(cc_multiplicities(gr, w).irreducible());
      CHECK(cc_irreducible_by_euler(gr, w));
    }
  }
}

TEST_CASE("reducible characteristic cycles on Lagrangian Grassmannians") {
  auto lg24 = FlagSpace::parse("C2/P2");
  CCDecomposition cc = cc_multiplicities(lg24, lg24.parse_element("2"));
  CHECK_FALSE(cc.irreducible());
  CHECK(multiplicities(cc) == std::map<std::string, long>{{"2", 1}, {"()", 1}});
  CHECK_FALSE(cc_irreducible_by_euler(lg24, lg24.parse_element("2")));

  auto lg36 = FlagSpace::parse("C3/P3");
  CHECK_FALSE(cc_multiplicities(lg36, lg36.parse_element("32")).irreducible());
  CHECK_FALSE(cc_irreducible_by_euler(lg36, lg36.parse_element("32")));
  for (const auto& w : lg36.elements())
    CHECK(cc_multiplicities(lg36, w).irreducible() == cc_irreducible_by_euler(lg36, w));
}

TEST_CASE("smooth Schubert varieties have a single conormal component") {
  for (const char* name : {"B3/P1", "C3/P3", "D4/P1"}) {
    auto space = FlagSpace::parse(name);
    const WeylElt& top = space.elements().back();
    CHECK(multiplicities(cc_multiplicities(space, top)) == std::map<std::string, long>{{space.label(top), 1}});
    CHECK(multiplicities(cc_multiplicities(space, space.weyl().identity())) ==
          std::map<std::string, long>{{"()", 1}});
  }
}

TEST_CASE("characteristic cycle of a pulled-back Lagrangian divisor") {
  auto lg = FlagSpace::parse("C2/P2");
  auto sf = FlagSpace::borel(lg.group());
  const WeylGroup& W = sf.weyl();
  CCDecomposition cc = cc_pullback(lg, lg.parse_element("2"), sf);
  CHECK(multiplicities(cc) ==
        std::map<std::string, long>{{W.word_string(word(W, "1")), 1}, {W.word_string(word(W, "121")), 1}});

  SchubertClass diff = kl_class(sf, word(W, "121"), false) - pullback_mather(lg, lg.parse_element("2"), sf, false);
  CHECK(diff == pullback_mather(lg, lg.weyl().identity(), sf, false));
}

TEST_CASE("KL classes of smooth varieties are Mather classes") {
  auto space = FlagSpace::parse("B3/P1");
  const WeylElt& top = space.elements().back();
  for (bool eq : {false, true}) CHECK(kl_class(space, top, eq) == mather_class(space, top, eq).downstairs);
  auto gr = FlagSpace::parse("A3/P2");
  for (const auto& w : gr.elements()) CHECK(kl_class(gr, w, true) == mather_class(gr, w, true).downstairs);
}

TEST_CASE("ordinary and parabolic KL choices") {
  auto gr = FlagSpace::parse("A3/P2");
  WeylElt w = gr.parse_element("21");
  CHECK(kl_to_string(parabolic_kl(gr, gr.weyl().identity(), w)) == "1+q");
  CHECK(kl_to_string(parabolic_kl(gr, gr.parse_element("1"), w)) == "1");
  for (const auto& [v, pair] : ordinary_discrepancies(gr, w)) CHECK(pair.first != pair.second);
  auto lg = FlagSpace::parse("C3/P3");
  for (const auto& w3 : lg.elements())
    for (const auto& [v, pair] : ordinary_discrepancies(lg, w3)) {
      CHECK(kl_at_one(parabolic_kl(lg, v, w3)) == pair.first);
      CHECK(kl_at_one(parabolic_kl(lg, v, w3, true)) == pair.second);
    }
}
