#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "comather/csm.hpp"
#include "comather/kl.hpp"
#include "comather/loc.hpp"
#include "comather/mather.hpp"
#include "comather/tables.hpp"
#include "oracles.hpp"

using namespace comather;

namespace {

// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

EquivPoly a(int i) { return EquivPoly::alpha(i - 1); }

WeylElt word(const WeylGroup& W, const std::string& letters) {
  std::vector<int> w;
  for (char c : letters) w.push_back(c - '1');
  return W.from_word(w);
}

SchubertClass by_label(const FlagSpace& space, bool equivariant,
                       const std::vector<std::pair<std::string, EquivPoly>>& terms) {
  SchubertClass c(space, equivariant);
  for (const auto& [l, coeff] : terms) c.add(space.parse_element(l), coeff);
  return c;
}

SchubertClass by_word(const FlagSpace& space, const std::vector<std::pair<std::string, long>>& terms) {
  SchubertClass c(space, false);
  for (const auto& [w, coeff] : terms) c.add(w == "id" ? space.weyl().identity() : word(space.weyl(), w), coeff);
  return c;
}

EquivPoly leading(const WeylGroup& W, const WeylElt& w) {
  EquivPoly lead(1);
  for (int k : W.inversion_set(w)) lead *= EquivPoly(1) - EquivPoly::from_weight(W.act(w, W.roots().root(k)));
  return lead;
}

void gr24_divisor(Check& c) {
  auto gr = FlagSpace::parse("A3/P2");
  WeylElt w = gr.parse_element("21");
  c.expect(mather_class(gr, w, false).downstairs ==
               by_label(gr, false, {{"21", 1}, {"2", 3}, {"11", 3}, {"1", 8}, {"()", 6}}),
           "non-equivariant class");
  SchubertClass eq = by_label(gr, true,
                              {{"21", (1 + a(1)) * (1 + a(3)) * (1 + a(1) + a(2) + a(3))},
                               {"2", (1 + a(3)) * (3 + a(1) + 2 * a(2) + 2 * a(3))},
                               {"11", (1 + a(1)) * (3 + 2 * a(1) + 2 * a(2) + a(3))},
                               {"1", 8 + 2 * a(1) + 4 * a(2) + 2 * a(3)},
                               {"()", 6}});
  c.expect(mather_class(gr, w, true).downstairs == eq, "equivariant class");
}

void fl4_classes(Check& c) {
  auto gr = FlagSpace::parse("A3/P2");
  auto fl = FlagSpace::borel(gr.group());
  WeylElt w = gr.parse_element("21");
  c.expect(mather_class(gr, w, false).upstairs ==
               by_word(fl, {{"132", 1}, {"32", 3}, {"31", 4}, {"3", 3}, {"12", 3}, {"2", 8}, {"1", 3}, {"id", 6}}),
           "intermediate class on Fl(4)");
  SchubertClass pulled = pullback_mather(gr, w, fl, false);
  c.expect(pulled.size() == 20, "pull-back has 20 terms");
  c.expect(pulled == by_word(fl, {{"12321", 1}, {"2321", 3}, {"1231", 3}, {"231", 10}, {"31", 28},
                                  {"1232", 2},  {"232", 8},  {"123", 4},  {"23", 16},  {"3", 28},
                                  {"3121", 2},  {"321", 4},  {"121", 8},  {"21", 16},  {"1", 28},
                                  {"312", 4},   {"32", 12},  {"12", 12},  {"2", 32},   {"id", 24}}),
           "pull-back expansion");
}

void golden(Check& c) {
  for (const GoldenTable& t : golden_tables()) {
    GoldenReport r = diff_golden(t);
    c.expect(r.mismatches.empty(), t.id + ": " + std::to_string(r.mismatches.size()) + " mismatches");
    c.expect(r.byte_identical, t.id + ": not byte-identical");
  }
}

void lg431(Check& c) {
  auto lg = FlagSpace::parse("C4/P4");
  WeylElt w = lg.parse_element("431");
  c.expect(mather_class(lg, w, false).downstairs ==
               by_label(lg, false,
                        {{"431", 1}, {"43", 4}, {"421", 7}, {"42", 27}, {"321", 25}, {"41", 60}, {"32", 92},
                         {"4", 45}, {"31", 241}, {"3", 183}, {"21", 269}, {"2", 246}, {"1", 132}, {"()", 24}}),
           "LG(4,8) expansion");
  MatherPolynomial p = mather_polynomial(lg, w);
  c.expect(p.to_string() == "x^8+11x^7+52x^6+152x^5+286x^4+452x^3+246x^2+132x+24", "polynomial " + p.to_string());
  c.expect(is_unimodal(p), "unimodality");
  auto og = FlagSpace::parse("B3/P1");
  MatherPolynomial q = mather_polynomial(og, og.elements().back());
  c.expect(q.to_string() == "x^5+5x^4+11x^3+26x^2+18x+6", "OG(1,7) polynomial " + q.to_string());
  c.expect(!is_log_concave(q), "OG(1,7) log-concavity must fail");
}

void euler_examples(Check& c) {
  auto table = [](const char* space_name, const char* w) {
    auto space = FlagSpace::parse(space_name);
    std::map<std::string, long> out;
    for (const auto& [v, e] : euler_obstructions(space, space.parse_element(w)).values) out[space.label(v)] = e.get_si();
    return out;
  };
  c.expect(table("A3/P2", "21").at("11") == 1, "Gr(2,4) e at (1,1)");
  c.expect(table("C2/P2", "2") == std::map<std::string, long>{{"2", 1}, {"1", 1}, {"()", 0}}, "LG(2,4)");
  c.expect(table("C3/P3", "32") ==
               std::map<std::string, long>{{"32", 1}, {"31", 1}, {"21", 1}, {"()", 1}, {"3", 0}, {"2", 0}, {"1", 0}},
           "LG(3,6)");
}

void kl_cc(Check& c) {
  auto lg = FlagSpace::parse("C2/P2");
  auto sf = FlagSpace::borel(lg.group());
  const WeylGroup& W = sf.weyl();
  SchubertClass diff = kl_class(sf, word(W, "121"), false) - pullback_mather(lg, lg.parse_element("2"), sf, false);
  c.expect(diff == pullback_mather(lg, lg.weyl().identity(), sf, false), "KL class minus Mather class");
  CCDecomposition cc = cc_pullback(lg, lg.parse_element("2"), sf);
  std::vector<std::pair<WeylElt, mpz_class>> expected{{word(W, "1"), 1}, {word(W, "121"), 1}};
  auto got = cc.multiplicities;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  c.expect(got == expected, "CC on the C2 flag manifold");
  for (const char* name : {"A3/P2", "A5/P3"}) {
    auto gr = FlagSpace::parse(name);
    for (const auto& w : gr.elements())
      c.expect(cc_multiplicities(gr, w).irreducible() && cc_irreducible_by_euler(gr, w),
               std::string(name) + " " + gr.label(w) + " irreducible");
  }
  c.expect(!cc_multiplicities(lg, lg.parse_element("2")).irreducible(), "LG(2,4) (2) reducible");
  auto lg36 = FlagSpace::parse("C3/P3");
  c.expect(!cc_multiplicities(lg36, lg36.parse_element("32")).irreducible(), "LG(3,6) (3,2) reducible");
}

void localization(Check& c) {
  for (const char* name : {"A3/P2", "C3/P3"}) {
    auto space = FlagSpace::parse(name);
    const WeylGroup& W = space.weyl();
    auto fl = FlagSpace::borel(space.group());
    for (const auto& w : space.elements()) {
      const MatherResult& m = mather_class(space, w, true);
      SchubertClass hu = homogenize(m.upstairs), hd = homogenize(m.downstairs);
      mpq_class sign = w.length() % 2 ? -1 : 1;
      for (const auto& v : fl.elements())
        if (W.bruhat_leq(v, w))
          c.expect(ctwloc(W, w, v) == sign * localize(hu, v), std::string(name) + " closed form at " + fl.label(v));
      for (const auto& u : space.elements()) {
        EquivPoly got = conormal_localize(space, w, u);
        c.expect(got == sign * parabolic_localize(hu, space, u), std::string(name) + " conormal at " + space.label(u));
        c.expect(got == sign * localize(hd, u), std::string(name) + " downstairs at " + space.label(u));
      }
    }
  }
}

void properties(Check& c) {
  for (const char* name : {"A3/B", "B3/B", "C2/B"}) {
    auto fl = FlagSpace::parse(name);
    const RootSystem& rs = fl.roots();
    for (const auto& w : fl.elements())
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.num_positive_roots(); ++j) {
          SchubertClass x = schubert(fl, w, true);
          Weight l = Weight::simple(rs.rank(), i), m = -rs.root(j);
          c.expect(chevalley_mul(chevalley_mul(x, l), m) == chevalley_mul(chevalley_mul(x, m), l),
                   std::string(name) + " Chevalley commutativity");
        }
  }

  for (const char* name : {"A3/B", "A5/P3", "C3/P3"}) {
    auto space = FlagSpace::parse(name);
    const WeylGroup& W = space.weyl();
    for (bool eq : {false, true}) {
      for (const auto& v : space.elements()) {
        SchubertClass cell = csm_cell(space, v, eq);
        c.expect(cell.coeff(v).substitute_alphas_zero() == EquivPoly(1), std::string(name) + " unitriangular");
        for (const auto& [u, coeff] : cell.terms()) c.expect(W.bruhat_leq(u, v), std::string(name) + " triangular");
        c.expect(cell.specialize() == csm_cell(space, v, false), std::string(name) + " CSM specialization");
      }
      c.expect(csm_total(space, eq) == tangent_total(space, eq), std::string(name) + " total CSM class");
    }
  }

  for (const char* name : {"A3/P2", "A5/P3", "C3/P3", "C4/P4", "B3/P1", "D4/P4"}) {
    auto space = FlagSpace::parse(name);
    for (const auto& w : space.elements()) {
      mpz_class sum = 0;
      for (const auto& [v, e] : euler_obstructions(space, w).values) sum += e;
      c.expect(mather_class(space, w, false).downstairs.coeff(space.weyl().identity()) == EquivPoly(mpq_class(sum)),
               std::string(name) + " point-class identity at " + space.label(w));
      c.expect(mather_class(space, w, true).downstairs.specialize() == mather_class(space, w, false).downstairs,
               std::string(name) + " Mather specialization");
      c.expect(mather_class(space, w, true).downstairs.coeff(w) == leading(space.weyl(), w),
               std::string(name) + " leading coefficient");
      c.expect(kl_class(space, w, true).specialize() == kl_class(space, w, false), std::string(name) + " KL specialization");
      c.expect(segre_mather(space, w, true).specialize() == segre_mather(space, w, false),
               std::string(name) + " Segre-Mather specialization");
    }
  }
  auto gr = FlagSpace::parse("A3/P2");
  auto fl = FlagSpace::borel(gr.group());
  for (const auto& w : gr.elements())
    c.expect(pullback_mather(gr, w, fl, true).specialize() == pullback_mather(gr, w, fl, false),
             "pull-back specialization");

  auto small = FlagSpace::parse("A3/P2"), big = FlagSpace::parse("A6/P3");
  for (const auto& w : small.elements()) {
    const SchubertClass& cs = mather_class(small, w, false).downstairs;
    const SchubertClass& cb = mather_class(big, big.parse_element(small.label(w)), false).downstairs;
    c.expect(cs.size() == cb.size(), "stability support at " + small.label(w));
    for (const auto& [v, coeff] : cs.terms())
      c.expect(cb.coeff(big.parse_element(small.label(v))) == coeff, "stability at " + small.label(w));
  }

  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'A', 3}, {'B', 3},
                                                            {'C', 3}}) {
    std::string name = std::string(1, type) + std::to_string(rank);
    auto W = WeylGroup::get(name);
    oracle::EpsGroup eps(type, rank);
    auto elts = W->lower_interval(W->longest());
    for (const auto& w : elts) {
      const SchubertClass& cell = csm_cell_gb(W, w, true);
      for (const auto& rw : eps.reduced_words(eps.from_word(W->reduced_word(w))))
        c.expect(csm_cell_gb_along(W, rw, true) == cell, name + " CSM word independence");
    }
    for (const auto& v : elts) {
      auto words = eps.reduced_words(eps.from_word(W->reduced_word(W->mul(W->longest(), v))));
      for (const auto& w : elts) {
        EquivPoly p = billey_localize(*W, w, v);
        for (const auto& rw : words)
          c.expect(billey_localize_along(*W, w, v, rw) == p, name + " localization word independence");
      }
    }
  }
}

void scans(Check& c) {
  std::vector<std::string> spaces;
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) spaces.push_back("A" + std::to_string(n - 1) + "/P" + std::to_string(k));
  for (const char* s : {"C2/P2", "C3/P3", "C4/P4", "B2/P1", "B3/P1", "B4/P1", "D4/P1", "D3/P3", "D4/P3", "D4/P4"})
    spaces.push_back(s);
  for (const auto& name : spaces) {
    auto space = FlagSpace::parse(name);
    for (const auto& w : space.elements()) {
      std::string where = name + " " + space.label(w);
      for (const auto& v : check_positivity(space, w, false)) c.expect(false, where + ": " + v.detail);
      for (const auto& v : check_positivity(space, w, true)) c.expect(false, where + " (equivariant): " + v.detail);
      for (const auto& v : check_euler_nonneg(space, w)) c.expect(false, where + " Euler: " + v.detail);
    }
  }
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 = no hard budget
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Gr(2,4) divisor Mather class", 1, gr24_divisor},
      {2, "Fl(4) intermediate and pull-back classes", 1, fl4_classes},
      {3, "golden tables", 0, golden},
      {4, "LG(4,8) (4,3,1) and Mather polynomials", 0, lg431},
      {5, "Euler obstruction examples", 0, euler_examples},
      {6, "KL classes and characteristic cycles", 0, kl_cc},
      {7, "localization cross-check", 30, localization},
      {8, "property suites", 0, properties},
      {9, "positivity scans", 600, scans},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && secs > cr.budget_seconds)
      check.failures.push_back("over the " + std::to_string(static_cast<int>(cr.budget_seconds)) + " s budget");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (check.ok() ? "PASS" : "FAIL") << " " << cr.id << " " << cr.title << " (" << timing << ")\n";
    for (const auto& f : check.failures) std::cout << "    " << f << "\n";
    failed += !check.ok();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
