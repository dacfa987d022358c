#include "comather/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "comather/emit.hpp"
#include "comather/kl.hpp"
#include "comather/loc.hpp"
#include "comather/tables.hpp"

namespace comather {

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string space = "";
  std::string w = "";
  bool equivariant = false;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c, bool needs_w = true) {
  cmd->add_option("--space", c.space, "flag space, e.g. A3/P2, C4/P4, E6/P6, C2/B")->required();
  auto* w = cmd->add_option("--w", c.w, "Schubert index: diagram label, reduced word or ideal");
  if (needs_w) w->required();
  cmd->add_flag("--equivariant", c.equivariant, "keep torus-equivariant coefficients");
  cmd->add_option("--format", c.format, "text, csv, json or latex")
      ->check(CLI::IsMember({"text", "csv", "json", "latex"}));
}

// "B", "P1,3" or a full space name, relative to the base space.
FlagSpace parse_target(const FlagSpace& base, const std::string& text) {
  if (text.find('/') != std::string::npos) return FlagSpace::parse(text);
  return FlagSpace::parse(base.roots().name() + "/" + text);
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"comather: Chern-Mather, CSM and Kazhdan-Lusztig classes of cominuscule Schubert varieties"};
  app.name("comather");
  app.require_subcommand(1);
  app.fallthrough();
  size_t max_interval = 0;
  app.add_option("--max-interval", max_interval, "cap on the number of terms or interval elements (0 = no cap)");

  Common mather_opts;
  std::string mather_pullback;
  bool mather_upstairs = false, mather_dual = false, mather_poly = false;
  auto* mather = app.add_subcommand("mather", "Mather class of a Schubert variety");
  add_common(mather, mather_opts);
  mather->add_option("--pullback-to", mather_pullback, "Mather class of the preimage in G/Q (e.g. B or P1,3)");
  mather->add_flag("--upstairs", mather_upstairs, "print c(T_w) cap [X_w] on G/B before the push-forward");
  mather->add_flag("--dual", mather_dual, "print the dual Mather class");
  mather->add_flag("--polynomial", mather_poly, "print the Mather polynomial with unimodality and log-concavity");

  Common csm_opts;
  auto* csm = app.add_subcommand("csm", "CSM class of a Schubert cell");
  add_common(csm, csm_opts);

  Common euler_opts;
  auto* euler = app.add_subcommand("euler", "local Euler obstructions of a Schubert variety");
  add_common(euler, euler_opts);
  bool euler_verify = false;
  euler->add_flag("--verify", euler_verify, "also check the equivariant expansion has zero residual");

  Common kl_opts;
  bool kl_ordinary = false, kl_polys = false;
  auto* klclass = app.add_subcommand("klclass", "Kazhdan-Lusztig class of a Schubert variety");
  add_common(klclass, kl_opts);
  klclass->add_flag("--assume-ordinary", kl_ordinary, "use ordinary P_{v,w} at minimal representatives");
  klclass->add_flag("--polys", kl_polys, "also list the KL polynomials used");

  Common cc_opts;
  std::string cc_pullback;
  bool cc_ordinary = false;
  auto* cc = app.add_subcommand("cc", "characteristic cycle of the intersection cohomology sheaf");
  add_common(cc, cc_opts);
  cc->add_option("--pullback-to", cc_pullback, "decompose the preimage in G/Q against pulled-back Mather classes");
  cc->add_flag("--assume-ordinary", cc_ordinary,
               "use ordinary P_{v,w} at minimal representatives and report where it differs");

  Common segre_opts;
  bool segre_conormal_flag = false;
  auto* segre = app.add_subcommand("segre-mather", "Segre-Mather class (or Segre class of the conormal space)");
  add_common(segre, segre_opts);
  segre->add_flag("--conormal", segre_conormal_flag, "print the Segre class of the conormal space instead");

  Common loc_opts;
  std::string loc_u;
  auto* cloc = app.add_subcommand("conormal-loc", "localization of the conormal space at a fixed point");
  add_common(cloc, loc_opts);
  cloc->add_option("--u", loc_u, "fixed point (minimal representative)")->required();

  Common table_opts;
  std::string table_kind = "mather";
  std::vector<std::string> table_cols;
  auto* table = app.add_subcommand("table", "full table of Mather, Euler or CSM coefficients");
  table->add_option("--space", table_opts.space, "flag space")->required();
  table->add_option("--kind", table_kind, "mather, euler or csm")->check(CLI::IsMember({"mather", "euler", "csm"}));
  table->add_option("--w", table_cols, "restrict to these columns (repeatable)");
  table->add_option("--format", table_opts.format, "csv, json or latex")
      ->check(CLI::IsMember({"text", "csv", "json", "latex"}));

  std::string golden_id, golden_fixture;
  auto* golden = app.add_subcommand("golden-diff", "recompute an embedded golden table and diff it");
  golden->add_option("id", golden_id, "fixture id, or 'all'")->required();
  golden->add_option("--fixture", golden_fixture, "diff this CSV file instead of the embedded fixture");
  std::string golden_format = "text";
  golden->add_option("--format", golden_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> scan_spaces;
  std::string scan_checks = "pos,euler-nonneg,unimodal,logconcave-A";
  bool scan_equivariant = false, scan_strict = false;
  auto* scan = app.add_subcommand("scan", "scan conjectured positivity and log-concavity properties");
  scan->add_option("--space", scan_spaces, "spaces to scan (repeatable)")->required();
  scan->add_option("--checks", scan_checks, "comma-separated subset of pos,euler-nonneg,unimodal,logconcave-A");
  scan->add_flag("--equivariant", scan_equivariant, "also check equivariant positivity");
  scan->add_flag("--strict", scan_strict, "exit 1 when any violation is found");
  std::string scan_format = "text";
  scan->add_option("--format", scan_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "comather: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    set_term_limit(max_interval);
    auto common_space = [](const Common& c) { return FlagSpace::parse(c.space); };

    if (mather->parsed()) {
      FlagSpace space = common_space(mather_opts);
      WeylElt w = space.parse_element(mather_opts.w);
      Format f = parse_format(mather_opts.format);
      if (mather_poly) {
        MatherPolynomial p = mather_polynomial(space, w);
        if (f == Format::Json) {
          nlohmann::json coeffs = nlohmann::json::array();
          for (const auto& c : p.coeffs) coeffs.push_back(c.get_str());
          out << nlohmann::json{{"space", space.name()}, {"w", space.label(w)}, {"coeffs", coeffs},
                                {"polynomial", p.to_string()}, {"unimodal", is_unimodal(p)},
                                {"log_concave", is_log_concave(p)}}
                     .dump(2)
              << "\n";
        } else {
          out << p.to_string() << "\nunimodal: " << (is_unimodal(p) ? "yes" : "no")
              << "\nlog-concave: " << (is_log_concave(p) ? "yes" : "no") << "\n";
        }
        return 0;
      }
      if (!mather_pullback.empty()) {
        FlagSpace target = parse_target(space, mather_pullback);
        out << emit_class(pullback_mather(space, w, target, mather_opts.equivariant), f);
        return 0;
      }
      const MatherResult& m = mather_class(space, w, mather_opts.equivariant);
      if (mather_upstairs)
        out << emit_class(m.upstairs, f);
      else if (mather_dual)
        out << emit_class(dual_mather(m), f);
      else
        out << emit_class(m.downstairs, f);
      return 0;
    }

    if (csm->parsed()) {
      FlagSpace space = common_space(csm_opts);
      WeylElt w = space.parse_element(csm_opts.w);
      out << emit_class(csm_cell(space, w, csm_opts.equivariant), parse_format(csm_opts.format));
      return 0;
    }

    if (euler->parsed()) {
      FlagSpace space = common_space(euler_opts);
      WeylElt w = space.parse_element(euler_opts.w);
      EulerTable e = euler_obstructions(space, w, euler_verify || euler_opts.equivariant);
      Format f = parse_format(euler_opts.format);
      if (f == Format::Json) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& [v, x] : e.values) values.push_back({{"point", space.label(v)}, {"value", x.get_str()}});
        out << nlohmann::json{{"space", space.name()}, {"w", space.label(w)}, {"values", values}}.dump(2) << "\n";
      } else if (f == Format::Latex) {
        out << "\\begin{tabular}{r|r}\n & " << space.label(w) << " \\\\\n\\hline\n";
        for (const auto& [v, x] : e.values) out << space.label(v) << " & " << x.get_str() << " \\\\\n";
        out << "\\end{tabular}\n";
      } else {
        out << "label," << space.label(w) << "\n";
        for (const auto& [v, x] : e.values) out << space.label(v) << "," << x.get_str() << "\n";
      }
      return 0;
    }

    if (klclass->parsed()) {
      FlagSpace space = common_space(kl_opts);
      WeylElt w = space.parse_element(kl_opts.w);
      Format f = parse_format(kl_opts.format);
      SchubertClass c = kl_class(space, w, kl_opts.equivariant, kl_ordinary);
      if (f == Format::Json) {
        nlohmann::json j = class_to_json(c);
        nlohmann::json polys = nlohmann::json::array();
        for (const WeylElt& v : space.elements())
          if (space.weyl().bruhat_leq(v, w))
            polys.push_back({{"v", space.label(v)}, {"P", kl_to_string(parabolic_kl(space, v, w, kl_ordinary))}});
        j["kl_polynomials"] = polys;
        out << j.dump(2) << "\n";
      } else {
        out << emit_class(c, f);
        if (kl_polys)
          for (const WeylElt& v : space.elements())
            if (space.weyl().bruhat_leq(v, w))
              out << "P(" << space.label(v) << "," << space.label(w)
                  << ") = " << kl_to_string(parabolic_kl(space, v, w, kl_ordinary)) << "\n";
      }
      return 0;
    }

    if (cc->parsed()) {
      FlagSpace space = common_space(cc_opts);
      WeylElt w = space.parse_element(cc_opts.w);
      Format f = parse_format(cc_opts.format);
      CCDecomposition d = cc_pullback.empty() ? cc_multiplicities(space, w, cc_ordinary)
                                              : comather::cc_pullback(space, w, parse_target(space, cc_pullback));
      const FlagSpace& ds = d.space;
      if (f == Format::Json) {
        nlohmann::json mult = nlohmann::json::array();
        for (const auto& [v, m] : d.multiplicities) mult.push_back({{"v", ds.label(v)}, {"m", m.get_str()}});
        nlohmann::json j{{"space", ds.name()}, {"w", ds.label(d.w)}, {"multiplicities", mult},
                         {"irreducible", d.irreducible()}};
        if (cc_ordinary && cc_pullback.empty()) {
          nlohmann::json disc = nlohmann::json::array();
          for (const auto& [v, vals] : ordinary_discrepancies(space, w))
            disc.push_back({{"v", space.label(v)}, {"parabolic", vals.first}, {"ordinary", vals.second}});
          j["discrepancies"] = disc;
        }
        out << j.dump(2) << "\n";
      } else {
        std::string s;
        for (const auto& [v, m] : d.multiplicities) {
          if (!s.empty()) s += " + ";
          s += (m == 1 ? std::string() : m.get_str()) + "T*[" + ds.label(v) + "]";
        }
        out << "CC = " << s << "\nirreducible: " << (d.irreducible() ? "yes" : "no") << "\n";
        if (cc_ordinary && cc_pullback.empty())
          for (const auto& [v, vals] : ordinary_discrepancies(space, w))
            out << "discrepancy at " << space.label(v) << ": parabolic P(1) = " << vals.first
                << ", ordinary P(1) = " << vals.second << "\n";
      }
      return 0;
    }

    if (segre->parsed()) {
      FlagSpace space = common_space(segre_opts);
      WeylElt w = space.parse_element(segre_opts.w);
      SchubertClass c = segre_conormal_flag ? segre_conormal(space, w, segre_opts.equivariant)
                                            : segre_mather(space, w, segre_opts.equivariant);
      out << emit_class(c, parse_format(segre_opts.format));
      return 0;
    }

    if (cloc->parsed()) {
      FlagSpace space = common_space(loc_opts);
      WeylElt w = space.parse_element(loc_opts.w);
      WeylElt u = space.parse_element(loc_u);
      EquivPoly p = conormal_localize(space, w, u);
      Format f = parse_format(loc_opts.format);
      if (f == Format::Json)
        out << nlohmann::json{{"space", space.name()}, {"w", space.label(w)}, {"u", space.label(u)},
                              {"value", p.to_string()}, {"monomials", poly_to_json(p, space.weyl().rank())}}
                   .dump(2)
            << "\n";
      else if (f == Format::Latex)
        out << p.to_latex() << "\n";
      else
        out << p.to_string() << "\n";
      return 0;
    }

    if (table->parsed()) {
      FlagSpace space = FlagSpace::parse(table_opts.space);
      TableKind kind = parse_table_kind(table_kind);
      std::vector<WeylElt> order = table_order(space, kind);
      std::vector<WeylElt> cols = order;
      if (!table_cols.empty()) {
        cols.clear();
        for (const auto& l : table_cols) cols.push_back(space.parse_element(l));
      }
      // Rows are the elements below some column, in table order.
      std::vector<WeylElt> rows;
      for (const WeylElt& u : order)
        for (const WeylElt& w : cols)
          if (space.weyl().bruhat_leq(u, w)) {
            rows.push_back(u);
            break;
          }
      if (table_cols.empty()) rows = order;
      Table t = compute_table(space, kind, rows, cols);
      Format f = parse_format(table_opts.format);
      if (f == Format::Json) {
        nlohmann::json j{{"space", space.name()}, {"kind", to_string(kind)}, {"rows", t.row_labels},
                         {"columns", t.col_labels}, {"cells", t.cells}};
        out << j.dump(2) << "\n";
      } else if (f == Format::Latex) {
        out << t.to_latex();
      } else {
        out << t.to_csv();
      }
      return 0;
    }

    if (golden->parsed()) {
      std::vector<const GoldenTable*> targets;
      if (golden_id == "all") {
        for (const auto& t : golden_tables()) targets.push_back(&t);
      } else if (const GoldenTable* t = find_golden(golden_id)) {
        targets.push_back(t);
      } else {
        std::string ids;
        for (const auto& t : golden_tables()) ids += " " + t.id;
        throw BadInput("unknown golden table '" + golden_id + "'; known ids:" + ids);
      }
      bool ok = true;
      nlohmann::json report = nlohmann::json::array();
      for (const GoldenTable* t : targets) {
        GoldenReport r;
        if (!golden_fixture.empty()) {
          std::ifstream in(golden_fixture);
          if (!in) throw BadInput("cannot read fixture " + golden_fixture);
          std::stringstream buf;
          buf << in.rdbuf();
          r = diff_block(FlagSpace::parse(t->space), t->kind, GoldenBlock{golden_fixture, buf.str()});
        } else {
          r = diff_golden(*t);
        }
        bool pass = r.mismatches.empty() && r.byte_identical;
        ok = ok && pass;
        if (golden_format == "json") {
          nlohmann::json mm = nlohmann::json::array();
          for (const auto& m : r.mismatches)
            mm.push_back({{"block", m.block}, {"row", m.row}, {"col", m.col}, {"expected", m.expected}, {"got", m.got}});
          report.push_back({{"id", t->id}, {"space", t->space}, {"pass", pass}, {"byte_identical", r.byte_identical},
                            {"mismatches", mm}});
        } else {
          for (const auto& m : r.mismatches)
            out << t->id << " " << m.block << " row " << m.row << " col " << m.col << ": expected " << m.expected
                << ", got " << m.got << "\n";
          out << t->id << " (" << t->space << ", " << to_string(t->kind) << "): "
              << (pass ? "OK" : std::to_string(r.mismatches.size()) + " mismatches") << "\n";
        }
      }
      if (golden_format == "json") out << report.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (scan->parsed()) {
      std::vector<std::string> checks;
      {
        std::stringstream ss(scan_checks);
        std::string c;
        while (std::getline(ss, c, ','))
          if (!c.empty()) checks.push_back(c);
      }
      for (const auto& c : checks)
        if (c != "pos" && c != "euler-nonneg" && c != "unimodal" && c != "logconcave-A")
          throw BadInput("unknown check '" + c + "'");
      size_t total = 0;
      nlohmann::json report = nlohmann::json::array();
      for (const auto& name : scan_spaces) {
        FlagSpace space = FlagSpace::parse(name);
        require_cominuscule(space);
        for (const auto& check : checks) {
          std::vector<std::string> found;
          for (const WeylElt& w : space.elements()) {
            std::string wl = space.label(w);
            if (check == "pos") {
              for (const auto& v : check_positivity(space, w, false)) found.push_back(wl + ": " + v.detail);
              if (scan_equivariant)
                for (const auto& v : check_positivity(space, w, true)) found.push_back(wl + " (equivariant): " + v.detail);
            } else if (check == "euler-nonneg") {
              for (const auto& v : check_euler_nonneg(space, w)) found.push_back(wl + ": " + v.detail);
            } else {
              MatherPolynomial p = mather_polynomial(space, w);
              bool holds = check == "unimodal" ? is_unimodal(p) : is_log_concave(p);
              if (!holds) found.push_back(wl + ": " + p.to_string());
            }
          }
          total += found.size();
          if (scan_format == "json") {
            report.push_back({{"space", space.name()}, {"check", check}, {"violations", found}});
          } else {
            out << space.name() << " " << check << ": " << found.size() << " violation"
                << (found.size() == 1 ? "" : "s") << "\n";
            out << join_lines([&] {
              std::vector<std::string> lines;
              for (const auto& f : found) lines.push_back("  " + f);
              return lines;
            }());
          }
        }
      }
      if (scan_format == "json") out << report.dump(2) << "\n";
      return scan_strict && total ? 1 : 0;
    }
  } catch (const ResourceLimit& e) {
    err << "comather: " << e.what() << "\n";
    return 3;
  } catch (const NotPolynomial& e) {
    err << "comather: internal error: " << e.what() << " (remainder " << e.remainder() << ")\n";
    return 4;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      err << "comather: " << e.what() << "\n";
      return 2;
    }
    err << "comather: internal error: " << e.what() << "\n";
    return 4;
  } catch (const BadInput& e) {
    err << "comather: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "comather: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace comather
