#include "comather/tables.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "comather/csm.hpp"
#include "golden_data.hpp"

namespace comather {

TableKind parse_table_kind(const std::string& s) {
  if (s == "mather") return TableKind::Mather;
  if (s == "euler") return TableKind::Euler;
  if (s == "csm") return TableKind::Csm;
  throw std::invalid_argument("unknown table kind '" + s + "' (expected mather, euler or csm)");
}

std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::Mather: return "mather";
    case TableKind::Euler: return "euler";
    case TableKind::Csm: return "csm";
  }
  return "?";
}

std::string Table::to_csv() const {
  std::string s = "label";
  for (const auto& c : col_labels) s += "," + c;
  s += "\n";
  for (size_t r = 0; r < row_labels.size(); ++r) {
    s += row_labels[r];
    for (const auto& cell : cells[r]) s += "," + cell;
    s += "\n";
  }
  return s;
}

std::string Table::to_latex() const {
  std::string s = "\\begin{tabular}{r|" + std::string(col_labels.size(), 'r') + "}\n";
  s += " ";
  for (const auto& c : col_labels) s += " & " + c;
  s += " \\\\\n\\hline\n";
  for (size_t r = 0; r < row_labels.size(); ++r) {
    s += row_labels[r];
    for (const auto& cell : cells[r]) s += " & " + cell;
    s += " \\\\\n";
  }
  return s + "\\end{tabular}\n";
}

Table Table::from_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.empty()) continue;
    if (header) {
      t.col_labels.assign(fields.begin() + 1, fields.end());
      header = false;
      continue;
    }
    if (fields.size() != t.col_labels.size() + 1) throw std::invalid_argument("ragged CSV row '" + fields[0] + "'");
    t.row_labels.push_back(fields[0]);
    t.cells.emplace_back(fields.begin() + 1, fields.end());
  }
  return t;
}

Table compute_table(const FlagSpace& space, TableKind kind, const std::vector<WeylElt>& rows,
                    const std::vector<WeylElt>& cols) {
  Table t;
  for (const auto& u : rows) t.row_labels.push_back(space.label(u));
  for (const auto& w : cols) t.col_labels.push_back(space.label(w));
  t.cells.assign(rows.size(), std::vector<std::string>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    const WeylElt& w = cols[c];
    std::vector<mpz_class> column(rows.size());
    if (kind == TableKind::Euler) {
      EulerTable e = euler_obstructions(space, w);
      for (size_t r = 0; r < rows.size(); ++r) column[r] = e.at(rows[r]);
    } else {
      SchubertClass cls = kind == TableKind::Mather ? mather_class(space, w, false).downstairs
                                                    : csm_cell(space, w, false);
      for (size_t r = 0; r < rows.size(); ++r) {
        mpq_class q = cls.coeff(rows[r]).constant_term();
        if (q.get_den() != 1) throw std::logic_error("non-integral table entry");
        column[r] = q.get_num();
      }
    }
    for (size_t r = 0; r < rows.size(); ++r) t.cells[r][c] = column[r].get_str();
  }
  return t;
}

const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables = [] {
    struct Spec {
      const char* id;
      const char* space;
      TableKind kind;
      std::vector<const char*> blocks;
    };
    // Gr(3,7) is stored with conjugate labels, i.e. as Gr(4,7).
    const std::vector<Spec> specs = {
        {"Gr36", "A5/P3", TableKind::Mather, {"Gr36"}},
        {"Gr37", "A6/P4", TableKind::Mather, {"Gr37"}},
        {"Gr48", "A7/P4", TableKind::Mather, {"Gr48-1", "Gr48-2", "Gr48-3"}},
        {"LG48-mather", "C4/P4", TableKind::Mather, {"LG48-mather"}},
        {"LG48-euler", "C4/P4", TableKind::Euler, {"LG48-euler"}},
        {"E6-mather", "E6/P6", TableKind::Mather, {"E6-mather-1", "E6-mather-2"}},
        {"LG510-euler", "C5/P5", TableKind::Euler, {"LG510-euler"}},
    };
    const auto& data = embedded_golden_blocks();
    std::vector<GoldenTable> out;
    for (const auto& s : specs) {
      GoldenTable t{s.id, s.space, s.kind, {}};
      for (const char* b : s.blocks) {
        auto it = std::find_if(data.begin(), data.end(), [&](const GoldenBlock& g) { return g.name == b; });
        if (it == data.end()) throw std::logic_error(std::string("missing embedded fixture ") + b);
        t.blocks.push_back(*it);
      }
      out.push_back(std::move(t));
    }
    return out;
  }();
  return tables;
}

const GoldenTable* find_golden(const std::string& id) {
  for (const auto& t : golden_tables())
    if (t.id == id) return &t;
  return nullptr;
}

const GoldenTable* golden_for(const FlagSpace& space, TableKind kind) {
  for (const auto& t : golden_tables())
    if (t.kind == kind && FlagSpace::parse(t.space) == space) return &t;
  return nullptr;
}

std::vector<WeylElt> table_order(const FlagSpace& space, TableKind kind) {
  std::vector<WeylElt> out;
  std::unordered_set<WeylElt, WeylEltHash> seen;
  if (const GoldenTable* g = golden_for(space, kind)) {
    for (const auto& b : g->blocks) {
      Table t = Table::from_csv(b.csv);
      for (const auto* labels : {&t.row_labels, &t.col_labels})
        for (const auto& l : *labels) {
          WeylElt w = space.parse_element(l);
          if (seen.insert(w).second) out.push_back(w);
        }
    }
  }
  for (const auto& w : space.elements())
    if (seen.insert(w).second) out.push_back(w);
  return out;
}

GoldenReport diff_block(const FlagSpace& space, TableKind kind, const GoldenBlock& block) {
  Table expected = Table::from_csv(block.csv);
  std::vector<WeylElt> rows, cols;
  auto resolve = [&](const std::string& label) {
    WeylElt w = space.parse_element(label);
    if (space.label(w) != label)
      throw std::invalid_argument("fixture label '" + label + "' is not canonical for " + space.name());
    return w;
  };
  for (const auto& l : expected.row_labels) rows.push_back(resolve(l));
  for (const auto& l : expected.col_labels) cols.push_back(resolve(l));
  Table got = compute_table(space, kind, rows, cols);
  GoldenReport report;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c)
      if (expected.cells[r][c] != got.cells[r][c])
        report.mismatches.push_back(
            {block.name, expected.row_labels[r], expected.col_labels[c], expected.cells[r][c], got.cells[r][c]});
  report.byte_identical = got.to_csv() == block.csv;
  return report;
}

GoldenReport diff_golden(const GoldenTable& table) {
  FlagSpace space = FlagSpace::parse(table.space);
  GoldenReport total;
  for (const auto& b : table.blocks) {
    GoldenReport r = diff_block(space, table.kind, b);
    total.mismatches.insert(total.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    total.byte_identical = total.byte_identical && r.byte_identical;
  }
  return total;
}

}  // namespace comather
