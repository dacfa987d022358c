#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comather/chow.hpp"

namespace comather {

enum class TableKind { Mather, Euler, Csm };

TableKind parse_table_kind(const std::string& s);
std::string to_string(TableKind k);

// Rectangular integer table; cells[r][c] refers to row_labels[r], col_labels[c].
struct Table {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<std::string>> cells;

  std::string to_csv() const;
  std::string to_latex() const;
  static Table from_csv(const std::string& text);
};

// Mather: row u, column w holds the [X_u]-coefficient of the Mather class of X_w.
// Euler: row u, column w holds the Euler obstruction of X_w at the point u.
// Csm: row u, column w holds the [X_u]-coefficient of the CSM class of the cell of w.
Table compute_table(const FlagSpace& space, TableKind kind, const std::vector<WeylElt>& rows,
                    const std::vector<WeylElt>& cols);

struct GoldenBlock {
  std::string name;  // file stem
  std::string csv;   // verbatim fixture text
};

struct GoldenTable {
  std::string id;
  std::string space;  // e.g. "C4/P4"
  TableKind kind;
  std::vector<GoldenBlock> blocks;
};

const std::vector<GoldenTable>& golden_tables();
const GoldenTable* find_golden(const std::string& id);
const GoldenTable* golden_for(const FlagSpace& space, TableKind kind);

// Row/column order for a full table: the fixture order where one exists, then canonical order.
std::vector<WeylElt> table_order(const FlagSpace& space, TableKind kind);

struct CellMismatch {
  std::string block, row, col, expected, got;
};

struct GoldenReport {
  std::vector<CellMismatch> mismatches;
  bool byte_identical = true;
};

// Recomputes every cell of the block; labels are validated against the space.
GoldenReport diff_block(const FlagSpace& space, TableKind kind, const GoldenBlock& block);
GoldenReport diff_golden(const GoldenTable& table);

}  // namespace comather
