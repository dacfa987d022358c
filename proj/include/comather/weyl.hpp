#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "comather/roots.hpp"

namespace comather {

// Bit i set means simple node i (0-based) belongs to the Levi factor of P.
using NodeMask = uint32_t;

// Weyl group element stored as its matrix on simple-root coordinates:
// column j holds w(alpha_j).
class WeylElt {
 public:
  WeylElt() = default;

  int rank() const { return rank_; }
  int length() const { return len_; }
  int entry(int row, int col) const { return m_[col * kMaxRank + row]; }
  Weight column(int col) const;
  bool is_identity() const { return len_ == 0; }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.m_ == b.m_ && a.rank_ == b.rank_; }
  // Arbitrary but fixed total order (used for ordered containers only).
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.m_ < b.m_; }
  size_t hash() const;

 private:
  friend class WeylGroup;
  std::array<int8_t, kMaxRank * kMaxRank> m_{};
  int8_t rank_ = 0;
  int16_t len_ = 0;
};

struct WeylEltHash {
  size_t operator()(const WeylElt& w) const { return w.hash(); }
};

struct Cover {
  int root;      // index of the positive root alpha
  WeylElt elt;   // w s_alpha
};

struct ParabolicQuotient {
  NodeMask levi = 0;
  std::vector<WeylElt> min_reps;  // sorted by (length, canonical word)
  std::vector<int> r_p_plus;      // positive roots of the Levi factor
};

class WeylGroup {
 public:
  // Shared instance per root system; caches live as long as the process.
  static std::shared_ptr<WeylGroup> get(const RootSystemPtr& rs);
  static std::shared_ptr<WeylGroup> get(const std::string& name);

  explicit WeylGroup(RootSystemPtr rs);
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& roots() const { return *rs_; }
  const RootSystemPtr& roots_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }

  WeylElt identity() const;
  WeylElt simple(int i) const;
  WeylElt reflection(int root_index) const;
  WeylElt longest() const;

  WeylElt mul(const WeylElt& u, const WeylElt& v) const;
  WeylElt inverse(const WeylElt& w) const;
  WeylElt left_mul(int i, const WeylElt& w) const;
  WeylElt right_mul(const WeylElt& w, int i) const;
  Weight act(const WeylElt& w, const Weight& lambda) const;

  // Letters are 0-based simple indices; the word need not be reduced.
  WeylElt from_word(std::span<const int> word) const;
  // Lexicographically least reduced word (greedy smallest left descent).
  std::vector<int> reduced_word(const WeylElt& w) const;
  // Canonical word as text: letters 1-based, e.g. "132"; "id" for the identity.
  std::string word_string(const WeylElt& w) const;

  bool is_right_descent(const WeylElt& w, int i) const { return w.column(i).is_negative(); }
  bool is_left_descent(const WeylElt& w, int i) const;

  // Indices of positive roots alpha with w(alpha) < 0, ascending.
  std::vector<int> inversion_set(const WeylElt& w) const;

  bool bruhat_leq(const WeylElt& v, const WeylElt& w) const;
  const std::vector<Cover>& chevalley_covers(const WeylElt& w) const;
  // All v <= w, sorted by (length, canonical word).
  std::vector<WeylElt> lower_interval(const WeylElt& w) const;

  WeylElt longest_element(NodeMask subset) const;
  bool is_min_rep(const WeylElt& w, NodeMask levi) const;
  // Returns (w^P, w_P) with w = w^P w_P.
  std::pair<WeylElt, WeylElt> coset_decompose(const WeylElt& w, NodeMask levi) const;
  const ParabolicQuotient& enumerate_wp(NodeMask levi) const;

  // Orders elements by (length, canonical word).
  bool canonical_less(const WeylElt& a, const WeylElt& b) const;
  void sort_canonical(std::vector<WeylElt>& elts) const;

 private:
  int compute_length(const WeylElt& w) const;
  WeylElt seal(WeylElt w) const;

  RootSystemPtr rs_;
  std::vector<WeylElt> reflections_;

  struct PairHash {
    size_t operator()(const std::pair<WeylElt, WeylElt>& p) const {
      return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
    }
  };
  mutable std::shared_mutex covers_mu_;
  mutable std::unordered_map<WeylElt, std::vector<Cover>, WeylEltHash> covers_;
  mutable std::shared_mutex bruhat_mu_;
  mutable std::unordered_map<std::pair<WeylElt, WeylElt>, bool, PairHash> bruhat_;
  mutable std::shared_mutex quotient_mu_;
  mutable std::unordered_map<NodeMask, std::unique_ptr<ParabolicQuotient>> quotients_;
};

using WeylGroupPtr = std::shared_ptr<WeylGroup>;

struct DiagramCell {
  int row;    // 0-based grid row
  int col;    // grid column (monotone along rows, shared across rows)
  int label;  // 0-based simple reflection attached to the box
  int root;   // positive root index
};

struct CominDiagram {
  std::vector<int> ideal;  // positive root indices
  std::vector<int> shape;  // row lengths, trailing zeros removed
  std::string label;
};

// Hasse grid of R_{>= alpha_P} for a cominuscule node. Boxes are listed in
// row-major reading order, which is a linear extension of the root order.
class CominusculeDiagram {
 public:
  CominusculeDiagram(WeylGroupPtr group, int node);

  int node() const { return node_; }
  int num_rows() const { return static_cast<int>(row_start_.size()); }
  const std::vector<DiagramCell>& cells() const { return cells_; }

  CominDiagram element_to_diagram(const WeylElt& w) const;
  // Throws std::invalid_argument if the roots do not form a lower order ideal.
  WeylElt ideal_to_element(std::span<const int> ideal) const;
  WeylElt shape_to_element(std::span<const int> shape) const;

  std::string format_label(std::span<const int> shape) const;
  std::vector<int> parse_label(const std::string& text) const;

 private:
  WeylGroupPtr group_;
  int node_;
  std::vector<DiagramCell> cells_;
  std::vector<int> row_start_;  // first cell index of each row
  std::vector<int> row_len_;
  std::vector<int> cell_of_root_;  // root index -> cell index or -1
};

}  // namespace comather
