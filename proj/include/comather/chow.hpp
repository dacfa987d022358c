#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "comather/poly.hpp"
#include "comather/weyl.hpp"

namespace comather {

// G/P for a standard parabolic P; the Levi mask lists the simple nodes of P's Levi.
class FlagSpace {
 public:
  FlagSpace() = default;
  FlagSpace(WeylGroupPtr group, NodeMask levi);

  static FlagSpace borel(WeylGroupPtr group);
  // Maximal parabolic excluding the (1-based) node.
  static FlagSpace maximal(WeylGroupPtr group, int node);
  // "<TYPE><rank>/P<node>" or "<TYPE><rank>/B"; "P1,3" excludes several nodes.
  static FlagSpace parse(const std::string& spec);

  const WeylGroupPtr& group() const { return group_; }
  const WeylGroup& weyl() const { return *group_; }
  const RootSystem& roots() const { return group_->roots(); }
  NodeMask levi() const { return levi_; }
  bool is_borel() const { return levi_ == 0; }
  // 1-based node when P is maximal.
  std::optional<int> maximal_node() const;
  bool is_cominuscule() const;
  const CominusculeDiagram* diagram() const { return diagram_.get(); }

  int dim() const;
  std::string name() const;
  bool contains(const WeylElt& w) const { return group_->is_min_rep(w, levi_); }
  WeylElt longest_levi() const { return group_->longest_element(levi_); }
  const std::vector<WeylElt>& elements() const { return group_->enumerate_wp(levi_).min_reps; }
  // Positive roots outside the Levi factor.
  std::vector<int> roots_outside_levi() const;

  // Diagram label for cominuscule spaces, canonical word otherwise.
  std::string label(const WeylElt& w) const;
  // Accepts labels ("2,1", "21", "()"), words ("1 3 2", "s1s3s2"), or ideals ("[[0,1,0],[0,1,1]]").
  WeylElt parse_element(const std::string& text) const;
  // Throws with a coset_decompose hint when w is not a minimal representative.
  void require_member(const WeylElt& w) const;

  friend bool operator==(const FlagSpace& a, const FlagSpace& b) {
    return a.group_ == b.group_ && a.levi_ == b.levi_;
  }

 private:
  WeylGroupPtr group_;
  NodeMask levi_ = 0;
  std::shared_ptr<const CominusculeDiagram> diagram_;
};

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optional cap on the number of terms carried by any intermediate class.
void set_term_limit(size_t limit);
size_t term_limit();

class SchubertClass {
 public:
  using Terms = std::unordered_map<WeylElt, EquivPoly, WeylEltHash>;

  SchubertClass() = default;
  SchubertClass(FlagSpace space, bool equivariant) : space_(std::move(space)), equivariant_(equivariant) {}

  const FlagSpace& space() const { return space_; }
  bool equivariant() const { return equivariant_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  EquivPoly coeff(const WeylElt& w) const;
  void add(const WeylElt& w, const EquivPoly& c);
  void add_scaled(const WeylElt& w, const EquivPoly& c, const mpq_class& k);

  // Terms sorted by (length, canonical word).
  std::vector<std::pair<WeylElt, EquivPoly>> sorted() const;

  SchubertClass& operator+=(const SchubertClass& o);
  SchubertClass& operator-=(const SchubertClass& o);
  SchubertClass& operator*=(const mpq_class& k);
  friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
  friend SchubertClass operator-(SchubertClass a, const SchubertClass& b) { return a -= b; }
  friend SchubertClass operator*(const mpq_class& k, SchubertClass a) { return a *= k; }
  friend bool operator==(const SchubertClass& a, const SchubertClass& b);

  // alpha -> 0 on every coefficient; the result is non-equivariant.
  SchubertClass specialize() const;
  // hbar -> 1.
  SchubertClass dehomogenize() const;
  // Keeps monomials of non-negative homological degree.
  SchubertClass truncate() const;
  // Homological degree of each monomial is length(v) minus its alpha-degree.
  int max_homological_degree() const;

 private:
  FlagSpace space_;
  bool equivariant_ = false;
  Terms terms_;
};

SchubertClass schubert(const FlagSpace& space, const WeylElt& w, bool equivariant);

// c_1(L_lambda) cap c on G/B.
SchubertClass chevalley_mul(const SchubertClass& c, const Weight& lambda);
// prod_j (1 + c_1(L_{lambda_j})) cap c.
SchubertClass total_chern_mul(SchubertClass c, std::span<const Weight> weights);
// prod_j (1 + c_1(L_{lambda_j}))^{-1} cap c, truncated at homological degree 0.
SchubertClass total_chern_inverse_mul(SchubertClass c, std::span<const Weight> weights);

SchubertClass pushforward(const SchubertClass& c, const FlagSpace& target);
SchubertClass pullback(const SchubertClass& c, const FlagSpace& target);
// Inverse of pullback on its image: maps [X_{u w_Q}] on G/B back to [X_u] on G/Q.
SchubertClass descend(const SchubertClass& c, const FlagSpace& target);

// Multiplies each monomial on [X_v] by hbar^(length(v) - degree).
SchubertClass homogenize(const SchubertClass& c);

// Weights {-alpha : alpha in roots}, ordered by increasing height.
std::vector<Weight> negated_roots(const RootSystem& rs, std::vector<int> roots);
std::vector<Weight> roots_as_weights(const RootSystem& rs, std::vector<int> roots);

}  // namespace comather
