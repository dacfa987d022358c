#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "comather/roots.hpp"

namespace comather {

// Variable slots: alpha_1..alpha_{kMaxRank} then hbar.
inline constexpr int kHbarSlot = kMaxRank;
inline constexpr int kNumVars = kMaxRank + 1;

// Exponent vector with the total degree stored first, so that the byte-wise
// lexicographic order is graded lex (alpha_1 > alpha_2 > ... > hbar).
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int slot, int power = 1);

  int degree() const { return e_[0]; }
  int exponent(int slot) const { return e_[slot + 1]; }
  bool is_one() const { return e_[0] == 0; }
  int alpha_degree() const { return e_[0] - e_[kHbarSlot + 1]; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // pre: divides
  Monomial without_hbar() const;
  Monomial without_alphas() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<uint8_t, kNumVars + 1> e_{};
};

class NotPolynomial : public std::runtime_error {
 public:
  NotPolynomial(const std::string& what, std::string remainder)
      : std::runtime_error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

// Sparse polynomial over Q in alpha_1..alpha_r and hbar. Terms are kept sorted
// by monomial with no zero coefficients.
class EquivPoly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  EquivPoly() = default;
  EquivPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit EquivPoly(const mpq_class& c);

  static EquivPoly alpha(int i);  // 0-based simple root variable
  static EquivPoly hbar();
  static EquivPoly from_weight(const Weight& w);
  static EquivPoly monomial(const Monomial& m, const mpq_class& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  mpq_class constant_term() const;
  int degree() const { return terms_.empty() ? -1 : terms_.back().first.degree(); }
  int min_degree() const;
  const std::vector<Term>& terms() const { return terms_; }
  bool contains_hbar() const;
  const Term& leading_term() const { return terms_.back(); }

  EquivPoly operator-() const;
  EquivPoly& operator+=(const EquivPoly& o);
  EquivPoly& operator-=(const EquivPoly& o);
  EquivPoly& operator*=(const EquivPoly& o);
  EquivPoly& operator*=(const mpq_class& c);
  friend EquivPoly operator+(EquivPoly a, const EquivPoly& b) { return a += b; }
  friend EquivPoly operator-(EquivPoly a, const EquivPoly& b) { return a -= b; }
  friend EquivPoly operator*(const EquivPoly& a, const EquivPoly& b);
  friend EquivPoly operator*(EquivPoly a, const mpq_class& c) { return a *= c; }
  friend EquivPoly operator*(const mpq_class& c, EquivPoly a) { return a *= c; }
  friend EquivPoly operator*(long k, EquivPoly a) { return a *= mpq_class(k); }
  friend EquivPoly operator*(EquivPoly a, long k) { return a *= mpq_class(k); }
  friend bool operator==(const EquivPoly& a, const EquivPoly& b) { return a.terms_ == b.terms_; }

  // this += c * o
  void add_scaled(const EquivPoly& o, const mpq_class& c);

  // alphas[i] is the value of alpha_{i+1}; missing entries are zero.
  mpq_class eval(std::span<const mpq_class> alphas, const mpq_class& hbar) const;
  EquivPoly substitute_hbar_one() const;
  EquivPoly substitute_alphas_zero() const;
  EquivPoly substitute_hbar(const EquivPoly& value) const;
  // Replaces alpha_i by images[i]; hbar is left alone.
  EquivPoly substitute_alphas(std::span<const EquivPoly> images) const;
  // Component of total degree d.
  EquivPoly homogeneous_part(int d) const;
  EquivPoly filter(bool (*keep)(const Monomial&)) const;
  EquivPoly power(int k) const;

  bool has_nonnegative_coefficients() const;
  bool is_integral() const;

  // Display form, e.g. "8+2a1+4a2+2a3".
  std::string to_string() const;
  std::string to_latex() const;
  // Exponent list of length rank + 1 (hbar last) paired with "p/q" coefficients.
  std::vector<std::pair<std::vector<int>, std::string>> to_exponent_list(int rank) const;

 private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

// Accumulates terms in any order; normalizes once.
class PolyBuilder {
 public:
  void add(const Monomial& m, const mpq_class& c) { raw_.emplace_back(m, c); }
  EquivPoly build();

 private:
  std::vector<EquivPoly::Term> raw_;
};

// Returns q with n = q d (graded-lex division); throws NotPolynomial otherwise.
EquivPoly exact_divide(const EquivPoly& n, const EquivPoly& d);

// Multivariate rational function; equality by cross-multiplication.
class RatFun {
 public:
  RatFun() : num_(0), den_(1) {}
  RatFun(EquivPoly num, EquivPoly den);  // NOLINT
  RatFun(const EquivPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  const EquivPoly& num() const { return num_; }
  const EquivPoly& den() const { return den_; }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  // Exact polynomial value; throws NotPolynomial when the division leaves a remainder.
  EquivPoly to_poly() const { return exact_divide(num_, den_); }

 private:
  EquivPoly num_, den_;
};

std::string format_rational(const mpq_class& q);

}  // namespace comather
