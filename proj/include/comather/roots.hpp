#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace comather {

inline constexpr int kMaxRank = 8;

// Integer vector in simple-root coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(int rank, std::initializer_list<int> coords);

  static Weight simple(int rank, int i);

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int16_t& operator[](int i) { return c_[i]; }

  int height() const;
  bool is_zero() const;
  // True when nonzero with all coordinates >= 0.
  bool is_positive() const;
  bool is_negative() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::array<int16_t, kMaxRank> c_{};
  int8_t rank_ = 0;
};

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E' };

class RootSystem {
 public:
  // Bourbaki conventions. Throws std::invalid_argument for unsupported input.
  static std::shared_ptr<const RootSystem> build(LieType type, int rank);
  // Accepts strings such as "A3", "C4", "E6".
  static std::shared_ptr<const RootSystem> parse(const std::string& name);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  // a[i][j] = <alpha_j, alpha_i^vee>, 0-based indices.
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  // (alpha_i, alpha_j); simple roots have squared length 2 except the short
  // root of B_n (length 1) and the long root of C_n (length 4).
  int gram(int i, int j) const { return gram_[i * rank_ + j]; }

  std::span<const Weight> positive_roots() const { return positive_; }
  const Weight& root(int index) const { return positive_[index]; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  const Weight& highest_root() const { return positive_.back(); }

  std::optional<int> positive_root_index(const Weight& w) const;
  bool is_root(const Weight& w) const;

  // <lambda, alpha^vee> for alpha = root(index).
  int pair(const Weight& lambda, int index) const;
  // As above; throws if alpha is not a positive root.
  int pair(const Weight& lambda, const Weight& alpha) const;
  int pair_simple(const Weight& lambda, int i) const;

  Weight reflect(int index, const Weight& lambda) const;
  Weight reflect_simple(int i, const Weight& lambda) const;

  // 1-based node indices i with coefficient 1 in the highest root.
  std::vector<int> cominuscule_nodes() const;

  // alpha <= beta iff beta - alpha is a non-negative combination of simple roots.
  static bool root_leq(const Weight& alpha, const Weight& beta);

 private:
  RootSystem(LieType type, int rank);
  void build_roots();

  LieType type_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<int> gram_;
  std::vector<Weight> positive_;       // sorted by height, ties by coordinates
  std::vector<std::vector<int>> coroot_;  // coroot_[k][j] = <alpha_j, root(k)^vee>
  std::vector<std::pair<uint64_t, int>> index_;  // sorted packed-coordinate lookup
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace comather
