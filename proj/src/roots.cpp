#include "comather/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace comather {

Weight::Weight(int rank) : rank_(static_cast<int8_t>(rank)) {
  if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("weight rank out of range");
}

Weight::Weight(int rank, std::initializer_list<int> coords) : Weight(rank) {
  if (static_cast<int>(coords.size()) != rank)
    throw std::invalid_argument("weight: coordinate count does not match rank");
  int i = 0;
  for (int v : coords) c_[i++] = static_cast<int16_t>(v);
}

Weight Weight::simple(int rank, int i) {
  Weight w(rank);
  w.c_[i] = 1;
  return w;
}

int Weight::height() const {
  int h = 0;
  for (int i = 0; i < rank_; ++i) h += c_[i];
  return h;
}

bool Weight::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Weight::is_positive() const {
  bool nonzero = false;
  for (int i = 0; i < rank_; ++i) {
    if (c_[i] < 0) return false;
    nonzero |= c_[i] != 0;
  }
  return nonzero;
}

bool Weight::is_negative() const { return (-*this).is_positive(); }

Weight Weight::operator-() const {
  Weight r(rank_);
  for (int i = 0; i < rank_; ++i) r.c_[i] = static_cast<int16_t>(-c_[i]);
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] = static_cast<int16_t>(c_[i] + o.c_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] = static_cast<int16_t>(c_[i] - o.c_[i]);
  return *this;
}

Weight operator*(int k, Weight a) {
  for (int i = 0; i < a.rank_; ++i) a.c_[i] = static_cast<int16_t>(k * a.c_[i]);
  return a;
}

std::string Weight::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rank_; ++i) out << (i ? "," : "") << c_[i];
  out << ']';
  return out.str();
}

namespace {

uint64_t pack(const Weight& w) {
  uint64_t key = 0;
  for (int i = 0; i < w.rank(); ++i) key = (key << 6) | static_cast<uint64_t>(w[i] + 32);
  return key;
}

void check_supported(LieType type, int rank) {
  bool ok = false;
  switch (type) {
    case LieType::A: ok = rank >= 1; break;
    case LieType::B:
    case LieType::C: ok = rank >= 2; break;
    case LieType::D: ok = rank >= 3; break;
    case LieType::E: ok = rank == 6 || rank == 7; break;
  }
  if (!ok || rank > kMaxRank) {
    throw std::invalid_argument("unsupported root system " + std::string(1, static_cast<char>(type)) +
                                std::to_string(rank) + " (supported: A_n, B_n n>=2, C_n n>=2, D_n n>=3, E6, E7; rank <= " +
                                std::to_string(kMaxRank) + ")");
  }
}

}  // namespace

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
  check_supported(type, rank);
  gram_.assign(rank * rank, 0);
  auto link = [&](int i, int j, int v) {
    gram_[i * rank + j] = v;
    gram_[j * rank + i] = v;
  };
  for (int i = 0; i < rank; ++i) gram_[i * rank + i] = 2;
  switch (type) {
    case LieType::A:
    case LieType::B:
    case LieType::C:
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1);
      if (type == LieType::B) gram_[(rank - 1) * rank + rank - 1] = 1;
      if (type == LieType::C) {
        gram_[(rank - 1) * rank + rank - 1] = 4;
        link(rank - 2, rank - 1, -2);
      }
      break;
    case LieType::D:
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1);
      link(rank - 3, rank - 1, -1);
      break;
    case LieType::E:
      link(0, 2, -1);
      link(2, 3, -1);
      link(1, 3, -1);
      for (int i = 3; i + 1 < rank; ++i) link(i, i + 1, -1);
      break;
  }
  cartan_.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_[i * rank + j] = 2 * gram(i, j) / gram(i, i);
  build_roots();
}

void RootSystem::build_roots() {
  std::set<uint64_t> seen;
  std::deque<Weight> queue;
  for (int i = 0; i < rank_; ++i) {
    Weight s = Weight::simple(rank_, i);
    seen.insert(pack(s));
    queue.push_back(s);
    positive_.push_back(s);
  }
  // Root strings: if beta - p alpha_i, ..., beta is the bottom of the string then
  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
  while (!queue.empty()) {
    Weight beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      Weight alpha = Weight::simple(rank_, i);
      if (beta == alpha) continue;
      int p = 0;
      for (Weight down = beta - alpha; down.is_positive() && seen.count(pack(down)); down -= alpha) ++p;
      if (p - pair_simple(beta, i) <= 0) continue;
      Weight up = beta + alpha;
      if (seen.insert(pack(up)).second) {
        queue.push_back(up);
        positive_.push_back(up);
      }
    }
  }
  std::sort(positive_.begin(), positive_.end(), [](const Weight& a, const Weight& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    for (int i = 0; i < a.rank(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  });
  for (int k = 0; k < num_positive_roots(); ++k) {
    const Weight& beta = positive_[k];
    int norm = 0;
    std::vector<int> against(rank_, 0);
    for (int j = 0; j < rank_; ++j) {
      for (int i = 0; i < rank_; ++i) against[j] += beta[i] * gram(j, i);
      norm += beta[j] * against[j];
    }
    std::vector<int> co(rank_);
    for (int j = 0; j < rank_; ++j) {
      if ((2 * against[j]) % norm != 0) throw std::logic_error("non-integral coroot pairing");
      co[j] = 2 * against[j] / norm;
    }
    coroot_.push_back(std::move(co));
    index_.emplace_back(pack(beta), k);
  }
  std::sort(index_.begin(), index_.end());
}

std::shared_ptr<const RootSystem> RootSystem::build(LieType type, int rank) {
  return std::shared_ptr<const RootSystem>(new RootSystem(type, rank));
}

std::shared_ptr<const RootSystem> RootSystem::parse(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad root system name '" + name + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (std::string("ABCDE").find(letter) == std::string::npos)
    throw std::invalid_argument("bad root system type in '" + name + "'");
  int rank = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("bad root system rank in '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
    if (rank > 99) throw std::invalid_argument("bad root system rank in '" + name + "'");
  }
  return build(static_cast<LieType>(letter), rank);
}

std::string RootSystem::name() const { return std::string(1, static_cast<char>(type_)) + std::to_string(rank_); }

std::optional<int> RootSystem::positive_root_index(const Weight& w) const {
  if (w.rank() != rank_ || !w.is_positive()) return std::nullopt;
  for (int i = 0; i < rank_; ++i)
    if (w[i] > 31) return std::nullopt;
  uint64_t key = pack(w);
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(key, -1));
  if (it == index_.end() || it->first != key) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Weight& w) const {
  return positive_root_index(w).has_value() || positive_root_index(-w).has_value();
}

int RootSystem::pair(const Weight& lambda, int index) const {
  const auto& co = coroot_[index];
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += lambda[j] * co[j];
  return s;
}

int RootSystem::pair(const Weight& lambda, const Weight& alpha) const {
  auto idx = positive_root_index(alpha);
  if (!idx) throw std::invalid_argument("pair: " + alpha.to_string() + " is not a positive root of " + name());
  return pair(lambda, *idx);
}

int RootSystem::pair_simple(const Weight& lambda, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += lambda[j] * cartan(i, j);
  return s;
}

Weight RootSystem::reflect(int index, const Weight& lambda) const {
  return lambda - pair(lambda, index) * positive_[index];
}

Weight RootSystem::reflect_simple(int i, const Weight& lambda) const {
  Weight r = lambda;
  r[i] = static_cast<int16_t>(r[i] - pair_simple(lambda, i));
  return r;
}

std::vector<int> RootSystem::cominuscule_nodes() const {
  std::vector<int> nodes;
  for (int i = 0; i < rank_; ++i)
    if (highest_root()[i] == 1) nodes.push_back(i + 1);
  return nodes;
}

bool RootSystem::root_leq(const Weight& alpha, const Weight& beta) {
  for (int i = 0; i < alpha.rank(); ++i)
    if (beta[i] < alpha[i]) return false;
  return true;
}

}  // namespace comather
