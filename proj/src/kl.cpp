#include "comather/kl.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>

namespace comather {

namespace {

using Column = std::unordered_map<WeylElt, KLPoly, WeylEltHash>;

void trim(KLPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(KLPoly& acc, const KLPoly& p, int shift, int64_t scale) {
  if (p.empty()) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (size_t i = 0; i < p.size(); ++i) acc[i + shift] += scale * p[i];
}

std::filesystem::path cache_dir() {
  const char* dir = std::getenv("COMATHER_CACHE_DIR");
  return dir && *dir ? std::filesystem::path(dir) : std::filesystem::path();
}

class KLTable {
 public:
  explicit KLTable(WeylGroupPtr group) : group_(std::move(group)) { load(); }

  const Column& column(const WeylElt& w) {
    if (auto it = columns_.find(w); it != columns_.end()) return *it->second;
    auto col = std::make_unique<Column>(compute(w));
    dirty_ = true;
    return *columns_.emplace(w, std::move(col)).first->second;
  }

  void save();

 private:
  Column compute(const WeylElt& w);
  std::filesystem::path path() const {
    auto dir = cache_dir();
    return dir.empty() ? dir : dir / ("kl-" + group_->roots().name() + ".json");
  }
  void load();

  WeylGroupPtr group_;
  std::unordered_map<WeylElt, std::unique_ptr<Column>, WeylEltHash> columns_;
  bool dirty_ = false;
};

Column KLTable::compute(const WeylElt& w) {
  const WeylGroup& W = *group_;
  Column out;
  if (w.is_identity()) {
    out.emplace(w, KLPoly{1});
    return out;
  }
  auto interval = W.lower_interval(w);
  size_t cap = term_limit();
  if (cap && interval.size() > cap)
    throw ResourceLimit("Bruhat interval below " + W.word_string(w) + " has " + std::to_string(interval.size()) +
                        " elements; raise --max-interval");
  int s = 0;
  while (!W.is_left_descent(w, s)) ++s;
  WeylElt v = W.left_mul(s, w);
  const Column& cv = column(v);
  struct Correction {
    int64_t mu;
    int shift;
    const Column* col;
  };
  std::vector<Correction> corrections;
  for (const auto& [z, p] : cv) {
    int gap = v.length() - z.length();
    if (gap % 2 == 0 || !W.is_left_descent(z, s)) continue;
    size_t top = (gap - 1) / 2;
    if (p.size() <= top || p[top] == 0) continue;
    corrections.push_back({p[top], (w.length() - z.length()) / 2, nullptr});
    corrections.back().col = &column(z);
  }
  auto lookup = [](const Column& col, const WeylElt& x) -> const KLPoly* {
    auto it = col.find(x);
    return it == col.end() ? nullptr : &it->second;
  };
  for (const WeylElt& x : interval) {
    int c = W.is_left_descent(x, s) ? 1 : 0;
    KLPoly p;
    if (auto* a = lookup(cv, W.left_mul(s, x))) add_shifted(p, *a, 1 - c, 1);
    if (auto* b = lookup(cv, x)) add_shifted(p, *b, c, 1);
    for (const auto& corr : corrections)
      if (auto* d = lookup(*corr.col, x)) add_shifted(p, *d, corr.shift, -corr.mu);
    trim(p);
    if (p.empty()) throw std::logic_error("vanishing KL polynomial inside a Bruhat interval");
    out.emplace(x, std::move(p));
  }
  return out;
}

WeylElt parse_word(const WeylGroup& W, const std::string& s) {
  std::vector<int> word;
  if (s != "id")
    for (char ch : s) word.push_back(ch - '1');
  WeylElt w = W.from_word(word);
  if (w.length() != static_cast<int>(word.size())) throw std::runtime_error("non-reduced word in KL cache");
  return w;
}

void KLTable::load() {
  auto file = path();
  if (file.empty() || !std::filesystem::exists(file)) return;
  try {
    std::ifstream in(file);
    auto j = nlohmann::json::parse(in);
    if (j.at("group").get<std::string>() != group_->roots().name()) throw std::runtime_error("group mismatch");
    for (const auto& [wkey, entries] : j.at("columns").items()) {
      auto col = std::make_unique<Column>();
      for (const auto& [xkey, coeffs] : entries.items())
        col->emplace(parse_word(*group_, xkey), coeffs.get<KLPoly>());
      columns_.emplace(parse_word(*group_, wkey), std::move(col));
    }
  } catch (const std::exception& e) {
    std::cerr << "comather: ignoring unreadable KL cache " << file << ": " << e.what() << "\n";
    columns_.clear();
  }
}

void KLTable::save() {
  auto file = path();
  if (file.empty() || !dirty_) return;
  nlohmann::json cols = nlohmann::json::object();
  for (const auto& [w, col] : columns_) {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [x, p] : *col) entries[group_->word_string(x)] = p;
    cols[group_->word_string(w)] = std::move(entries);
  }
  nlohmann::json j{{"group", group_->roots().name()}, {"columns", std::move(cols)}};
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, file);
  dirty_ = false;
}

std::recursive_mutex g_kl_mu;
std::map<const WeylGroup*, std::unique_ptr<KLTable>>& tables() {
  static std::map<const WeylGroup*, std::unique_ptr<KLTable>> t;
  return t;
}

KLTable& table_for(const WeylGroupPtr& group) {
  auto& t = tables();
  auto it = t.find(group.get());
  if (it == t.end()) {
    static bool registered = false;
    if (!registered) {
      registered = true;
      std::atexit([] { flush_kl_cache(); });
    }
    it = t.emplace(group.get(), std::make_unique<KLTable>(group)).first;
  }
  return *it->second;
}

}  // namespace

std::string kl_to_string(const KLPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += p[i] < 0 ? "-" : "+";
    else if (p[i] < 0) s += "-";
    int64_t a = p[i] < 0 ? -p[i] : p[i];
    if (a != 1 || i == 0) s += std::to_string(a);
    if (i >= 1) s += "q";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

int64_t kl_at_one(const KLPoly& p) {
  int64_t s = 0;
  for (int64_t c : p) s += c;
  return s;
}

KLPoly kl_polynomial(const WeylGroupPtr& group, const WeylElt& x, const WeylElt& w) {
  if (!group->bruhat_leq(x, w)) return {};
  std::lock_guard lock(g_kl_mu);
  const Column& col = table_for(group).column(w);
  auto it = col.find(x);
  return it == col.end() ? KLPoly{} : it->second;
}

void flush_kl_cache() {
  std::lock_guard lock(g_kl_mu);
  for (auto& [g, t] : tables()) {
    try {
      t->save();
    } catch (const std::exception& e) {
      std::cerr << "comather: could not write KL cache: " << e.what() << "\n";
    }
  }
}

KLPoly parabolic_kl(const FlagSpace& space, const WeylElt& v, const WeylElt& w, bool assume_ordinary) {
  space.require_member(v);
  space.require_member(w);
  if (assume_ordinary) return kl_polynomial(space.group(), v, w);
  const WeylGroup& W = space.weyl();
  WeylElt wp = space.longest_levi();
  return kl_polynomial(space.group(), W.mul(v, wp), W.mul(w, wp));
}

std::vector<std::pair<WeylElt, std::pair<int64_t, int64_t>>> ordinary_discrepancies(const FlagSpace& space,
                                                                                     const WeylElt& w) {
  std::vector<std::pair<WeylElt, std::pair<int64_t, int64_t>>> out;
  for (const WeylElt& v : space.elements()) {
    if (!space.weyl().bruhat_leq(v, w)) continue;
    int64_t par = kl_at_one(parabolic_kl(space, v, w, false));
    int64_t ord = kl_at_one(parabolic_kl(space, v, w, true));
    if (par != ord) out.push_back({v, {par, ord}});
  }
  return out;
}

SchubertClass kl_class(const FlagSpace& space, const WeylElt& w, bool equivariant, bool assume_ordinary) {
  space.require_member(w);
  SchubertClass out(space, equivariant);
  for (const WeylElt& v : space.elements()) {
    if (!space.weyl().bruhat_leq(v, w)) continue;
    int64_t k = kl_at_one(parabolic_kl(space, v, w, assume_ordinary));
    SchubertClass cell = csm_cell(space, v, equivariant);
    cell *= mpq_class(static_cast<long>(k));
    out += cell;
  }
  return out;
}

bool CCDecomposition::irreducible() const {
  return multiplicities.size() == 1 && multiplicities[0].first == w && multiplicities[0].second == 1;
}

namespace {

// Solves target = sum_v c_v basis(v) by decreasing length; m_v = (-1)^(l(w)-l(v)) c_v.
template <class BasisFn>
CCDecomposition solve_cc(const FlagSpace& space, const WeylElt& w, SchubertClass residual, BasisFn basis) {
  const WeylGroup& W = space.weyl();
  CCDecomposition out{space, w, {}};
  while (!residual.is_zero()) {
    const WeylElt* top = nullptr;
    for (const auto& [v, a] : residual.terms())
      if (!top || W.canonical_less(*top, v)) top = &v;
    WeylElt v = *top;
    EquivPoly a = residual.coeff(v);
    if (!a.is_constant() || a.constant_term().get_den() != 1)
      throw std::logic_error("characteristic cycle solve: non-integral coefficient on " + space.label(v));
    mpz_class k = a.constant_term().get_num();
    SchubertClass b = basis(v);
    if (!(b.coeff(v) == EquivPoly(1)))
      throw std::logic_error("characteristic cycle solve: basis element for " + space.label(v) + " is not unitriangular");
    b *= mpq_class(k);
    residual -= b;
    out.multiplicities.emplace_back(v, (w.length() - v.length()) % 2 ? mpz_class(-k) : k);
  }
  std::vector<WeylElt> keys;
  for (const auto& [v, m] : out.multiplicities) keys.push_back(v);
  W.sort_canonical(keys);
  std::vector<std::pair<WeylElt, mpz_class>> sorted;
  for (const auto& v : keys)
    for (const auto& e : out.multiplicities)
      if (e.first == v) sorted.push_back(e);
  out.multiplicities = std::move(sorted);
  return out;
}

}  // namespace

CCDecomposition cc_multiplicities(const FlagSpace& space, const WeylElt& w, bool assume_ordinary) {
  require_cominuscule(space);
  return solve_cc(space, w, kl_class(space, w, false, assume_ordinary),
                  [&](const WeylElt& v) { return mather_class(space, v, false).downstairs; });
}

CCDecomposition cc_pullback(const FlagSpace& space, const WeylElt& w, const FlagSpace& target) {
  require_cominuscule(space);
  const WeylGroup& W = space.weyl();
  WeylElt wp = space.longest_levi();
  WeylElt top = W.coset_decompose(W.mul(w, wp), target.levi()).first;
  return solve_cc(target, top, kl_class(target, top, false), [&](const WeylElt& u) {
    WeylElt v = W.coset_decompose(u, space.levi()).first;
    if (W.coset_decompose(W.mul(v, wp), target.levi()).first == u) return pullback_mather(space, v, target, false);
    if (u.is_identity()) return schubert(target, u, false);
    throw std::logic_error("characteristic cycle solve: no Mather class available for " + target.label(u) +
                           " in the pulled-back basis");
  });
}

bool cc_irreducible_by_euler(const FlagSpace& space, const WeylElt& w, bool assume_ordinary) {
  EulerTable table = euler_obstructions(space, w);
  for (const auto& [v, e] : table.values)
    if (e != kl_at_one(parabolic_kl(space, v, w, assume_ordinary))) return false;
  return true;
}

}  // namespace comather
