#include "comather/chow.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>

namespace comather {

namespace {

std::atomic<size_t> g_term_limit{0};

void enforce_limit(const SchubertClass& c) {
  size_t cap = g_term_limit.load();
  if (cap && c.size() > cap)
    throw ResourceLimit("class on " + c.space().name() + " exceeds the term cap (" + std::to_string(cap) +
                        "); raise --max-interval");
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void set_term_limit(size_t limit) { g_term_limit = limit; }
size_t term_limit() { return g_term_limit; }

// ---------------------------------------------------------------------------
// FlagSpace

FlagSpace::FlagSpace(WeylGroupPtr group, NodeMask levi) : group_(std::move(group)), levi_(levi) {
  NodeMask all = (NodeMask{1} << group_->rank()) - 1;
  if (levi_ & ~all) throw std::invalid_argument("parabolic mask out of range");
  if (is_cominuscule()) diagram_ = std::make_shared<CominusculeDiagram>(group_, *maximal_node() - 1);
}

FlagSpace FlagSpace::borel(WeylGroupPtr group) { return FlagSpace(std::move(group), 0); }

FlagSpace FlagSpace::maximal(WeylGroupPtr group, int node) {
  int r = group->rank();
  if (node < 1 || node > r) throw std::invalid_argument("node out of range");
  NodeMask all = (NodeMask{1} << r) - 1;
  return FlagSpace(std::move(group), all & ~(NodeMask{1} << (node - 1)));
}

FlagSpace FlagSpace::parse(const std::string& spec) {
  std::string s = trim(spec);
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("space must look like A3/P2 or C2/B, got '" + spec + "'");
  auto group = WeylGroup::get(s.substr(0, slash));
  std::string par = s.substr(slash + 1);
  int r = group->rank();
  NodeMask all = (NodeMask{1} << r) - 1;
  if (par == "B" || par == "b") return borel(group);
  if (par.size() < 2 || (par[0] != 'P' && par[0] != 'p'))
    throw std::invalid_argument("parabolic must be B or P<node>, got '" + par + "'");
  NodeMask excluded = 0;
  std::stringstream ss(par.substr(1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
      throw std::invalid_argument("bad node list in '" + par + "'");
    int node = std::stoi(tok);
    if (node < 1 || node > r) throw std::invalid_argument("node " + tok + " out of range for " + group->roots().name());
    excluded |= NodeMask{1} << (node - 1);
  }
  return FlagSpace(group, all & ~excluded);
}

std::optional<int> FlagSpace::maximal_node() const {
  NodeMask all = (NodeMask{1} << group_->rank()) - 1;
  NodeMask excluded = all & ~levi_;
  if (excluded == 0 || (excluded & (excluded - 1))) return std::nullopt;
  int i = 0;
  while (!(excluded >> i & 1)) ++i;
  return i + 1;
}

bool FlagSpace::is_cominuscule() const {
  auto node = maximal_node();
  if (!node) return false;
  auto nodes = roots().cominuscule_nodes();
  return std::find(nodes.begin(), nodes.end(), *node) != nodes.end();
}

int FlagSpace::dim() const {
  return roots().num_positive_roots() - static_cast<int>(group_->enumerate_wp(levi_).r_p_plus.size());
}

std::string FlagSpace::name() const {
  std::string s = roots().name() + "/";
  if (is_borel()) return s + "B";
  s += "P";
  bool first = true;
  for (int i = 0; i < group_->rank(); ++i)
    if (!(levi_ >> i & 1)) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return s;
}

std::vector<int> FlagSpace::roots_outside_levi() const {
  const auto& inside = group_->enumerate_wp(levi_).r_p_plus;
  std::vector<int> out;
  for (int k = 0; k < roots().num_positive_roots(); ++k)
    if (!std::binary_search(inside.begin(), inside.end(), k)) out.push_back(k);
  return out;
}

std::string FlagSpace::label(const WeylElt& w) const {
  if (diagram_ && contains(w)) return diagram_->element_to_diagram(w).label;
  return group_->word_string(w);
}

WeylElt FlagSpace::parse_element(const std::string& text) const {
  std::string t = trim(text);
  WeylElt w;
  auto parse_word = [&](const std::string& src) {
    std::vector<int> word;
    std::string digits;
    for (char ch : src) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits += ch;
        continue;
      }
      if (!digits.empty()) word.push_back(std::stoi(digits) - 1);
      digits.clear();
      if (ch != 's' && ch != ' ' && ch != ',' && ch != '*')
        throw std::invalid_argument("cannot parse word '" + src + "'");
    }
    if (!digits.empty()) word.push_back(std::stoi(digits) - 1);
    WeylElt e = group_->from_word(word);
    if (e.length() != static_cast<int>(word.size()))
      throw std::invalid_argument("word '" + src + "' is not reduced");
    return e;
  };
  if (t.empty() || t == "id" || t == "()" || t == "e") {
    w = group_->identity();
  } else if (t[0] == '[') {
    if (!diagram_) throw std::invalid_argument("ideal input requires a cominuscule space");
    auto j = nlohmann::json::parse(t);
    std::vector<int> ideal;
    for (const auto& r : j) {
      Weight root(group_->rank());
      if (static_cast<int>(r.size()) != group_->rank()) throw std::invalid_argument("root has wrong length");
      for (int i = 0; i < group_->rank(); ++i) root[i] = static_cast<int16_t>(r[i].get<int>());
      auto idx = roots().positive_root_index(root);
      if (!idx) throw std::invalid_argument("not a positive root: " + root.to_string());
      ideal.push_back(*idx);
    }
    w = diagram_->ideal_to_element(ideal);
  } else if (t.find('s') != std::string::npos || t.find(' ') != std::string::npos) {
    w = parse_word(t);
  } else if (diagram_) {
    w = diagram_->shape_to_element(diagram_->parse_label(t));
  } else if (t.find(',') != std::string::npos || group_->rank() < 10) {
    std::string spaced;
    if (t.find(',') != std::string::npos)
      spaced = t;
    else
      for (char ch : t) (spaced += ch) += ' ';
    w = parse_word(spaced);
  } else {
    throw std::invalid_argument("cannot parse element '" + text + "'");
  }
  require_member(w);
  return w;
}

void FlagSpace::require_member(const WeylElt& w) const {
  if (w.rank() != group_->rank()) throw std::invalid_argument("element from a different Weyl group");
  if (!contains(w))
    throw std::invalid_argument("element " + group_->word_string(w) + " is not a minimal representative for " +
                                name() + "; use coset_decompose to obtain w^P");
}

// ---------------------------------------------------------------------------
// SchubertClass

EquivPoly SchubertClass::coeff(const WeylElt& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? EquivPoly{} : it->second;
}

void SchubertClass::add(const WeylElt& w, const EquivPoly& c) { add_scaled(w, c, 1); }

void SchubertClass::add_scaled(const WeylElt& w, const EquivPoly& c, const mpq_class& k) {
  if (c.is_zero() || k == 0) return;
  auto [it, fresh] = terms_.try_emplace(w);
  it->second.add_scaled(c, k);
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<std::pair<WeylElt, EquivPoly>> SchubertClass::sorted() const {
  std::vector<WeylElt> keys;
  for (const auto& [w, c] : terms_) keys.push_back(w);
  space_.weyl().sort_canonical(keys);
  std::vector<std::pair<WeylElt, EquivPoly>> out;
  for (const auto& w : keys) out.emplace_back(w, terms_.at(w));
  return out;
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

SchubertClass& SchubertClass::operator-=(const SchubertClass& o) {
  for (const auto& [w, c] : o.terms_) add_scaled(w, c, -1);
  return *this;
}

SchubertClass& SchubertClass::operator*=(const mpq_class& k) {
  if (k == 0) terms_.clear();
  for (auto& [w, c] : terms_) c *= k;
  return *this;
}

bool operator==(const SchubertClass& a, const SchubertClass& b) {
  return a.space_ == b.space_ && a.equivariant_ == b.equivariant_ && a.terms_ == b.terms_;
}

SchubertClass SchubertClass::specialize() const {
  SchubertClass out(space_, false);
  for (const auto& [w, c] : terms_) out.add(w, c.substitute_alphas_zero());
  return out;
}

SchubertClass SchubertClass::dehomogenize() const {
  SchubertClass out(space_, equivariant_);
  for (const auto& [w, c] : terms_) out.add(w, c.substitute_hbar_one());
  return out;
}

SchubertClass SchubertClass::truncate() const {
  SchubertClass out(space_, equivariant_);
  for (const auto& [w, c] : terms_) {
    PolyBuilder keep;
    for (const auto& [m, q] : c.terms())
      if (m.degree() <= w.length()) keep.add(m, q);
    out.add(w, keep.build());
  }
  return out;
}

int SchubertClass::max_homological_degree() const {
  int best = -1;
  for (const auto& [w, c] : terms_) best = std::max(best, w.length() - c.min_degree());
  return best;
}

SchubertClass schubert(const FlagSpace& space, const WeylElt& w, bool equivariant) {
  space.require_member(w);
  SchubertClass c(space, equivariant);
  c.add(w, EquivPoly(1));
  return c;
}

// ---------------------------------------------------------------------------
// Chevalley formula and friends

SchubertClass chevalley_mul(const SchubertClass& c, const Weight& lambda) {
  const FlagSpace& space = c.space();
  if (!space.is_borel()) throw std::invalid_argument("chevalley_mul applies to classes on G/B");
  const WeylGroup& W = space.weyl();
  const RootSystem& rs = W.roots();
  if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  SchubertClass out(space, c.equivariant());
  Weight minus = -lambda;
  for (const auto& [u, a] : c.terms()) {
    if (c.equivariant()) out.add(u, a * EquivPoly::from_weight(W.act(u, lambda)));
    for (const Cover& cov : W.chevalley_covers(u)) {
      int k = rs.pair(minus, cov.root);
      if (k != 0) out.add_scaled(cov.elt, a, k);
    }
  }
  enforce_limit(out);
  return out;
}

SchubertClass total_chern_mul(SchubertClass c, std::span<const Weight> weights) {
  for (const Weight& lambda : weights) c += chevalley_mul(c, lambda);
  return c;
}

SchubertClass total_chern_inverse_mul(SchubertClass c, std::span<const Weight> weights) {
  for (const Weight& lambda : weights) {
    SchubertClass acc = c;
    SchubertClass t = c;
    for (;;) {
      t = chevalley_mul(t, -lambda).truncate();
      if (t.is_zero()) break;
      acc += t;
    }
    c = std::move(acc);
  }
  return c;
}

namespace {

void require_sub(const FlagSpace& small, const FlagSpace& big) {
  if (small.group() != big.group()) throw std::invalid_argument("spaces over different root systems");
  if ((small.levi() & ~big.levi()) != 0)
    throw std::invalid_argument(small.name() + " does not project to " + big.name());
}

}  // namespace

SchubertClass pushforward(const SchubertClass& c, const FlagSpace& target) {
  require_sub(c.space(), target);
  SchubertClass out(target, c.equivariant());
  for (const auto& [w, a] : c.terms())
    if (target.contains(w)) out.add(w, a);
  return out;
}

SchubertClass pullback(const SchubertClass& c, const FlagSpace& target) {
  require_sub(target, c.space());
  const WeylGroup& W = target.weyl();
  WeylElt wp = c.space().longest_levi();
  SchubertClass out(target, c.equivariant());
  for (const auto& [v, a] : c.terms()) out.add(W.coset_decompose(W.mul(v, wp), target.levi()).first, a);
  return out;
}

SchubertClass descend(const SchubertClass& c, const FlagSpace& target) {
  require_sub(c.space(), target);
  const WeylGroup& W = target.weyl();
  WeylElt wq = target.longest_levi();
  SchubertClass out(target, c.equivariant());
  for (const auto& [v, a] : c.terms()) {
    auto [u, x] = W.coset_decompose(v, target.levi() & ~c.space().levi());
    if (!(x == wq) && target.levi() != c.space().levi())
      throw std::logic_error("descend: term " + W.word_string(v) + " is not a pulled-back class");
    out.add(u, a);
  }
  return out;
}

SchubertClass homogenize(const SchubertClass& c) {
  SchubertClass out(c.space(), c.equivariant());
  for (const auto& [v, a] : c.terms()) {
    if (a.contains_hbar()) throw std::invalid_argument("homogenize: class already contains hbar");
    PolyBuilder b;
    for (const auto& [m, q] : a.terms()) {
      int k = v.length() - m.degree();
      if (k < 0) throw std::invalid_argument("homogenize: term of negative homological degree");
      b.add(m * Monomial::var(kHbarSlot, k), q);
    }
    out.add(v, b.build());
  }
  return out;
}

std::vector<Weight> roots_as_weights(const RootSystem& rs, std::vector<int> roots) {
  // Root indices are already sorted by height.
  std::sort(roots.begin(), roots.end());
  std::vector<Weight> out;
  for (int k : roots) out.push_back(rs.root(k));
  return out;
}

std::vector<Weight> negated_roots(const RootSystem& rs, std::vector<int> roots) {
  auto out = roots_as_weights(rs, std::move(roots));
  for (auto& w : out) w = -w;
  return out;
}

}  // namespace comather
