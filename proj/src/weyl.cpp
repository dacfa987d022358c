#include "comather/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace comather {

Weight WeylElt::column(int col) const {
  Weight w(rank_);
  for (int r = 0; r < rank_; ++r) w[r] = m_[col * kMaxRank + r];
  return w;
}

size_t WeylElt::hash() const {
  uint64_t h = 1469598103934665603ULL;
  for (int c = 0; c < rank_; ++c)
    for (int r = 0; r < rank_; ++r) {
      h ^= static_cast<uint8_t>(m_[c * kMaxRank + r]);
      h *= 1099511628211ULL;
    }
  return static_cast<size_t>(h);
}

std::shared_ptr<WeylGroup> WeylGroup::get(const RootSystemPtr& rs) { return get(rs->name()); }

std::shared_ptr<WeylGroup> WeylGroup::get(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<WeylGroup>> registry;
  auto rs = RootSystem::parse(name);
  std::lock_guard lock(mu);
  auto& slot = registry[rs->name()];
  if (!slot) slot = std::make_shared<WeylGroup>(rs);
  return slot;
}

WeylGroup::WeylGroup(RootSystemPtr rs) : rs_(std::move(rs)) {
  const int r = rank();
  for (int k = 0; k < rs_->num_positive_roots(); ++k) {
    WeylElt s;
    s.rank_ = static_cast<int8_t>(r);
    for (int j = 0; j < r; ++j) {
      Weight col = rs_->reflect(k, Weight::simple(r, j));
      for (int i = 0; i < r; ++i) s.m_[j * kMaxRank + i] = static_cast<int8_t>(col[i]);
    }
    reflections_.push_back(seal(s));
  }
}

int WeylGroup::compute_length(const WeylElt& w) const {
  const int r = rank();
  int len = 0;
  for (const Weight& alpha : rs_->positive_roots()) {
    // w(alpha) is a root, so the sign of any nonzero coordinate decides.
    for (int i = 0; i < r; ++i) {
      int v = 0;
      for (int k = 0; k < r; ++k) v += w.m_[k * kMaxRank + i] * alpha[k];
      if (v != 0) {
        len += v < 0;
        break;
      }
    }
  }
  return len;
}

WeylElt WeylGroup::seal(WeylElt w) const {
  w.len_ = static_cast<int16_t>(compute_length(w));
  return w;
}

WeylElt WeylGroup::identity() const {
  WeylElt e;
  e.rank_ = static_cast<int8_t>(rank());
  for (int i = 0; i < rank() && i < kMaxRank; ++i) e.m_[i * kMaxRank + i] = 1;
  return e;
}

WeylElt WeylGroup::simple(int i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("simple reflection index out of range");
  return right_mul(identity(), i);
}

WeylElt WeylGroup::reflection(int root_index) const { return reflections_.at(root_index); }

WeylElt WeylGroup::longest() const { return longest_element((NodeMask{1} << rank()) - 1); }

WeylElt WeylGroup::mul(const WeylElt& u, const WeylElt& v) const {
  const int r = rank();
  WeylElt p;
  p.rank_ = static_cast<int8_t>(r);
  for (int c = 0; c < r; ++c)
    for (int i = 0; i < r; ++i) {
      int s = 0;
      for (int k = 0; k < r; ++k) s += u.m_[k * kMaxRank + i] * v.m_[c * kMaxRank + k];
      p.m_[c * kMaxRank + i] = static_cast<int8_t>(s);
    }
  return seal(p);
}

WeylElt WeylGroup::inverse(const WeylElt& w) const {
  std::vector<int> word;
  WeylElt u = w;
  while (u.len_ > 0) {
    int j = 0;
    while (!is_right_descent(u, j)) ++j;
    word.push_back(j);
    u = right_mul(u, j);
  }
  return from_word(word);
}

WeylElt WeylGroup::left_mul(int i, const WeylElt& w) const {
  const int r = rank();
  WeylElt p = w;
  for (int c = 0; c < r; ++c) {
    int s = 0;
    for (int j = 0; j < r; ++j) s += rs_->cartan(i, j) * w.m_[c * kMaxRank + j];
    p.m_[c * kMaxRank + i] = static_cast<int8_t>(w.m_[c * kMaxRank + i] - s);
  }
  return seal(p);
}

WeylElt WeylGroup::right_mul(const WeylElt& w, int i) const {
  const int r = rank();
  WeylElt p = w;
  for (int j = 0; j < r; ++j) {
    int a = rs_->cartan(i, j);
    if (a == 0) continue;
    for (int k = 0; k < r; ++k)
      p.m_[j * kMaxRank + k] = static_cast<int8_t>(w.m_[j * kMaxRank + k] - a * w.m_[i * kMaxRank + k]);
  }
  p.len_ = static_cast<int16_t>(w.len_ + (is_right_descent(w, i) ? -1 : 1));
  return p;
}

Weight WeylGroup::act(const WeylElt& w, const Weight& lambda) const {
  const int r = rank();
  Weight out(r);
  for (int i = 0; i < r; ++i) {
    int s = 0;
    for (int k = 0; k < r; ++k) s += w.m_[k * kMaxRank + i] * lambda[k];
    out[i] = static_cast<int16_t>(s);
  }
  return out;
}

WeylElt WeylGroup::from_word(std::span<const int> word) const {
  WeylElt w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("word letter out of range for " + rs_->name());
    w = right_mul(w, i);
  }
  return w;
}

std::vector<int> WeylGroup::reduced_word(const WeylElt& w) const {
  std::vector<int> word;
  WeylElt v = inverse(w);
  while (v.len_ > 0) {
    int i = 0;
    while (!is_right_descent(v, i)) ++i;
    word.push_back(i);
    v = right_mul(v, i);
  }
  return word;
}

std::string WeylGroup::word_string(const WeylElt& w) const {
  if (w.is_identity()) return "id";
  std::string s;
  for (int i : reduced_word(w)) s += std::to_string(i + 1);
  return s;
}

bool WeylGroup::is_left_descent(const WeylElt& w, int i) const { return left_mul(i, w).len_ < w.len_; }

std::vector<int> WeylGroup::inversion_set(const WeylElt& w) const {
  std::vector<int> inv;
  for (int k = 0; k < rs_->num_positive_roots(); ++k)
    if (act(w, rs_->root(k)).is_negative()) inv.push_back(k);
  return inv;
}

bool WeylGroup::bruhat_leq(const WeylElt& v, const WeylElt& w) const {
  if (v.len_ > w.len_) return false;
  if (v.len_ == w.len_) return v == w;
  if (v.len_ == 0) return true;
  auto key = std::make_pair(v, w);
  {
    std::shared_lock lock(bruhat_mu_);
    auto it = bruhat_.find(key);
    if (it != bruhat_.end()) return it->second;
  }
  // Lifting property, applied on the right: if ws < w then v <= w iff min(v, vs) <= ws.
  int s = 0;
  while (!is_right_descent(w, s)) ++s;
  WeylElt vs = right_mul(v, s);
  bool result = bruhat_leq(vs.len_ < v.len_ ? vs : v, right_mul(w, s));
  std::unique_lock lock(bruhat_mu_);
  bruhat_.emplace(key, result);
  return result;
}

const std::vector<Cover>& WeylGroup::chevalley_covers(const WeylElt& w) const {
  {
    std::shared_lock lock(covers_mu_);
    auto it = covers_.find(w);
    if (it != covers_.end()) return it->second;
  }
  std::vector<Cover> out;
  for (int k = 0; k < rs_->num_positive_roots(); ++k) {
    if (!act(w, rs_->root(k)).is_negative()) continue;
    WeylElt u = mul(w, reflections_[k]);
    if (u.len_ == w.len_ - 1) out.push_back({k, u});
  }
  std::unique_lock lock(covers_mu_);
  return covers_.emplace(w, std::move(out)).first->second;
}

std::vector<WeylElt> WeylGroup::lower_interval(const WeylElt& w) const {
  std::unordered_set<WeylElt, WeylEltHash> seen{w};
  std::vector<WeylElt> frontier{w}, all{w};
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& x : frontier)
      for (const auto& c : chevalley_covers(x))
        if (seen.insert(c.elt).second) {
          next.push_back(c.elt);
          all.push_back(c.elt);
        }
    frontier = std::move(next);
  }
  sort_canonical(all);
  return all;
}

WeylElt WeylGroup::longest_element(NodeMask subset) const {
  WeylElt w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < rank(); ++i)
      if ((subset >> i & 1) && !is_right_descent(w, i)) {
        w = right_mul(w, i);
        grew = true;
      }
  }
  return w;
}

bool WeylGroup::is_min_rep(const WeylElt& w, NodeMask levi) const {
  for (int i = 0; i < rank(); ++i)
    if ((levi >> i & 1) && is_right_descent(w, i)) return false;
  return true;
}

std::pair<WeylElt, WeylElt> WeylGroup::coset_decompose(const WeylElt& w, NodeMask levi) const {
  WeylElt u = w;
  std::vector<int> stripped;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i < rank(); ++i)
      if ((levi >> i & 1) && is_right_descent(u, i)) {
        u = right_mul(u, i);
        stripped.push_back(i);
        again = true;
        break;
      }
  }
  std::reverse(stripped.begin(), stripped.end());
  return {u, from_word(stripped)};
}

const ParabolicQuotient& WeylGroup::enumerate_wp(NodeMask levi) const {
  {
    std::shared_lock lock(quotient_mu_);
    auto it = quotients_.find(levi);
    if (it != quotients_.end()) return *it->second;
  }
  auto q = std::make_unique<ParabolicQuotient>();
  q->levi = levi;
  std::unordered_set<WeylElt, WeylEltHash> seen;
  std::deque<WeylElt> queue{identity()};
  seen.insert(identity());
  while (!queue.empty()) {
    WeylElt w = queue.front();
    queue.pop_front();
    q->min_reps.push_back(w);
    for (int i = 0; i < rank(); ++i) {
      WeylElt u = left_mul(i, w);
      if (u.len_ == w.len_ + 1 && is_min_rep(u, levi) && seen.insert(u).second) queue.push_back(u);
    }
  }
  sort_canonical(q->min_reps);
  for (int k = 0; k < rs_->num_positive_roots(); ++k) {
    const Weight& a = rs_->root(k);
    bool inside = true;
    for (int i = 0; i < rank(); ++i)
      if (a[i] != 0 && !(levi >> i & 1)) inside = false;
    if (inside) q->r_p_plus.push_back(k);
  }
  std::unique_lock lock(quotient_mu_);
  auto& slot = quotients_[levi];
  if (!slot) slot = std::move(q);
  return *slot;
}

bool WeylGroup::canonical_less(const WeylElt& a, const WeylElt& b) const {
  if (a.len_ != b.len_) return a.len_ < b.len_;
  return reduced_word(a) < reduced_word(b);
}

void WeylGroup::sort_canonical(std::vector<WeylElt>& elts) const {
  std::vector<std::pair<std::pair<int, std::vector<int>>, size_t>> keys;
  keys.reserve(elts.size());
  for (size_t i = 0; i < elts.size(); ++i) keys.push_back({{elts[i].len_, reduced_word(elts[i])}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<WeylElt> sorted;
  sorted.reserve(elts.size());
  for (auto& k : keys) sorted.push_back(elts[k.second]);
  elts = std::move(sorted);
}

// ---------------------------------------------------------------------------
// Cominuscule grids.

namespace {

struct GridRow {
  int start;
  std::vector<int> labels;  // 1-based simple reflections
};

std::vector<GridRow> grid_rows(LieType type, int n, int node) {
  std::vector<GridRow> rows;
  auto swap_labels = [&](int a, int b) {
    for (auto& row : rows)
      for (int& l : row.labels) l = l == a ? b : l == b ? a : l;
  };
  switch (type) {
    case LieType::A:
      // Gr(k, n+1): k rows of length n+1-k.
      for (int r = 1; r <= node; ++r) {
        GridRow row{0, {}};
        for (int c = 1; c <= n + 1 - node; ++c) row.labels.push_back(node + c - r);
        rows.push_back(row);
      }
      break;
    case LieType::B: {
      GridRow row{0, {}};
      for (int c = 1; c <= 2 * n - 1; ++c) row.labels.push_back(c <= n ? c : 2 * n - c);
      rows.push_back(row);
      break;
    }
    case LieType::C:
      for (int r = 1; r <= n; ++r) {
        GridRow row{r - 1, {}};
        for (int c = r; c <= n; ++c) row.labels.push_back(n - (c - r));
        rows.push_back(row);
      }
      break;
    case LieType::D:
      if (node == 1) {
        GridRow top{0, {}};
        for (int c = 1; c <= n - 1; ++c) top.labels.push_back(c);
        GridRow bottom{n - 3, {n}};
        for (int c = n - 1; c <= 2 * n - 4; ++c) bottom.labels.push_back(2 * n - 3 - c);
        rows = {top, bottom};
      } else {
        for (int r = 1; r <= n - 1; ++r) {
          GridRow row{r - 1, {}};
          for (int c = r; c <= n - 1; ++c)
            row.labels.push_back(c == r ? (r % 2 ? n : n - 1) : n - 1 - (c - r));
          rows.push_back(row);
        }
        if (node == n - 1) swap_labels(n - 1, n);
      }
      break;
    case LieType::E:
      if (n == 6) {
        rows = {{0, {6, 5, 4, 3, 1}}, {2, {2, 4, 3}}, {3, {5, 4, 2}}, {3, {6, 5, 4, 3, 1}}};
        if (node == 1) {
          swap_labels(1, 6);
          swap_labels(3, 5);
        }
      } else {
        rows = {{0, {7, 6, 5, 4, 3, 1}}, {3, {2, 4, 3}}, {4, {5, 4, 2}}, {4, {6, 5, 4, 3, 1}},
                {4, {7, 6, 5, 4, 3}},    {7, {2, 4}},    {8, {5}},       {8, {6}},
                {8, {7}}};
      }
      break;
  }
  return rows;
}

}  // namespace

CominusculeDiagram::CominusculeDiagram(WeylGroupPtr group, int node) : group_(std::move(group)), node_(node) {
  const RootSystem& rs = group_->roots();
  auto nodes = rs.cominuscule_nodes();
  if (std::find(nodes.begin(), nodes.end(), node + 1) == nodes.end())
    throw std::invalid_argument("node " + std::to_string(node + 1) + " of " + rs.name() + " is not cominuscule");
  auto rows = grid_rows(rs.type(), rs.rank(), node + 1);
  // Root of the j-th box in reading order: s_{t_1} ... s_{t_{j-1}} (alpha_{t_j}).
  WeylElt prefix = group_->identity();
  cell_of_root_.assign(rs.num_positive_roots(), -1);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    row_start_.push_back(static_cast<int>(cells_.size()));
    row_len_.push_back(static_cast<int>(rows[r].labels.size()));
    for (size_t c = 0; c < rows[r].labels.size(); ++c) {
      int t = rows[r].labels[c] - 1;
      auto idx = rs.positive_root_index(group_->act(prefix, Weight::simple(rs.rank(), t)));
      if (!idx || rs.root(*idx)[node] != 1 || cell_of_root_[*idx] != -1)
        throw std::logic_error("inconsistent cominuscule grid for " + rs.name());
      cell_of_root_[*idx] = static_cast<int>(cells_.size());
      cells_.push_back({r, rows[r].start + static_cast<int>(c), t, *idx});
      prefix = group_->right_mul(prefix, t);
    }
  }
  int expected = 0;
  for (const Weight& a : rs.positive_roots()) expected += a[node] > 0;
  if (static_cast<int>(cells_.size()) != expected) throw std::logic_error("incomplete cominuscule grid");
}

CominDiagram CominusculeDiagram::element_to_diagram(const WeylElt& w) const {
  CominDiagram d;
  d.ideal = group_->inversion_set(w);
  d.shape.assign(num_rows(), 0);
  for (int root : d.ideal) {
    int cell = cell_of_root_[root];
    if (cell < 0) throw std::invalid_argument("element is not a minimal representative for this diagram");
    d.shape[cells_[cell].row]++;
  }
  // Each row of an ideal is a prefix of that row.
  for (int root : d.ideal) {
    const DiagramCell& cell = cells_[cell_of_root_[root]];
    if (cell_of_root_[root] - row_start_[cell.row] >= d.shape[cell.row])
      throw std::logic_error("ideal is not row-convex in the grid");
  }
  while (!d.shape.empty() && d.shape.back() == 0) d.shape.pop_back();
  d.label = format_label(d.shape);
  return d;
}

WeylElt CominusculeDiagram::ideal_to_element(std::span<const int> ideal) const {
  const RootSystem& rs = group_->roots();
  std::vector<int> cells;
  for (int root : ideal) {
    if (root < 0 || root >= rs.num_positive_roots() || cell_of_root_[root] < 0)
      throw std::invalid_argument("ideal contains a root outside R_{>=alpha_P}");
    cells.push_back(cell_of_root_[root]);
  }
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw std::invalid_argument("ideal contains a repeated root");
  for (const DiagramCell& cell : cells_) {
    bool in = std::binary_search(cells.begin(), cells.end(), cell_of_root_[cell.root]);
    if (in) continue;
    for (int c : cells)
      if (RootSystem::root_leq(rs.root(cell.root), rs.root(cells_[c].root)))
        throw std::invalid_argument("roots do not form a lower order ideal");
  }
  // w = s_{t_m} ... s_{t_1} for the boxes read in row-major order.
  WeylElt w = group_->identity();
  for (int c : cells) w = group_->left_mul(cells_[c].label, w);
  if (static_cast<size_t>(w.length()) != cells.size()) throw std::logic_error("ideal_to_element: length mismatch");
  return w;
}

WeylElt CominusculeDiagram::shape_to_element(std::span<const int> shape) const {
  if (static_cast<int>(shape.size()) > num_rows())
    throw std::invalid_argument("diagram label has more rows than the grid");
  std::vector<int> ideal;
  for (size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] < 0 || shape[r] > row_len_[r]) throw std::invalid_argument("diagram label exceeds grid row");
    for (int c = 0; c < shape[r]; ++c) ideal.push_back(cells_[row_start_[r] + c].root);
  }
  return ideal_to_element(ideal);
}

std::string CominusculeDiagram::format_label(std::span<const int> shape) const {
  if (shape.empty()) return "()";
  bool compact = std::all_of(shape.begin(), shape.end(), [](int p) { return p < 10; });
  std::string s;
  for (size_t i = 0; i < shape.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(shape[i]);
  }
  return s;
}

std::vector<int> CominusculeDiagram::parse_label(const std::string& text) const {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') t += ch;
  std::vector<int> shape;
  if (t.empty() || t == "0") return shape;
  auto bad = [&] { return std::invalid_argument("cannot parse diagram label '" + text + "'"); };
  if (t.find(',') != std::string::npos || num_rows() == 1) {
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) throw bad();
      shape.push_back(std::stoi(part));
    }
  } else {
    for (char ch : t) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
      shape.push_back(ch - '0');
    }
  }
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  return shape;
}

}  // namespace comather
