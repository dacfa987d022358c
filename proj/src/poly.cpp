#include "comather/poly.hpp"

#include <algorithm>
#include <sstream>

namespace comather {

namespace {

// gmpxx does not normalize fractions built from a numerator and denominator.
mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

}  // namespace

namespace {

uint8_t checked_exponent(int v) {
  if (v < 0 || v > 255) throw std::overflow_error("monomial exponent out of range");
  return static_cast<uint8_t>(v);
}

std::string var_name(int slot) { return slot == kHbarSlot ? "h" : "a" + std::to_string(slot + 1); }

std::string var_latex(int slot) { return slot == kHbarSlot ? "\\hbar" : "\\alpha_{" + std::to_string(slot + 1) + "}"; }

// Terms for display: by increasing degree, alpha_1 first within a degree.
std::vector<const EquivPoly::Term*> display_order(const std::vector<EquivPoly::Term>& terms) {
  std::vector<const EquivPoly::Term*> out;
  for (const auto& t : terms) out.push_back(&t);
  std::stable_sort(out.begin(), out.end(), [](const EquivPoly::Term* a, const EquivPoly::Term* b) {
    if (a->first.degree() != b->first.degree()) return a->first.degree() < b->first.degree();
    return b->first < a->first;
  });
  return out;
}

template <class VarFn>
std::string render(const std::vector<EquivPoly::Term>& terms, VarFn name, bool latex) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto* t : display_order(terms)) {
    mpq_class c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    s += neg ? "-" : (first ? "" : "+");
    first = false;
    std::string mono;
    for (int slot = 0; slot < kNumVars; ++slot) {
      int e = t->first.exponent(slot);
      if (e == 0) continue;
      mono += name(slot);
      if (e > 1) mono += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += format_rational(c);
    } else {
      if (c != 1) {
        if (c.get_den() == 1)
          s += c.get_num().get_str();
        else
          s += latex ? "\\tfrac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}"
                     : "(" + format_rational(c) + ")";
      }
      s += mono;
    }
  }
  return s;
}

}  // namespace

std::string format_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Monomial Monomial::var(int slot, int power) {
  Monomial m;
  m.e_[0] = checked_exponent(power);
  m.e_[slot + 1] = checked_exponent(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = checked_exponent(e_[i] + o.e_[i]);
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 1; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = static_cast<uint8_t>(e_[i] - o.e_[i]);
  return m;
}

Monomial Monomial::without_hbar() const {
  Monomial m = *this;
  m.e_[0] = static_cast<uint8_t>(m.e_[0] - m.e_[kHbarSlot + 1]);
  m.e_[kHbarSlot + 1] = 0;
  return m;
}

Monomial Monomial::without_alphas() const {
  Monomial m;
  m.e_[0] = e_[kHbarSlot + 1];
  m.e_[kHbarSlot + 1] = e_[kHbarSlot + 1];
  return m;
}

EquivPoly PolyBuilder::build() {
  for (auto& t : raw_) t.second.canonicalize();
  std::sort(raw_.begin(), raw_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  EquivPoly p;
  for (auto& t : raw_) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  raw_.clear();
  return p;
}

EquivPoly::EquivPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, mpq_class(c));
}

EquivPoly::EquivPoly(const mpq_class& c) {
  mpq_class q = canonical(c);
  if (q != 0) terms_.emplace_back(Monomial{}, std::move(q));
}

EquivPoly EquivPoly::alpha(int i) { return monomial(Monomial::var(i), 1); }

EquivPoly EquivPoly::hbar() { return monomial(Monomial::var(kHbarSlot), 1); }

EquivPoly EquivPoly::from_weight(const Weight& w) {
  PolyBuilder b;
  for (int i = 0; i < w.rank(); ++i)
    if (w[i] != 0) b.add(Monomial::var(i), w[i]);
  return b.build();
}

EquivPoly EquivPoly::monomial(const Monomial& m, const mpq_class& c) {
  EquivPoly p;
  mpq_class q = canonical(c);
  if (q != 0) p.terms_.emplace_back(m, std::move(q));
  return p;
}

mpq_class EquivPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return 0;
}

int EquivPoly::min_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

bool EquivPoly::contains_hbar() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.exponent(kHbarSlot) > 0; });
}

EquivPoly EquivPoly::operator-() const {
  EquivPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

void EquivPoly::add_scaled(const EquivPoly& o, const mpq_class& scale) {
  mpq_class c = canonical(scale);
  if (c == 0 || o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, b->second * c);
      ++b;
    } else {
      mpq_class v = a->second + b->second * c;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

EquivPoly& EquivPoly::operator+=(const EquivPoly& o) {
  add_scaled(o, 1);
  return *this;
}

EquivPoly& EquivPoly::operator-=(const EquivPoly& o) {
  add_scaled(o, -1);
  return *this;
}

EquivPoly operator*(const EquivPoly& a, const EquivPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.terms_[0].second;
  if (b.is_constant()) return a * b.terms_[0].second;
  PolyBuilder builder;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) builder.add(s.first * t.first, s.second * t.second);
  return builder.build();
}

EquivPoly& EquivPoly::operator*=(const EquivPoly& o) {
  *this = *this * o;
  return *this;
}

EquivPoly& EquivPoly::operator*=(const mpq_class& scale) {
  mpq_class c = canonical(scale);
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

mpq_class EquivPoly::eval(std::span<const mpq_class> alphas, const mpq_class& hbar) const {
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class v = c;
    for (int slot = 0; slot < kNumVars; ++slot) {
      int e = m.exponent(slot);
      if (e == 0) continue;
      mpq_class x = slot == kHbarSlot ? hbar : (slot < static_cast<int>(alphas.size()) ? alphas[slot] : mpq_class(0));
      for (int k = 0; k < e; ++k) v *= x;
    }
    total += v;
  }
  return total;
}

EquivPoly EquivPoly::substitute_hbar_one() const {
  PolyBuilder b;
  for (const auto& [m, c] : terms_) b.add(m.without_hbar(), c);
  return b.build();
}

EquivPoly EquivPoly::substitute_alphas_zero() const {
  EquivPoly p;
  for (const auto& t : terms_)
    if (t.first.alpha_degree() == 0) p.terms_.push_back(t);
  return p;
}

EquivPoly EquivPoly::substitute_hbar(const EquivPoly& value) const {
  std::vector<EquivPoly> powers{EquivPoly(1)};
  EquivPoly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(kHbarSlot);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    out.add_scaled(monomial(m.without_hbar(), c) * powers[e], 1);
  }
  return out;
}

EquivPoly EquivPoly::substitute_alphas(std::span<const EquivPoly> images) const {
  std::vector<std::vector<EquivPoly>> powers(images.size(), std::vector<EquivPoly>{EquivPoly(1)});
  EquivPoly out;
  for (const auto& [m, c] : terms_) {
    EquivPoly v = monomial(m.without_alphas(), c);
    for (int slot = 0; slot < kMaxRank; ++slot) {
      int e = m.exponent(slot);
      if (e == 0) continue;
      if (slot >= static_cast<int>(images.size())) throw std::invalid_argument("substitute_alphas: missing image");
      auto& pw = powers[slot];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[slot]);
      v *= pw[e];
    }
    out += v;
  }
  return out;
}

EquivPoly EquivPoly::homogeneous_part(int d) const {
  EquivPoly p;
  for (const auto& t : terms_)
    if (t.first.degree() == d) p.terms_.push_back(t);
  return p;
}

EquivPoly EquivPoly::filter(bool (*keep)(const Monomial&)) const {
  EquivPoly p;
  for (const auto& t : terms_)
    if (keep(t.first)) p.terms_.push_back(t);
  return p;
}

EquivPoly EquivPoly::power(int k) const {
  EquivPoly r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

bool EquivPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

bool EquivPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.get_den() == 1; });
}

std::string EquivPoly::to_string() const { return render(terms_, var_name, false); }

std::string EquivPoly::to_latex() const { return render(terms_, var_latex, true); }

std::vector<std::pair<std::vector<int>, std::string>> EquivPoly::to_exponent_list(int rank) const {
  std::vector<std::pair<std::vector<int>, std::string>> out;
  for (const auto* t : display_order(terms_)) {
    std::vector<int> e(rank + 1, 0);
    for (int i = 0; i < rank; ++i) e[i] = t->first.exponent(i);
    e[rank] = t->first.exponent(kHbarSlot);
    std::string c = t->second.get_num().get_str() + "/" + t->second.get_den().get_str();
    out.emplace_back(std::move(e), std::move(c));
  }
  return out;
}

EquivPoly exact_divide(const EquivPoly& n, const EquivPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  if (d.is_constant()) return n * mpq_class(1 / d.constant_term());
  const auto& [lead_m, lead_c] = d.leading_term();
  EquivPoly r = n;
  PolyBuilder quotient;
  PolyBuilder remainder;
  bool has_remainder = false;
  while (!r.is_zero()) {
    auto [m, c] = r.leading_term();
    if (lead_m.divides(m)) {
      Monomial qm = m / lead_m;
      mpq_class qc = c / lead_c;
      quotient.add(qm, qc);
      r.add_scaled(EquivPoly::monomial(qm, 1) * d, -qc);
    } else {
      remainder.add(m, c);
      has_remainder = true;
      r.add_scaled(EquivPoly::monomial(m, 1), -c);
    }
  }
  if (has_remainder) {
    EquivPoly rem = remainder.build();
    throw NotPolynomial("not polynomial: nonzero remainder " + rem.to_string(), rem.to_string());
  }
  return quotient.build();
}

RatFun::RatFun(EquivPoly num, EquivPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

}  // namespace comather
