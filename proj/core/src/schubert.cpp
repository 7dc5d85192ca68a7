#include "flagcalc/schubert.hpp"

#include <algorithm>

namespace flagcalc {

namespace {

MultiPoly product_of_roots(const RootSystem& system, const std::vector<int>& root_indices) {
  MultiPoly p = MultiPoly::constant(system.rank(), 1);
  for (int k : root_indices) p = p * MultiPoly::linear(system.positive_roots()[k]);
  return p;
}

BigInt divide_exactly(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw InternalError("structure constant is not an integer: " + num.str() + "/" + den.str());
  return q;
}

}  // namespace

BggTable bgg_representatives(const WeylGroup& group) {
  const RootSystem& rs = group.roots();
  BggTable table;
  table.elements = group.enumerate();
  table.denominator = static_cast<long long>(table.elements.size());
  for (int k = 0; k < static_cast<int>(table.elements.size()); ++k) table.index.emplace(table.elements[k], k);
  table.numerators.assign(table.elements.size(), MultiPoly(rs.rank()));
  std::vector<bool> done(table.elements.size(), false);

  const WeylElement w0 = group.longest();
  std::vector<int> all(rs.num_positive_roots());
  for (int k = 0; k < rs.num_positive_roots(); ++k) all[k] = k;
  const int top = table.index.at(w0);
  table.numerators[top] = product_of_roots(rs, all);
  done[top] = true;

  for (std::size_t k = 0; k < table.elements.size(); ++k) {
    if (done[k]) continue;
    // Walk up y -> y s_i along the least word of y^{-1} w0 until a known entry.
    std::vector<std::pair<int, int>> path;  // (element index, letter applied to reach it)
    WeylElement y = table.elements[k];
    int idx = static_cast<int>(k);
    while (!done[idx]) {
      const WeylElement u = group.multiply(group.inverse(y), w0);
      const int letter = u.word().front();
      path.emplace_back(idx, letter);
      y = group.right_multiply(y, letter);
      idx = table.index.at(y);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      table.numerators[it->first] = table.numerators[idx].divided_difference(rs, it->second);
      done[it->first] = true;
      idx = it->first;
    }
  }
  return table;
}

CohomClass CohomClass::basis(int index, BigInt coeff) {
  CohomClass c;
  c.add(index, coeff);
  return c;
}

BigInt CohomClass::coefficient(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void CohomClass::add(int index, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CohomClass& CohomClass::operator+=(const CohomClass& other) {
  for (const auto& [k, c] : other.coeffs_) add(k, c);
  return *this;
}

CohomClass operator*(const BigInt& s, const CohomClass& a) {
  CohomClass out;
  for (const auto& [k, c] : a.coeffs_) out.add(k, s * c);
  return out;
}

SchubertCalculus::SchubertCalculus(std::shared_ptr<const CosetTable> table)
    : table_(std::move(table)), ops_(table_->roots()) {
  const WeylGroup& g = table_->group();
  const WeylElement& w0 = table_->longest();

  // Point class of G/B: any degree-N polynomial f with d_{w0} f != 0 is
  // congruent to d_{w0}(f) * S^{w0} modulo the invariant ideal, which every
  // divided difference preserves and which coefficient extraction ignores.
  MultiPoly top = ops_.point_class_candidate();
  scale_ = apply_word(top, w0.word()).constant_term();
  if (scale_ == 0) {
    top = MultiPoly::constant(ops_.nvars(), 1);
    for (const Root& beta : table_->roots().positive_roots()) top = top * ops_.linear_form(beta);
    scale_ = apply_word(top, w0.word()).constant_term();
  }
  if (scale_ == 0) throw InternalError("no point-class representative found");
  if (scale_ < 0) {
    top *= BigInt(-1);
    scale_ = -scale_;
  }
  rep_cache_.emplace(w0, top);

  first_letter_.assign(table_->size(), -1);
  suffix_.assign(table_->size(), -1);
  for (int x = 0; x < table_->size(); ++x) {
    const WeylElement& w = table_->element(x);
    if (w.length() == 0) continue;
    first_letter_[x] = w.word().front();
    auto s = table_->index_of(g.left_multiply(first_letter_[x], w));
    if (!s) throw InternalError("suffix of a minimal coset representative left W^P");
    suffix_[x] = *s;
  }
}

MultiPoly SchubertCalculus::representative(int index) const {
  const WeylGroup& g = table_->group();
  const WeylElement& w0 = table_->longest();
  std::lock_guard lock(rep_mutex_);
  WeylElement y = table_->element(index);
  if (auto it = rep_cache_.find(y); it != rep_cache_.end()) return it->second;

  // Climb y -> y s_i along the least word of y^{-1} w0 until a cached
  // element, then come back down: d_i S^{y s_i} = S^y when l(y s_i) > l(y).
  std::vector<std::pair<WeylElement, int>> path;
  auto it = rep_cache_.find(y);
  while (it == rep_cache_.end()) {
    const WeylElement rest = g.multiply(g.inverse(y), w0);
    const int letter = rest.word().front();
    path.emplace_back(y, letter);
    y = g.right_multiply(y, letter);
    it = rep_cache_.find(y);
  }
  MultiPoly current = it->second;
  for (auto p = path.rbegin(); p != path.rend(); ++p) {
    current = ops_.apply(current, p->second);
    rep_cache_.emplace(p->first, current);
  }
  return current;
}

MultiPoly SchubertCalculus::apply_word(MultiPoly f, const Word& word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (f.is_zero()) break;
    f = ops_.apply(f, *it);
  }
  return f;
}

std::vector<std::pair<int, BigInt>> SchubertCalculus::extract(const MultiPoly& f, int factors) const {
  std::vector<std::pair<int, BigInt>> out;
  if (f.is_zero()) return out;
  const int degree = f.degree();
  BigInt denom = 1;
  for (int k = 0; k < factors; ++k) denom *= scale_;

  // d_x = d_{i1} o d_{x'} with x = s_{i1} x'; memoize d_z f over W^P.
  std::vector<std::optional<MultiPoly>> memo(table_->size());
  memo[table_->identity_index()] = f;
  auto compute = [&](auto&& self, int z) -> const MultiPoly& {
    if (memo[z]) return *memo[z];
    const MultiPoly& inner = self(self, suffix_[z]);
    memo[z] = inner.is_zero() ? inner : ops_.apply(inner, first_letter_[z]);
    return *memo[z];
  };
  for (int x = 0; x < table_->size(); ++x) {
    if (table_->length(x) != degree) continue;
    const MultiPoly& d = compute(compute, x);
    if (d.degree() > 0) throw InternalError("divided difference did not reach degree 0");
    const BigInt c = divide_exactly(d.constant_term(), denom);
    if (c != 0) out.emplace_back(x, c);
  }
  return out;
}

Expansion SchubertCalculus::product(int u, int v) const {
  const int n = table_->size();
  if (u < 0 || u >= n || v < 0 || v >= n) throw Error("class index outside W^P");
  {
    std::lock_guard lock(product_mutex_);
    if (auto it = product_cache_.find({u, v}); it != product_cache_.end()) return it->second;
  }
  Expansion result;
  const int codim = table_->codim(u) + table_->codim(v);
  if (codim <= parabolic().dim()) {
    const MultiPoly f = representative(table_->dual(u)) * representative(table_->dual(v));
    for (auto& [x, c] : extract(f, 2)) result.push_back({table_->dual(x), c});
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  }
  std::lock_guard lock(product_mutex_);
  return product_cache_.try_emplace({u, v}, std::move(result)).first->second;
}

BigInt SchubertCalculus::structure_constant(int u, int v, int w) const {
  if (w < 0 || w >= table_->size()) throw Error("class index outside W^P");
  if (table_->codim(u) + table_->codim(v) != table_->codim(w)) {
    if (u < 0 || u >= table_->size() || v < 0 || v >= table_->size()) throw Error("class index outside W^P");
    return 0;
  }
  for (const auto& term : product(u, v))
    if (term.index == w) return term.coeff;
  return 0;
}

CohomClass SchubertCalculus::cup_product(const CohomClass& a, const CohomClass& b) const {
  CohomClass out;
  for (const auto& [u, cu] : a.coeffs())
    for (const auto& [v, cv] : b.coeffs())
      for (const auto& term : product(u, v)) out.add(term.index, cu * cv * term.coeff);
  return out;
}

BigInt SchubertCalculus::intersection_number(std::span<const int> classes) const {
  if (classes.empty()) return 0;
  int total = 0;
  for (int w : classes) {
    if (w < 0 || w >= table_->size()) throw Error("class index outside W^P");
    total += table_->codim(w);
  }
  if (total != parabolic().dim()) return 0;
  // Fold through the cached pairwise products so polynomial degrees stay at
  // most dim G/P.
  CohomClass acc = CohomClass::basis(classes[0]);
  for (std::size_t k = 1; k < classes.size() && !acc.is_zero(); ++k)
    acc = cup_product(acc, CohomClass::basis(classes[k]));
  return acc.coefficient(table_->identity_index());
}

void SchubertCalculus::compute_all() const {
  const int n = table_->size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (table_->codim(u) + table_->codim(v) <= parabolic().dim()) product(u, v);
}

std::vector<StructureEntry> SchubertCalculus::entries() const {
  std::vector<StructureEntry> out;
  std::lock_guard lock(product_mutex_);
  for (const auto& [key, expansion] : product_cache_)
    for (const auto& term : expansion) out.push_back({key.first, key.second, term.index, term.coeff});
  return out;
}

void SchubertCalculus::import_entries(const std::vector<StructureEntry>& entries) const {
  const int n = table_->size();
  std::map<std::pair<int, int>, Expansion> loaded;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (table_->codim(u) + table_->codim(v) <= parabolic().dim()) loaded[{u, v}];
  for (const auto& e : entries) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.w < 0 || e.w >= n)
      throw Error("structure-constant entry outside W^P");
    auto it = loaded.find({e.u, e.v});
    if (it == loaded.end() || table_->codim(e.u) + table_->codim(e.v) != table_->codim(e.w))
      throw Error("structure-constant entry violates the degree condition");
    it->second.push_back({e.w, e.c});
  }
  for (auto& [key, expansion] : loaded)
    std::sort(expansion.begin(), expansion.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  std::lock_guard lock(product_mutex_);
  for (auto& [key, expansion] : loaded) product_cache_.insert_or_assign(key, std::move(expansion));
}

}  // namespace flagcalc
