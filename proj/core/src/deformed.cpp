#include "flagcalc/deformed.hpp"

#include <algorithm>

namespace flagcalc {

Weight chi_root_sum(const CosetTable& table, int w) {
  const RootSystem& rs = table.roots();
  const Parabolic& p = table.parabolic();
  const WeylElement& x = table.element(w);
  Root sum(rs.rank());
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (p.is_levi_root(k)) continue;
    const Root& beta = rs.positive_roots()[k];
    if (!RootSystem::is_positive(x.apply(beta))) continue;
    for (int i = 0; i < rs.rank(); ++i) sum[i] += beta[i];
  }
  return rs.to_weight(sum);
}

Weight chi_rho_formula(const CosetTable& table, int w) {
  const RootSystem& rs = table.roots();
  const Weight rho = rs.rho();
  return rho - Rational(2) * table.parabolic().rho_levi() + table.element(w).apply_inverse(rho);
}

Weight chi(const CosetTable& table, int w) {
  Weight a = chi_root_sum(table, w);
  if (a != chi_rho_formula(table, w))
    throw InternalError("chi_w expressions disagree for " + format_word(table.element(w).word()));
  return a;
}

std::vector<Rational> restrict_to_levi(const Parabolic& parabolic, const Weight& weight) {
  std::vector<Rational> out;
  for (int i : parabolic.levi_simple()) out.push_back(weight[i]);
  return out;
}

std::vector<int> stabilizer_simple_roots(const CosetTable& table, int w) {
  const RootSystem& rs = table.roots();
  const Parabolic& p = table.parabolic();
  const WeylGroup& g = table.group();
  const WeylElement& x = table.element(w);
  const WeylElement hat = g.multiply(x, table.longest_levi());
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i) {
    const Root alpha = rs.unit_root(i);
    const bool in_hat = RootSystem::is_negative(hat.apply_inverse(alpha));
    const Root pre = x.apply_inverse(alpha);
    bool in_levi_or_negative = RootSystem::is_negative(pre);
    if (!in_levi_or_negative) {
      const auto k = rs.positive_root_index(pre);
      in_levi_or_negative = k && p.is_levi_root(*k);
    }
    if (in_hat != in_levi_or_negative)
      throw InternalError("stabilizer descriptions disagree for " + format_word(x.word()));
    if (in_hat) out.push_back(i);
  }
  return out;
}

std::vector<int> dj_profile(const CosetTable& table, int w) {
  const Parabolic& p = table.parabolic();
  const RootSystem& rs = table.roots();
  std::vector<int> d(p.m_o());
  for (int k : table.group().inversion_set(table.element(w))) {
    const int j = p.eval_at_xP(rs.positive_roots()[k]);
    if (j < 1 || j > p.m_o()) throw InternalError("inversion of a W^P element lies in the Levi");
    ++d[j - 1];
  }
  return d;
}

std::optional<Cover> find_cover(const CosetTable& table, int v, int w) {
  if (w < 0 || w >= table.size()) return std::nullopt;
  for (int c : table.covers_into(w))
    if (table.covers()[c].lower == v) return table.covers()[c];
  return std::nullopt;
}

namespace {

void check_cover(const CosetTable& table, const Cover& cover) {
  auto found = find_cover(table, cover.lower, cover.upper);
  if (!found || found->root != cover.root) throw Error("not a Bruhat cover in W^P");
}

}  // namespace

std::vector<int> dj_profile_at_cover(const CosetTable& table, const Cover& cover) {
  check_cover(table, cover);
  const RootSystem& rs = table.roots();
  std::vector<int> d = dj_profile(table, cover.lower);
  const Root alpha = table.element(cover.lower).apply_inverse(rs.positive_roots()[cover.root]);
  const int j = table.parabolic().eval_at_xP(alpha);
  if (j < 1 || j > table.parabolic().m_o()) throw InternalError("cover root pulls back into the Levi");
  ++d[j - 1];
  return d;
}

bool codim_one_cell_in_Qw_orbit(const CosetTable& table, const Cover& cover) {
  check_cover(table, cover);
  const auto node = table.roots().simple_label(table.roots().positive_roots()[cover.root]);
  if (!node) return false;
  const auto delta = stabilizer_simple_roots(table, cover.upper);
  return std::find(delta.begin(), delta.end(), *node) != delta.end();
}

DeformedCalculus::DeformedCalculus(std::shared_ptr<const SchubertCalculus> ordinary)
    : ordinary_(std::move(ordinary)) {
  for (int w = 0; w < table().size(); ++w) chi_.push_back(flagcalc::chi(table(), w));
}

std::vector<Rational> DeformedCalculus::exponents(int u, int v, int w) const {
  const Weight diff = chi_[w] - chi_[u] - chi_[v];
  std::vector<Rational> out;
  for (int k : table().parabolic().crossed()) out.push_back(eval_at_x(table().roots(), diff, k));
  return out;
}

bool DeformedCalculus::survives(int u, int v, int w) const {
  for (const Rational& e : exponents(u, v, w))
    if (e != 0) return false;
  return true;
}

BigInt DeformedCalculus::structure_constant(int u, int v, int w) const {
  const BigInt c = ordinary_->structure_constant(u, v, w);
  return c != 0 && survives(u, v, w) ? c : BigInt(0);
}

Expansion DeformedCalculus::product(int u, int v) const {
  Expansion out;
  for (const auto& term : ordinary_->product(u, v))
    if (survives(u, v, term.index)) out.push_back(term);
  return out;
}

CohomClass DeformedCalculus::cup_product(const CohomClass& a, const CohomClass& b) const {
  CohomClass out;
  for (const auto& [u, cu] : a.coeffs())
    for (const auto& [v, cv] : b.coeffs())
      for (const auto& term : product(u, v)) out.add(term.index, cu * cv * term.coeff);
  return out;
}

BigInt DeformedCalculus::top_coefficient(std::span<const int> classes) const {
  if (classes.empty()) return 0;
  int total = 0;
  for (int w : classes) {
    if (w < 0 || w >= table().size()) throw Error("class index outside W^P");
    total += table().codim(w);
  }
  if (total != table().parabolic().dim()) return 0;
  CohomClass acc = CohomClass::basis(classes[0]);
  for (std::size_t k = 1; k < classes.size() && !acc.is_zero(); ++k)
    acc = cup_product(acc, CohomClass::basis(classes[k]));
  return acc.coefficient(table().identity_index());
}

bool DeformedCalculus::is_levi_movable(std::span<const int> classes) const {
  return top_coefficient(classes) > 0;
}

bool DeformedCalculus::central_condition(std::span<const int> classes) const {
  Weight sum = -chi_[table().identity_index()];
  for (int w : classes) sum += chi_[w];
  for (int k : table().parabolic().crossed())
    if (eval_at_x(table().roots(), sum, k) != 0) return false;
  return true;
}

}  // namespace flagcalc
