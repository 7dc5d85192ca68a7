#pragma once

#include "flagcalc/schubert.hpp"

#include <span>
#include <vector>

namespace flagcalc {

/// chi_w as the sum of the roots in (R^+ \ R_l^+) cap w^{-1} R^+.
Weight chi_root_sum(const CosetTable& table, int w);
/// chi_w as rho - 2 rho^L + w^{-1} rho.
Weight chi_rho_formula(const CosetTable& table, int w);
/// Both expressions; throws InternalError if they disagree.
Weight chi(const CosetTable& table, int w);

/// <lambda, alpha_i^vee> for i in Delta(P), in levi_simple() order.
std::vector<Rational> restrict_to_levi(const Parabolic& parabolic, const Weight& weight);

/// Delta(Q_w) = Delta cap w w0^P R^-, as 0-based node indices. Checked against
/// Delta cap w(R_l^+ u R^-).
std::vector<int> stabilizer_simple_roots(const CosetTable& table, int w);

/// d_1..d_{m_o} (index 0 holds d_1) for the tangent space of w^{-1} X_w at the
/// base point: d_j counts inversions delta of w with delta(x_P) = j.
std::vector<int> dj_profile(const CosetTable& table, int w);

/// Profile of v^{-1} X_w along the cover v -> w: d(v) plus one at alpha(x_P)
/// with alpha = v^{-1} beta. Throws Error if (v, w) is not a cover.
std::vector<int> dj_profile_at_cover(const CosetTable& table, const Cover& cover);

/// True iff the cover root is in Delta(Q_w); throws Error for a non-cover.
bool codim_one_cell_in_Qw_orbit(const CosetTable& table, const Cover& cover);

/// Finds the cover v -> w, if any.
std::optional<Cover> find_cover(const CosetTable& table, int v, int w);

/// The deformed product: c^w_{u,v} kept exactly when (chi_w - chi_u - chi_v)
/// vanishes on x_k for every crossed node k. Shares the ordinary product cache.
class DeformedCalculus {
 public:
  explicit DeformedCalculus(std::shared_ptr<const SchubertCalculus> ordinary);

  const SchubertCalculus& ordinary() const { return *ordinary_; }
  const CosetTable& table() const { return ordinary_->table(); }
  const Weight& chi(int w) const { return chi_[w]; }

  /// (chi_w - chi_u - chi_v)(x_k) for each crossed node k.
  std::vector<Rational> exponents(int u, int v, int w) const;
  bool survives(int u, int v, int w) const;

  BigInt structure_constant(int u, int v, int w) const;
  Expansion product(int u, int v) const;
  CohomClass cup_product(const CohomClass& a, const CohomClass& b) const;
  /// Coefficient of [X_e] in the iterated deformed product.
  BigInt top_coefficient(std::span<const int> classes) const;
  /// Degree condition plus a nonzero deformed top coefficient.
  bool is_levi_movable(std::span<const int> classes) const;
  /// (sum_i chi_{w_i} - chi_e)(x_k) = 0 for every crossed node k.
  bool central_condition(std::span<const int> classes) const;

 private:
  std::shared_ptr<const SchubertCalculus> ordinary_;
  std::vector<Weight> chi_;
};

}  // namespace flagcalc
