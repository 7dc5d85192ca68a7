#pragma once

#include "flagcalc/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace flagcalc {

/// Integer vector in simple-root coordinates.
using Root = std::vector<int>;

using IntMatrix = std::vector<std::vector<int>>;

/// A weight in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<Rational>(rank)); }
  static Weight from_ints(const std::vector<int>& coords);

  int rank() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[i]; }
  Rational& operator[](int i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_integral() const;
  bool is_dominant() const;
  /// Integer coordinates; throws InternalError if not integral.
  std::vector<int> to_ints() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& scalar);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  bool operator==(const Weight& other) const = default;

 private:
  std::vector<Rational> coords_;
};

std::string format_weight(const Weight& weight);

/// Cartan data and positive roots of a finite reduced root system.
///
/// Simple roots are numbered as in the Bourbaki plates. The Cartan matrix is
/// stored with a_ij = <alpha_j, alpha_i^vee>. Roots live in simple-root
/// coordinates; coroot pairings are derived from the symmetrized form with
/// short roots normalized to squared length 2, so no floating point is used.
class RootSystem {
 public:
  /// Types A (rank 1-7), B/C (2-5), D (4-5), G (2).
  static RootSystem build(char type, int rank);
  /// Parses "C3", "G2", "a4".
  static RootSystem parse(std::string_view name);
  /// Any finite-type Cartan matrix, possibly reducible. Used for Levi factors.
  static RootSystem from_cartan(const IntMatrix& cartan, std::string label);

  const std::string& name() const { return name_; }
  char type() const { return type_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// Simple roots in epsilon coordinates for built classical types (A_n uses
  /// n+1 coordinates); empty for G2 and Cartan-matrix systems.
  std::vector<std::vector<int>> ambient_simple_roots() const;
  /// (alpha_i, alpha_i) / 2 with the shortest simple root in each component at 1.
  int symmetrizer(int i) const { return symmetrizer_[i]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  std::optional<int> positive_root_index(const Root& root) const;
  bool is_root(const Root& root) const;
  /// Index of alpha_i in positive_roots().
  int simple_root_index(int i) const { return simple_index_[i]; }
  std::optional<int> simple_label(const Root& root) const;
  /// Highest root; only meaningful for irreducible systems.
  const Root& highest_root() const { return positive_[highest_]; }

  const Weight& rho() const { return rho_; }
  Weight fundamental_weight(int i) const;
  Weight simple_root(int i) const { return to_weight(unit_root(i)); }
  Root unit_root(int i) const;

  Weight to_weight(const Root& root) const;
  std::vector<Rational> to_root_coords(const Weight& weight) const;
  /// Root-lattice coordinates of an integral weight, if it lies in the root lattice.
  std::optional<Root> to_root_lattice(const std::vector<int>& fundamental_coords) const;

  /// (x, y) in the normalized invariant form.
  int inner_product(const Root& x, const Root& y) const;
  Rational inner_product(const Weight& x, const Weight& y) const;
  /// <x, beta^vee> for beta a root.
  int coroot_pairing(const Root& x, const Root& beta) const;
  Rational coroot_pairing(const Weight& x, const Root& beta) const;

  Root reflect(const Root& x, const Root& beta) const;
  Weight reflect(const Weight& x, const Root& beta) const;
  Weight simple_reflect(const Weight& x, int i) const;

  static bool is_positive(const Root& root);
  static bool is_negative(const Root& root);
  static int height(const Root& root);

 private:
  RootSystem() = default;
  void finish();

  std::string name_;
  char type_ = '?';
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<int> symmetrizer_;
  IntMatrix form_;                          // (alpha_i, alpha_j)
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  int highest_ = 0;
  Weight rho_;
};

/// lambda(x_j): the coefficient of alpha_j when lambda is expanded in simple roots.
Rational eval_at_x(const RootSystem& system, const Weight& weight, int j);

/// Half the sum of the positive roots supported on levi_simple.
Weight rho_levi(const RootSystem& system, const std::vector<int>& levi_simple);

/// A standard parabolic, given by the simple roots Delta(P) of its Levi factor.
///
/// Node indices are 0-based. The "crossed" nodes are Delta \ Delta(P).
class Parabolic {
 public:
  static Parabolic from_levi(std::shared_ptr<const RootSystem> system, std::vector<int> levi_simple);
  static Parabolic from_crossed(std::shared_ptr<const RootSystem> system, std::vector<int> crossed);

  const RootSystem& roots() const { return *system_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return system_; }
  int rank() const { return system_->rank(); }

  bool in_levi(int node) const { return in_levi_[node]; }
  const std::vector<int>& levi_simple() const { return levi_simple_; }
  const std::vector<int>& crossed() const { return crossed_; }
  /// Indices into roots().positive_roots() of R_l^+.
  const std::vector<int>& levi_positive_roots() const { return levi_positive_; }
  bool is_levi_root(int positive_index) const { return is_levi_root_[positive_index]; }

  const Weight& rho_levi() const { return rho_levi_; }
  /// dim G/P = |R^+| - |R_l^+|.
  int dim() const { return dim_; }
  /// theta(x_P).
  int m_o() const { return m_o_; }
  bool is_maximal() const { return crossed_.size() == 1; }
  bool is_cominuscule() const { return is_maximal() && m_o_ == 1; }

  Rational eval_at_xP(const Weight& weight) const;
  int eval_at_xP(const Root& root) const;

  /// "C3/{2}" style label using 1-based crossed nodes.
  std::string label() const;

 private:
  std::shared_ptr<const RootSystem> system_;
  std::vector<bool> in_levi_;
  std::vector<int> levi_simple_;
  std::vector<int> crossed_;
  std::vector<int> levi_positive_;
  std::vector<bool> is_levi_root_;
  Weight rho_levi_;
  int dim_ = 0;
  int m_o_ = 0;
};

}  // namespace flagcalc
