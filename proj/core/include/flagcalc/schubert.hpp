#pragma once

#include "flagcalc/polynomial.hpp"
#include "flagcalc/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace flagcalc {

/// BGG representatives for every element of W, stored as numerators over |W|:
/// S^{w0} = prod_{beta > 0} beta / |W| and S^w = d_{i1} ... d_{ik} S^{w0} along
/// a reduced word of w^{-1} w0. S^w has degree l(w) and represents the
/// codimension-l(w) Schubert class of G/B.
struct BggTable {
  BigInt denominator;
  std::vector<WeylElement> elements;
  std::vector<MultiPoly> numerators;
  std::unordered_map<WeylElement, int, WeylElementHash> index;

  const MultiPoly& numerator_of(const WeylElement& w) const { return numerators.at(index.at(w)); }
};

BggTable bgg_representatives(const WeylGroup& group);

/// An element of H^*(G/P) in the basis {[X_w] : w in W^P}, keyed by coset-table index.
class CohomClass {
 public:
  CohomClass() = default;
  static CohomClass basis(int index, BigInt coeff = 1);

  const std::map<int, BigInt>& coeffs() const { return coeffs_; }
  BigInt coefficient(int index) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(int index, const BigInt& c);

  CohomClass& operator+=(const CohomClass& other);
  friend CohomClass operator*(const BigInt& s, const CohomClass& a);
  bool operator==(const CohomClass& other) const = default;

 private:
  std::map<int, BigInt> coeffs_;
};

struct ExpansionTerm {
  int index = 0;
  BigInt coeff;
  bool operator==(const ExpansionTerm& other) const = default;
};
using Expansion = std::vector<ExpansionTerm>;

struct StructureEntry {
  int u = 0, v = 0, w = 0;
  BigInt c;
};

/// Cup product on H^*(G/P, Z) in the Schubert basis [X_w], w in W^P, with
/// [X_w] in degree 2(dim G/P - l(w)).
///
/// Internally classes are codimension graded: [X_w] is represented by the BGG
/// polynomial of dual(w) = w0 w w0^P, pulled back to G/B. Representatives are
/// only determined modulo the ideal of positive-degree invariants, so the G/B
/// point class is taken to be a single monomial m divided by d_{w0} m (in
/// epsilon coordinates for classical types); the descent to S^x runs along the
/// least word of x^{-1} w0. Coefficients are read
/// off with divided differences: d_x(S^y) = delta_{x,y} in degree l(x) = l(y),
/// and d_x kills the invariant ideal in that degree.
///
/// Thread safe: representatives and products are memoized behind a mutex;
/// concurrent callers may compute the same product, and the first insert wins.
class SchubertCalculus {
 public:
  explicit SchubertCalculus(std::shared_ptr<const CosetTable> table);

  const CosetTable& table() const { return *table_; }
  const std::shared_ptr<const CosetTable>& table_ptr() const { return table_; }
  const Parabolic& parabolic() const { return table_->parabolic(); }

  /// d_{w0} m: representatives are stored multiplied by this.
  const BigInt& scale() const { return scale_; }
  /// scale() * S^x (mod invariants) for x = table().element(index), degree l(x).
  MultiPoly representative(int index) const;

  /// c with [X_u].[X_v] = sum_w c^w_{u,v} [X_w].
  BigInt structure_constant(int u, int v, int w) const;
  /// Nonzero terms of [X_u].[X_v], sorted by index. Cached.
  Expansion product(int u, int v) const;
  CohomClass cup_product(const CohomClass& a, const CohomClass& b) const;
  /// Coefficient of [X_e] in [X_{w_1}] ... [X_{w_s}]; 0 unless sum l(w_i) = (s-1) dim G/P.
  BigInt intersection_number(std::span<const int> classes) const;

  CohomClass unit() const { return CohomClass::basis(table_->top_index()); }
  CohomClass point() const { return CohomClass::basis(table_->identity_index()); }

  /// Computes every product [X_u].[X_v] that can be nonzero.
  void compute_all() const;
  /// All cached nonzero constants, sorted by (u, v, w).
  std::vector<StructureEntry> entries() const;
  /// Loads a complete table as produced by compute_all() + entries().
  void import_entries(const std::vector<StructureEntry>& entries) const;

 private:
  /// Constant term of d_x f / scale^k for every x in W^P of length deg f.
  std::vector<std::pair<int, BigInt>> extract(const MultiPoly& f, int factors) const;
  MultiPoly apply_word(MultiPoly f, const Word& word) const;

  std::shared_ptr<const CosetTable> table_;
  DifferenceOperators ops_;
  BigInt scale_;
  std::vector<int> first_letter_;  // first letter of each element's word (-1 for e)
  std::vector<int> suffix_;        // index of s_{first} x

  mutable std::mutex rep_mutex_;
  mutable std::unordered_map<WeylElement, MultiPoly, WeylElementHash> rep_cache_;
  mutable std::mutex product_mutex_;
  mutable std::map<std::pair<int, int>, Expansion> product_cache_;
};

}  // namespace flagcalc
