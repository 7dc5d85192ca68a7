#pragma once

#include "flagcalc/root_system.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace flagcalc {

/// A Weyl group element. The root-lattice action matrix is the canonical form:
/// equality and hashing use it, while the stored word is only a certificate
/// (the lexicographically least reduced word).
class WeylElement {
 public:
  int rank() const { return rank_; }
  int length() const { return length_; }
  const Word& word() const { return word_; }

  /// w(alpha_j) = sum_i root_action(i, j) alpha_i.
  int root_action(int i, int j) const { return root_[i * rank_ + j]; }
  Root apply(const Root& root) const;
  Root apply_inverse(const Root& root) const;
  Weight apply(const Weight& weight) const;
  Weight apply_inverse(const Weight& weight) const;

  bool operator==(const WeylElement& other) const { return root_ == other.root_; }
  std::size_t hash() const;

 private:
  friend class WeylGroup;
  int rank_ = 0;
  int length_ = 0;
  Word word_;
  std::vector<int> root_;     // action on simple-root coordinates
  std::vector<int> inverse_;  // action of w^{-1} on simple-root coordinates
  std::vector<int> weight_;   // action on fundamental-weight coordinates
  std::vector<int> weight_inverse_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

/// Group operations for one root system. Cheap to copy.
class WeylGroup {
 public:
  explicit WeylGroup(std::shared_ptr<const RootSystem> system);

  const RootSystem& roots() const { return *system_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return system_; }

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;
  /// Product of simple reflections; the word need not be reduced.
  WeylElement from_word(const Word& word) const;
  /// s_beta for a positive root beta.
  WeylElement reflection(const Root& beta) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  /// s_i w and w s_i without recomputing from scratch.
  WeylElement left_multiply(int i, const WeylElement& w) const;
  WeylElement right_multiply(const WeylElement& w, int i) const;

  /// w^{-1}(alpha_i) < 0, i.e. l(s_i w) < l(w).
  bool is_left_descent(const WeylElement& w, int i) const;
  /// w(alpha_i) < 0, i.e. l(w s_i) < l(w).
  bool is_right_descent(const WeylElement& w, int i) const;

  /// R^+ cap w^{-1} R^-, as indices into roots().positive_roots().
  std::vector<int> inversion_set(const WeylElement& w) const;

  /// Longest element of the parabolic subgroup generated by `nodes`.
  WeylElement longest(const std::vector<int>& nodes) const;
  WeylElement longest() const;

  /// All of W, breadth first from the identity.
  std::vector<WeylElement> enumerate() const;
  std::vector<WeylElement> enumerate(const std::vector<int>& nodes) const;

 private:
  WeylElement assemble(std::vector<int> root, std::vector<int> inverse, std::vector<int> weight,
                       std::vector<int> weight_inverse) const;
  int count_inversions(const std::vector<int>& root_action) const;
  Word least_reduced_word(std::vector<int> inverse) const;

  std::shared_ptr<const RootSystem> system_;
  std::vector<std::vector<int>> simple_root_mats_;
  std::vector<std::vector<int>> simple_weight_mats_;
};

/// |W| from the classical order formulas.
long long classical_weyl_order(char type, int rank);

/// True iff w(alpha_i) > 0 for every i in Delta(P).
bool is_minimal_coset_rep(const Parabolic& parabolic, const WeylElement& w);

/// A Bruhat cover v -> w inside W^P: w = s_beta v, l(w) = l(v) + 1.
struct Cover {
  int lower = 0;  // index of v in the coset table
  int upper = 0;  // index of w
  int root = 0;   // index of beta in positive_roots()
};

/// W^P with its Bruhat covers. Element 0 is the identity; elements are sorted
/// by (length, word). This is the shared index space for all class-level data.
class CosetTable {
 public:
  static std::shared_ptr<const CosetTable> build(std::shared_ptr<const Parabolic> parabolic);

  const Parabolic& parabolic() const { return *parabolic_; }
  const std::shared_ptr<const Parabolic>& parabolic_ptr() const { return parabolic_; }
  const RootSystem& roots() const { return parabolic_->roots(); }
  const WeylGroup& group() const { return group_; }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(int index) const { return elements_.at(index); }
  const std::vector<Cover>& covers() const { return covers_; }
  /// Covers v -> w with the given upper element.
  const std::vector<int>& covers_into(int upper) const { return covers_into_[upper]; }

  std::optional<int> index_of(const WeylElement& w) const;
  /// Index of the element named by a word; throws Error naming the word if it is not in W^P.
  int index_of_word(const Word& word) const;
  int length(int index) const { return elements_[index].length(); }
  /// dim G/P - l(w): the degree of [X_w] in the homological labelling.
  int codim(int index) const { return parabolic_->dim() - length(index); }

  int identity_index() const { return 0; }
  int top_index() const { return size() - 1; }
  /// Minimal representative of w0 w w0^P; an involution with l(dual) = dim G/P - l(w).
  int dual(int index) const { return dual_[index]; }

  const WeylElement& longest_levi() const { return longest_levi_; }
  const WeylElement& longest() const { return longest_; }

 private:
  std::shared_ptr<const Parabolic> parabolic_;
  WeylGroup group_;
  std::vector<WeylElement> elements_;
  std::unordered_map<WeylElement, int, WeylElementHash> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> covers_into_;
  std::vector<int> dual_;
  WeylElement longest_levi_;
  WeylElement longest_;

  explicit CosetTable(std::shared_ptr<const Parabolic> parabolic);
};

/// Minimal-length representative of the coset w W_P.
WeylElement minimal_coset_rep(const WeylGroup& group, const Parabolic& parabolic, WeylElement w);

/// Minimal representative of w0 w w0^P; w must lie in W^P.
WeylElement dual_rep(const WeylGroup& group, const Parabolic& parabolic, const WeylElement& w);

}  // namespace flagcalc
