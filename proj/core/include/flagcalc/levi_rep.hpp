#pragma once

#include "flagcalc/deformed.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace flagcalc {

/// Integral weight in fundamental coordinates of the Levi system.
using LeviWeight = std::vector<int>;
/// Dominant weight -> multiplicity.
using DecompMap = std::map<LeviWeight, BigInt>;

/// The semisimple part of a Levi factor (or of any Cartan matrix), with
/// weight multiplicities and tensor-product decompositions. A reducible Levi
/// is treated as one system whose Weyl group is the product of the factors'.
///
/// Thread safe: multiplicity and partition-function caches sit behind a mutex.
class LeviSystem {
 public:
  /// The Levi of P; its nodes are Delta(P) in increasing order.
  explicit LeviSystem(const Parabolic& parabolic);
  /// A whole root system (the Levi of P = G).
  explicit LeviSystem(std::shared_ptr<const RootSystem> system);

  int rank() const { return rank_; }
  const RootSystem& roots() const { return *system_; }
  /// Factor description such as "A2xA1", "G2", or "trivial".
  const std::string& label() const { return label_; }
  /// Ambient node index of each Levi node.
  const std::vector<int>& nodes() const { return nodes_; }

  /// <lambda, alpha_i^vee> for the Levi nodes; throws Error if not integral.
  LeviWeight restrict(const Weight& ambient) const;

  BigInt weyl_dim(const LeviWeight& lambda) const;
  /// -w0 lambda.
  LeviWeight dual(const LeviWeight& lambda) const;
  /// Multiplicities of the dominant weights of V(lambda) (Freudenthal).
  DecompMap dominant_multiplicities(const LeviWeight& lambda) const;
  /// Every weight of V(lambda) with its multiplicity.
  DecompMap weight_multiplicities(const LeviWeight& lambda) const;

  /// V(lambda) x V(mu) by Klimyk's formula.
  DecompMap tensor_decompose(const LeviWeight& lambda, const LeviWeight& mu) const;
  BigInt tensor_multiplicity(const LeviWeight& lambda, const LeviWeight& mu, const LeviWeight& nu) const;
  /// Steinberg's formula; independent of the Freudenthal/Klimyk path.
  BigInt steinberg_multiplicity(const LeviWeight& lambda, const LeviWeight& mu, const LeviWeight& nu) const;
  /// Number of ways to write v (simple-root coordinates) as a sum of positive roots.
  BigInt kostant_partition(const Root& v) const;

  /// dim [V(l_1) x ... x V(l_s)]^{L^ss}, by iterated Klimyk decompositions
  /// pruned to weights that can still pair with the remaining factors.
  BigInt invariant_dimension(const std::vector<LeviWeight>& weights) const;

 private:
  void init();
  bool is_dominant(const LeviWeight& lambda) const;
  void require_dominant(const LeviWeight& lambda) const;
  /// Reflects into the dominant chamber; returns the number of reflections used.
  int to_dominant(LeviWeight& x) const;
  std::vector<LeviWeight> orbit(const LeviWeight& dominant) const;
  /// Scaled (x, y) for integral weights.
  long long form(const LeviWeight& x, const LeviWeight& y) const;
  /// lambda - mu as a nonnegative root-lattice vector, if lambda >= mu.
  std::optional<Root> dominance_gap(const LeviWeight& lambda, const LeviWeight& mu) const;

  std::shared_ptr<const RootSystem> system_;
  int rank_ = 0;
  std::string label_;
  std::vector<int> nodes_;
  std::vector<std::vector<long long>> gram_;  // scaled (omega_i, omega_j)
  std::vector<LeviWeight> positive_weights_;  // positive roots in weight coordinates
  std::vector<int> w0_perm_;                  // -w0 permutes the fundamental weights

  mutable std::mutex mutex_;
  mutable std::map<LeviWeight, DecompMap> dominant_cache_;
  mutable std::map<std::pair<Root, int>, BigInt> kostant_cache_;
  std::vector<int> kostant_order_;  // non-simple positive roots first
};

/// invariant_dimension of the Levi restrictions of n chi_{w_i} when the
/// central condition holds, else 0.
BigInt hom_dimension(const DeformedCalculus& deformed, const LeviSystem& levi, std::span<const int> classes, int n);

}  // namespace flagcalc
