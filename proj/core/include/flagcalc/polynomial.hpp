#pragma once

#include "flagcalc/numeric.hpp"
#include "flagcalc/root_system.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace flagcalc {

/// Sparse polynomial with integer coefficients in the simple roots
/// alpha_1..alpha_n (n <= 8). Exponent vectors are packed one byte per
/// variable; zero coefficients are never stored.
class MultiPoly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 8;

  MultiPoly() = default;
  explicit MultiPoly(int nvars);
  static MultiPoly constant(int nvars, const BigInt& c);
  /// sum_i coeffs[i] * alpha_i
  static MultiPoly linear(const std::vector<int>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const;
  bool is_homogeneous() const;
  const std::unordered_map<Key, BigInt>& terms() const { return terms_; }

  BigInt coefficient(const std::vector<int>& exponents) const;
  BigInt constant_term() const;

  static int exponent(Key key, int var) { return static_cast<int>((key >> (8 * var)) & 0xFF); }
  static Key pack(const std::vector<int>& exponents);
  static int total_degree(Key key);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const BigInt& scalar);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& s) { return a *= s; }
  bool operator==(const MultiPoly& other) const;

  /// Exact division of every coefficient; throws InternalError on a remainder.
  MultiPoly divexact(const BigInt& divisor) const;

  /// s_i f, where s_i(alpha_j) = alpha_j - a_ij alpha_i.
  MultiPoly reflect(const RootSystem& system, int i) const;
  /// (f - s_i f) / alpha_i.
  MultiPoly divided_difference(const RootSystem& system, int i) const;

 private:
  friend class DifferenceOperators;
  void add_term(Key key, const BigInt& c);

  int nvars_ = 0;
  std::unordered_map<Key, BigInt> terms_;
};

/// Divided differences d_i f = (f - s_i f) / alpha_i in a fixed coordinate
/// system. Classical types use epsilon coordinates, where every s_i is a
/// signed permutation and d_i of a monomial has a short closed form; other
/// systems use the simple-root coordinates of MultiPoly::divided_difference.
class DifferenceOperators {
 public:
  explicit DifferenceOperators(const RootSystem& system);
  static DifferenceOperators in_simple_roots(const RootSystem& system);

  bool ambient() const { return !moves_.empty(); }
  int nvars() const { return nvars_; }
  /// A root given in simple-root coordinates, as a linear form.
  MultiPoly linear_form(const Root& beta) const;
  MultiPoly apply(const MultiPoly& f, int i) const;
  /// A sparse degree-N candidate for the G/B point class (up to scale and
  /// modulo invariants); may have d_{w0} = 0 for unusual coordinate systems.
  MultiPoly point_class_candidate() const;

 private:
  DifferenceOperators(const RootSystem& system, int) : system_(system), nvars_(system.rank()) {}

  enum class Move { Transpose, SignedSwap, Negate };
  struct Simple {
    Move move;
    int a = 0, b = 0;
    int factor = 1;  // alpha_i = factor * x_a for Negate
  };

  RootSystem system_;
  int nvars_ = 0;
  std::vector<std::vector<int>> simple_forms_;
  std::vector<Simple> moves_;
};

}  // namespace flagcalc
