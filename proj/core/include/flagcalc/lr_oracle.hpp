#pragma once

#include "flagcalc/weyl.hpp"

#include <map>
#include <vector>

namespace flagcalc {

/// Weakly decreasing parts; trailing zeros are dropped by normalize().
using Partition = std::vector<int>;

Partition normalize(Partition p);
bool is_partition(const Partition& p);
bool is_strict_partition(const Partition& p);
int size_of(const Partition& p);
Partition conjugate(const Partition& p);
Partition scale(const Partition& p, int n);

/// Number of LR tableaux of shape nu/lambda with content mu.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
/// s_lambda * s_mu restricted to partitions with at most max_rows parts.
std::map<Partition, BigInt> lr_product(const Partition& lambda, const Partition& mu, int max_rows);
/// dim of the GL(r) irreducible with highest weight lambda (hook-content formula).
BigInt gl_dimension(const Partition& lambda, int r);
/// dim [V(l_1) x ... x V(l_s)]^{SL(r)} by iterated LR products: the
/// multiplicity of all rectangles (c^r).
BigInt sl_invariant_count(const std::vector<Partition>& parts, int r);

/// All partitions in the r x k box.
std::vector<Partition> box_partitions(int r, int k);
/// All strict partitions with parts at most l.
std::vector<Partition> strict_partitions(int l);

/// Schubert class of codimension |lambda| in Gr(r, r + k) = A_{r+k-1} / P, P
/// maximal with alpha_r crossed. Throws Error if lambda is not in the box or
/// the table is not of that shape.
int grassmannian_index(const CosetTable& table, const Partition& lambda, int r, int k);
/// Inverse of grassmannian_index.
Partition grassmannian_partition(const CosetTable& table, int index, int r, int k);

/// Schubert class of codimension |a| in LG(l, 2l) = C_l / P, alpha_l crossed.
int lagrangian_index(const CosetTable& table, const Partition& a);
Partition lagrangian_partition(const CosetTable& table, int index);

struct FultonReport {
  BigInt c;                               // c^nu_{lambda,mu}
  std::vector<std::pair<int, BigInt>> scaled;  // (n, c^{n nu}_{n lambda, n mu}) when c = 1
  bool violation = false;
};

FultonReport fulton_check(const Partition& lambda, const Partition& mu, const Partition& nu, int n_max);

}  // namespace flagcalc
