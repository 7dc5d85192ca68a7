#include "flagcalc/lr_oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace flagcalc {

Partition normalize(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool is_strict_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] >= p[i - 1]) return false;
  }
  return true;
}

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition out;
  const Partition q = normalize(p);
  if (q.empty()) return out;
  for (int j = 1; j <= q.front(); ++j) {
    int count = 0;
    for (int part : q)
      if (part >= j) ++count;
    out.push_back(count);
  }
  return out;
}

Partition scale(const Partition& p, int n) {
  Partition out = p;
  for (int& part : out) part *= n;
  return normalize(out);
}

BigInt lr_coefficient(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
  const Partition lambda = normalize(lambda_in), mu = normalize(mu_in), nu = normalize(nu_in);
  if (!is_partition(lambda) || !is_partition(mu) || !is_partition(nu)) throw Error("not a partition");
  if (size_of(nu) != size_of(lambda) + size_of(mu)) return 0;
  if (lambda.size() > nu.size()) return 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > nu[i]) return 0;
  if (mu.empty()) return lambda == nu ? 1 : 0;

  // Cells of nu/lambda in reverse reading order: rows top to bottom, right to left.
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < static_cast<int>(nu.size()); ++i) {
    const int start = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    for (int j = nu[i] - 1; j >= start; --j) cells.push_back({i, j});
  }
  std::vector<std::vector<int>> filling(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) filling[i].assign(nu[i], 0);
  std::vector<int> used(mu.size() + 1, 0);

  BigInt total = 0;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      ++total;
      return;
    }
    const auto [i, j] = cells[k];
    int hi = static_cast<int>(mu.size());
    if (j + 1 < nu[i]) hi = std::min(hi, filling[i][j + 1]);  // rows weakly increase
    int lo = 1;
    if (i > 0 && j < nu[i - 1] && filling[i - 1][j] > 0) lo = filling[i - 1][j] + 1;  // columns strictly increase
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      ++used[v];
      filling[i][j] = v;
      place(k + 1);
      filling[i][j] = 0;
      --used[v];
    }
  };
  place(0);
  return total;
}

std::map<Partition, BigInt> lr_product(const Partition& lambda_in, const Partition& mu_in, int max_rows) {
  const Partition lambda = normalize(lambda_in), mu = normalize(mu_in);
  std::map<Partition, BigInt> out;
  const int total = size_of(lambda) + size_of(mu);
  const int width = (lambda.empty() ? 0 : lambda[0]) + (mu.empty() ? 0 : mu[0]);
  // nu ranges over partitions of |lambda| + |mu| containing lambda, in max_rows x width.
  Partition nu(max_rows, 0);
  std::function<void(int, int, int)> build = [&](int row, int remaining, int cap) {
    if (row == max_rows) {
      if (remaining != 0) return;
      const BigInt c = lr_coefficient(lambda, mu, nu);
      if (c != 0) out.emplace(normalize(nu), c);
      return;
    }
    const int floor = row < static_cast<int>(lambda.size()) ? lambda[row] : 0;
    for (int part = std::min(cap, remaining); part >= floor; --part) {
      nu[row] = part;
      build(row + 1, remaining - part, part);
    }
    nu[row] = 0;
  };
  build(0, total, width);
  return out;
}

BigInt gl_dimension(const Partition& lambda_in, int r) {
  const Partition lambda = normalize(lambda_in);
  if (static_cast<int>(lambda.size()) > r) return 0;
  const Partition conj = conjugate(lambda);
  BigInt num = 1, den = 1;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      num *= r + j - i;
      den *= (lambda[i] - j) + (conj[j] - i) - 1;
    }
  return num / den;
}

BigInt sl_invariant_count(const std::vector<Partition>& parts, int r) {
  if (parts.empty()) return 1;
  std::map<Partition, BigInt> current{{normalize(parts[0]), 1}};
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::map<Partition, BigInt> next;
    for (const auto& [nu, c] : current)
      for (const auto& [rho, m] : lr_product(nu, parts[k], r)) next[rho] += c * m;
    current = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [nu, c] : current) {
    const Partition full = [&] {
      Partition p = nu;
      p.resize(r, 0);
      return p;
    }();
    if (std::all_of(full.begin(), full.end(), [&](int part) { return part == full[0]; })) total += c;
  }
  return total;
}

std::vector<Partition> box_partitions(int r, int k) {
  std::vector<Partition> out;
  Partition p(r, 0);
  std::function<void(int, int)> build = [&](int row, int cap) {
    if (row == r) {
      out.push_back(normalize(p));
      return;
    }
    for (int part = 0; part <= cap; ++part) {
      p[row] = part;
      build(row + 1, part);
    }
    p[row] = 0;
  };
  build(0, k);
  return out;
}

std::vector<Partition> strict_partitions(int l) {
  std::vector<Partition> out;
  for (int mask = 0; mask < (1 << l); ++mask) {
    Partition p;
    for (int part = l; part >= 1; --part)
      if (mask & (1 << (part - 1))) p.push_back(part);
    out.push_back(p);
  }
  return out;
}

namespace {

// Images of e_1..e_m under w as signed 1-based indices; s_i swaps i, i+1 for
// i < m and, when signed, s_m negates e_m.
std::vector<int> signed_images(const WeylElement& w, int m, bool signed_last) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 1);
  const Word& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    for (int& v : img) {
      int a = std::abs(v);
      const int sign = v > 0 ? 1 : -1;
      if (signed_last && i == m - 1) {
        if (a == m) {
          v = -v;
          continue;
        }
      } else if (a == i + 1) {
        a = i + 2;
      } else if (a == i + 2) {
        a = i + 1;
      }
      v = sign * a;
    }
  }
  return img;
}

void require_shape(const CosetTable& table, char type, int rank, int crossed) {
  const Parabolic& p = table.parabolic();
  if (table.roots().type() != type || p.rank() != rank || p.crossed() != std::vector<int>{crossed})
    throw Error("coset table is not " + std::string(1, type) + std::to_string(rank) + "/{" +
                std::to_string(crossed + 1) + "}");
}

}  // namespace

Partition grassmannian_partition(const CosetTable& table, int index, int r, int k) {
  require_shape(table, 'A', r + k - 1, r - 1);
  const std::vector<int> img = signed_images(table.element(index), r + k, false);
  std::vector<int> chosen(img.begin(), img.begin() + r);
  std::sort(chosen.begin(), chosen.end());
  // Dimension partition mu_{r+1-i} = I_i - i; the class is its complement in the box.
  Partition lambda(r);
  for (int i = 0; i < r; ++i) lambda[i] = k - (chosen[i] - (i + 1));
  return normalize(lambda);
}

int grassmannian_index(const CosetTable& table, const Partition& lambda_in, int r, int k) {
  const Partition lambda = normalize(lambda_in);
  if (!is_partition(lambda) || static_cast<int>(lambda.size()) > r || (!lambda.empty() && lambda[0] > k))
    throw Error("partition " + format_int_list(lambda) + " is not in the " + std::to_string(r) + " x " +
                std::to_string(k) + " box");
  for (int x = 0; x < table.size(); ++x)
    if (grassmannian_partition(table, x, r, k) == lambda) return x;
  throw InternalError("Grassmannian bijection missed a partition");
}

Partition lagrangian_partition(const CosetTable& table, int index) {
  const int l = table.roots().rank();
  require_shape(table, 'C', l, l - 1);
  const std::vector<int> img = signed_images(table.element(index), l, true);
  std::vector<bool> in_dimension(l + 1, false);
  for (int v : img)
    if (v < 0) in_dimension[l + 1 + v] = true;
  Partition a;
  for (int part = l; part >= 1; --part)
    if (!in_dimension[part]) a.push_back(part);
  return a;
}

int lagrangian_index(const CosetTable& table, const Partition& a_in) {
  const Partition a = normalize(a_in);
  const int l = table.roots().rank();
  if (!is_strict_partition(a) || (!a.empty() && a[0] > l))
    throw Error("not a strict partition with parts at most " + std::to_string(l) + ": " + format_int_list(a));
  for (int x = 0; x < table.size(); ++x)
    if (lagrangian_partition(table, x) == a) return x;
  throw InternalError("Lagrangian bijection missed a strict partition");
}

FultonReport fulton_check(const Partition& lambda, const Partition& mu, const Partition& nu, int n_max) {
  FultonReport report;
  report.c = lr_coefficient(lambda, mu, nu);
  if (report.c != 1) return report;
  for (int n = 2; n <= n_max; ++n) {
    const BigInt c = lr_coefficient(scale(lambda, n), scale(mu, n), scale(nu, n));
    report.scaled.emplace_back(n, c);
    if (c != 1) report.violation = true;
  }
  return report;
}

}  // namespace flagcalc
