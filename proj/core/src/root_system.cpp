#include "flagcalc/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace flagcalc {

namespace {

IntMatrix gram(const std::vector<std::vector<int>>& vectors) {
  const auto n = vectors.size();
  IntMatrix g(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g[i][j] = std::inner_product(vectors[i].begin(), vectors[i].end(), vectors[j].begin(), 0);
  return g;
}

// Simple roots of the classical types in the usual epsilon coordinates.
std::vector<std::vector<int>> classical_simple_roots(char type, int rank) {
  const int dim = type == 'A' ? rank + 1 : rank;
  std::vector<std::vector<int>> roots(rank, std::vector<int>(dim));
  for (int i = 0; i + 1 < rank; ++i) {
    roots[i][i] = 1;
    roots[i][i + 1] = -1;
  }
  auto& last = roots[rank - 1];
  switch (type) {
    case 'A':
      last[rank - 1] = 1;
      last[rank] = -1;
      break;
    case 'B':
      last[rank - 1] = 1;
      break;
    case 'C':
      last[rank - 1] = 2;
      break;
    case 'D':
      last[rank - 2] = 1;
      last[rank - 1] = 1;
      break;
  }
  return roots;
}

IntMatrix cartan_from_gram(const IntMatrix& g) {
  const auto n = g.size();
  IntMatrix a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = 2 * g[i][j] / g[i][i];
  return a;
}

std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

Weight Weight::from_ints(const std::vector<int>& coords) {
  std::vector<Rational> c(coords.begin(), coords.end());
  return Weight(std::move(c));
}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& x) { return denominator(x) == 1; });
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x >= 0; });
}

std::vector<int> Weight::to_ints() const {
  std::vector<int> out;
  out.reserve(coords_.size());
  for (const auto& x : coords_) {
    if (denominator(x) != 1) throw InternalError("weight is not integral: " + format_weight(*this));
    out.push_back(static_cast<int>(numerator(x)));
  }
  return out;
}

Weight& Weight::operator+=(const Weight& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& scalar) {
  for (auto& x : coords_) x *= scalar;
  return *this;
}

std::string format_weight(const Weight& weight) {
  std::string out;
  for (int i = 0; i < weight.rank(); ++i) {
    if (i) out += ',';
    out += to_string(weight[i]);
  }
  return out;
}

RootSystem RootSystem::build(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  auto supported = [&] {
    switch (type) {
      case 'A': return rank >= 1 && rank <= 7;
      case 'B':
      case 'C': return rank >= 2 && rank <= 5;
      case 'D': return rank >= 4 && rank <= 5;
      case 'G': return rank == 2;
      default: return false;
    }
  };
  if (!supported()) {
    throw Error("unsupported root system " + std::string(1, type) + std::to_string(rank) +
                " (supported: A1-A7, B2-B5, C2-C5, D4-D5, G2)");
  }
  IntMatrix g;
  if (type == 'G') {
    // alpha_1 short, alpha_2 long.
    g = {{2, -3}, {-3, 6}};
  } else {
    g = gram(classical_simple_roots(type, rank));
  }
  RootSystem rs;
  rs.name_ = std::string(1, type) + std::to_string(rank);
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_from_gram(g);
  rs.finish();
  return rs;
}

std::vector<std::vector<int>> RootSystem::ambient_simple_roots() const {
  if (type_ == 'A' || type_ == 'B' || type_ == 'C' || type_ == 'D') return classical_simple_roots(type_, rank_);
  return {};
}

RootSystem RootSystem::parse(std::string_view name) {
  if (name.size() < 2) throw Error("malformed group name: \"" + std::string(name) + "\"");
  int rank = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("malformed group name: \"" + std::string(name) + "\"");
    rank = rank * 10 + (c - '0');
  }
  return build(name[0], rank);
}

RootSystem RootSystem::from_cartan(const IntMatrix& cartan, std::string label) {
  RootSystem rs;
  rs.name_ = std::move(label);
  rs.rank_ = static_cast<int>(cartan.size());
  rs.cartan_ = cartan;
  rs.finish();
  return rs;
}

void RootSystem::finish() {
  const int n = rank_;
  for (int i = 0; i < n; ++i) {
    if (cartan_[i][i] != 2) throw Error("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && cartan_[i][j] > 0) throw Error("Cartan matrix off-diagonal entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0)) throw Error("Cartan matrix is not symmetrizable");
    }
  }

  // Symmetrizer: d_i a_ij = d_j a_ji, solved per connected component.
  std::vector<Rational> d(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    std::vector<int> component{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_[i][j] == 0) continue;
        Rational dj = d[i] * cartan_[i][j] / cartan_[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
          component.push_back(j);
        } else if (d[j] != dj) {
          throw Error("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational smallest = d[start];
    for (int j : component) smallest = std::min(smallest, d[j]);
    for (int j : component) d[j] /= smallest;
  }
  symmetrizer_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (denominator(d[i]) != 1) throw Error("unexpected root length ratio");
    symmetrizer_[i] = static_cast<int>(numerator(d[i]));
  }
  form_.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_[i][j] = symmetrizer_[i] * cartan_[i][j];

  inverse_cartan_ = invert(cartan_);

  // Positive roots by height, using root strings through each simple root.
  std::set<Root> known;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    layer.push_back(unit_root(i));
    known.insert(layer.back());
  }
  positive_.clear();
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    positive_.insert(positive_.end(), layer.begin(), layer.end());
    if (positive_.size() > 2000) throw Error("Cartan matrix is not of finite type");
    std::set<Root> next;
    for (const Root& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[i][j];
        if (p - pairing > 0) {
          Root up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  simple_index_.resize(n);
  for (int i = 0; i < n; ++i) simple_index_[i] = *positive_root_index(unit_root(i));
  highest_ = static_cast<int>(positive_.size()) - 1;
  rho_ = Weight(std::vector<Rational>(n, Rational(1)));
}

std::optional<int> RootSystem::positive_root_index(const Root& root) const {
  auto cmp = [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  };
  auto it = std::lower_bound(positive_.begin(), positive_.end(), root, cmp);
  if (it == positive_.end() || *it != root) return std::nullopt;
  return static_cast<int>(it - positive_.begin());
}

bool RootSystem::is_root(const Root& root) const {
  if (is_positive(root)) return positive_root_index(root).has_value();
  Root neg(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) neg[i] = -root[i];
  return is_positive(neg) && positive_root_index(neg).has_value();
}

std::optional<int> RootSystem::simple_label(const Root& root) const {
  int label = -1;
  for (int i = 0; i < rank_; ++i) {
    if (root[i] == 0) continue;
    if (root[i] != 1 || label >= 0) return std::nullopt;
    label = i;
  }
  if (label < 0) return std::nullopt;
  return label;
}

Root RootSystem::unit_root(int i) const {
  Root r(rank_);
  r[i] = 1;
  return r;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w = Weight::zero(rank_);
  w[i] = 1;
  return w;
}

Weight RootSystem::to_weight(const Root& root) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    int c = 0;
    for (int j = 0; j < rank_; ++j) c += root[j] * cartan_[i][j];
    w[i] = c;
  }
  return w;
}

std::vector<Rational> RootSystem::to_root_coords(const Weight& weight) const {
  std::vector<Rational> r(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) r[i] += inverse_cartan_[i][j] * weight[j];
  return r;
}

std::optional<Root> RootSystem::to_root_lattice(const std::vector<int>& fundamental_coords) const {
  Root out(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational r = 0;
    for (int j = 0; j < rank_; ++j) r += inverse_cartan_[i][j] * fundamental_coords[j];
    if (denominator(r) != 1) return std::nullopt;
    out[i] = static_cast<int>(numerator(r));
  }
  return out;
}

int RootSystem::inner_product(const Root& x, const Root& y) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += x[i] * form_[i][j] * y[j];
  }
  return s;
}

Rational RootSystem::inner_product(const Weight& x, const Weight& y) const {
  const auto r = to_root_coords(x);
  Rational s = 0;
  for (int j = 0; j < rank_; ++j) s += r[j] * symmetrizer_[j] * y[j];
  return s;
}

int RootSystem::coroot_pairing(const Root& x, const Root& beta) const {
  const int num = 2 * inner_product(x, beta);
  const int den = inner_product(beta, beta);
  if (num % den != 0) throw InternalError("non-integral coroot pairing");
  return num / den;
}

Rational RootSystem::coroot_pairing(const Weight& x, const Root& beta) const {
  Rational num = 0;
  for (int j = 0; j < rank_; ++j) num += beta[j] * symmetrizer_[j] * x[j];
  return 2 * num / inner_product(beta, beta);
}

Root RootSystem::reflect(const Root& x, const Root& beta) const {
  const int c = coroot_pairing(x, beta);
  Root out = x;
  for (int i = 0; i < rank_; ++i) out[i] -= c * beta[i];
  return out;
}

Weight RootSystem::reflect(const Weight& x, const Root& beta) const {
  return x - coroot_pairing(x, beta) * to_weight(beta);
}

Weight RootSystem::simple_reflect(const Weight& x, int i) const {
  Weight out = x;
  const Rational c = x[i];
  for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[j][i];
  return out;
}

bool RootSystem::is_positive(const Root& root) {
  bool any = false;
  for (int c : root) {
    if (c < 0) return false;
    if (c > 0) any = true;
  }
  return any;
}

bool RootSystem::is_negative(const Root& root) {
  bool any = false;
  for (int c : root) {
    if (c > 0) return false;
    if (c < 0) any = true;
  }
  return any;
}

int RootSystem::height(const Root& root) { return std::accumulate(root.begin(), root.end(), 0); }

Rational eval_at_x(const RootSystem& system, const Weight& weight, int j) {
  if (j < 0 || j >= system.rank()) throw Error("node index out of range");
  return system.to_root_coords(weight)[j];
}

Weight rho_levi(const RootSystem& system, const std::vector<int>& levi_simple) {
  std::vector<bool> in(system.rank(), false);
  for (int i : levi_simple) in.at(i) = true;
  Root sum(system.rank());
  for (const Root& beta : system.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < system.rank(); ++i)
      if (beta[i] != 0 && !in[i]) inside = false;
    if (!inside) continue;
    for (int i = 0; i < system.rank(); ++i) sum[i] += beta[i];
  }
  return Rational(1, 2) * system.to_weight(sum);
}

Parabolic Parabolic::from_levi(std::shared_ptr<const RootSystem> system, std::vector<int> levi_simple) {
  Parabolic p;
  const int n = system->rank();
  p.system_ = std::move(system);
  p.in_levi_.assign(n, false);
  for (int i : levi_simple) {
    if (i < 0 || i >= n) throw Error("Levi node out of range");
    p.in_levi_[i] = true;
  }
  for (int i = 0; i < n; ++i) (p.in_levi_[i] ? p.levi_simple_ : p.crossed_).push_back(i);

  const auto& pos = p.system_->positive_roots();
  p.is_levi_root_.assign(pos.size(), false);
  for (std::size_t k = 0; k < pos.size(); ++k) {
    bool inside = true;
    for (int i = 0; i < n; ++i)
      if (pos[k][i] != 0 && !p.in_levi_[i]) inside = false;
    if (inside) {
      p.is_levi_root_[k] = true;
      p.levi_positive_.push_back(static_cast<int>(k));
    }
  }
  p.rho_levi_ = flagcalc::rho_levi(*p.system_, p.levi_simple_);
  p.dim_ = static_cast<int>(pos.size() - p.levi_positive_.size());
  p.m_o_ = p.eval_at_xP(p.system_->highest_root());
  return p;
}

Parabolic Parabolic::from_crossed(std::shared_ptr<const RootSystem> system, std::vector<int> crossed) {
  const int n = system->rank();
  std::vector<bool> cross(n, false);
  for (int i : crossed) {
    if (i < 0 || i >= n) throw Error("crossed node " + std::to_string(i + 1) + " out of range for " + system->name());
    cross[i] = true;
  }
  std::vector<int> levi;
  for (int i = 0; i < n; ++i)
    if (!cross[i]) levi.push_back(i);
  return from_levi(std::move(system), std::move(levi));
}

Rational Parabolic::eval_at_xP(const Weight& weight) const {
  const auto r = system_->to_root_coords(weight);
  Rational s = 0;
  for (int k : crossed_) s += r[k];
  return s;
}

int Parabolic::eval_at_xP(const Root& root) const {
  int s = 0;
  for (int k : crossed_) s += root[k];
  return s;
}

std::string Parabolic::label() const {
  std::vector<int> one_based;
  for (int k : crossed_) one_based.push_back(k + 1);
  return system_->name() + "/{" + format_int_list(one_based) + "}";
}

}  // namespace flagcalc
