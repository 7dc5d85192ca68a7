#include "flagcalc/levi_rep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace flagcalc {

namespace {

// Names each connected component of a Cartan matrix ("A2xB3").
std::string classify(const RootSystem& rs) {
  const int n = rs.rank();
  if (n == 0) return "trivial";
  std::vector<int> comp(n, -1);
  std::vector<std::string> names;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> members{start};
    comp[start] = start;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && rs.cartan(members[k], j) != 0) {
          comp[j] = start;
          members.push_back(j);
        }
    char type = 'A';
    for (int i : members) {
      int degree = 0;
      for (int j : members) {
        if (i == j || rs.cartan(i, j) == 0) continue;
        ++degree;
        const int bond = rs.cartan(i, j) * rs.cartan(j, i);
        if (bond == 3) type = 'G';
        if (bond == 2 && type != 'G') {
          // The end of the double bond with the short root decides B versus C.
          const int short_end = rs.symmetrizer(i) < rs.symmetrizer(j) ? i : j;
          int short_degree = 0;
          for (int k : members)
            if (k != short_end && rs.cartan(short_end, k) != 0) ++short_degree;
          type = (members.size() == 2 || short_degree == 1) ? 'B' : 'C';
        }
      }
      if (degree == 3) type = 'D';
    }
    names.push_back(std::string(1, type) + std::to_string(members.size()));
  }
  std::string out;
  for (const auto& s : names) out += (out.empty() ? "" : "x") + s;
  return out;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

LeviSystem::LeviSystem(const Parabolic& parabolic) : nodes_(parabolic.levi_simple()) {
  IntMatrix sub;
  for (int i : nodes_) {
    sub.emplace_back();
    for (int j : nodes_) sub.back().push_back(parabolic.roots().cartan(i, j));
  }
  system_ = std::make_shared<const RootSystem>(RootSystem::from_cartan(sub, parabolic.label() + " Levi"));
  init();
}

LeviSystem::LeviSystem(std::shared_ptr<const RootSystem> system) : system_(std::move(system)) {
  nodes_.resize(system_->rank());
  std::iota(nodes_.begin(), nodes_.end(), 0);
  init();
}

void LeviSystem::init() {
  const RootSystem& rs = *system_;
  rank_ = rs.rank();
  label_ = classify(rs);

  // (omega_i, omega_j) = (A^{-1})_{ij} d_i, scaled to integers.
  std::vector<std::vector<Rational>> g(rank_, std::vector<Rational>(rank_));
  long long denom = 1;
  for (int j = 0; j < rank_; ++j) {
    const auto coords = rs.to_root_coords(rs.fundamental_weight(j));
    for (int i = 0; i < rank_; ++i) {
      g[i][j] = coords[i] * rs.symmetrizer(i);
      denom = lcm_ll(denom, static_cast<long long>(boost::multiprecision::denominator(g[i][j])));
    }
  }
  gram_.assign(rank_, std::vector<long long>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      const Rational scaled = g[i][j] * denom;
      gram_[i][j] = static_cast<long long>(boost::multiprecision::numerator(scaled));
    }

  for (const Root& beta : rs.positive_roots()) positive_weights_.push_back(rs.to_weight(beta).to_ints());

  w0_perm_.assign(rank_, 0);
  if (rank_ > 0) {
    WeylGroup group(system_);
    const WeylElement w0 = group.longest();
    for (int i = 0; i < rank_; ++i) {
      const auto image = (-w0.apply(rs.fundamental_weight(i))).to_ints();
      for (int j = 0; j < rank_; ++j)
        if (image[j] == 1) w0_perm_[i] = j;
    }
  }

  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (RootSystem::height(rs.positive_roots()[k]) > 1) kostant_order_.push_back(k);
}

LeviWeight LeviSystem::restrict(const Weight& ambient) const {
  LeviWeight out;
  for (int i : nodes_) {
    const Rational& c = ambient[i];
    if (boost::multiprecision::denominator(c) != 1) throw Error("weight is not integral on the Levi");
    out.push_back(static_cast<int>(boost::multiprecision::numerator(c)));
  }
  return out;
}

bool LeviSystem::is_dominant(const LeviWeight& lambda) const {
  return std::all_of(lambda.begin(), lambda.end(), [](int c) { return c >= 0; });
}

void LeviSystem::require_dominant(const LeviWeight& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_)
    throw Error("weight has " + std::to_string(lambda.size()) + " coordinates, expected " + std::to_string(rank_));
  if (!is_dominant(lambda)) throw Error("weight " + format_int_list(lambda) + " is not dominant");
}

long long LeviSystem::form(const LeviWeight& x, const LeviWeight& y) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += static_cast<long long>(x[i]) * gram_[i][j] * y[j];
  }
  return s;
}

int LeviSystem::to_dominant(LeviWeight& x) const {
  const RootSystem& rs = *system_;
  int steps = 0;
  while (true) {
    int i = 0;
    while (i < rank_ && x[i] >= 0) ++i;
    if (i == rank_) return steps;
    const int c = x[i];
    for (int j = 0; j < rank_; ++j) x[j] -= c * rs.cartan(j, i);
    ++steps;
  }
}

std::vector<LeviWeight> LeviSystem::orbit(const LeviWeight& dominant) const {
  const RootSystem& rs = *system_;
  std::set<LeviWeight> seen{dominant};
  std::vector<LeviWeight> out{dominant};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      if (out[k][i] <= 0) continue;
      LeviWeight y = out[k];
      const int c = y[i];
      for (int j = 0; j < rank_; ++j) y[j] -= c * rs.cartan(j, i);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

std::optional<Root> LeviSystem::dominance_gap(const LeviWeight& lambda, const LeviWeight& mu) const {
  LeviWeight diff(rank_);
  for (int i = 0; i < rank_; ++i) diff[i] = lambda[i] - mu[i];
  auto root = system_->to_root_lattice(diff);
  if (!root) return std::nullopt;
  for (int c : *root)
    if (c < 0) return std::nullopt;
  return root;
}

BigInt LeviSystem::weyl_dim(const LeviWeight& lambda) const {
  require_dominant(lambda);
  const RootSystem& rs = *system_;
  Rational dim = 1;
  Weight shifted = Weight::from_ints(lambda) + rs.rho();
  for (const Root& beta : rs.positive_roots())
    dim *= rs.coroot_pairing(shifted, beta) / rs.coroot_pairing(rs.rho(), beta);
  return boost::multiprecision::numerator(dim);
}

LeviWeight LeviSystem::dual(const LeviWeight& lambda) const {
  LeviWeight out(rank_);
  for (int i = 0; i < rank_; ++i) out[w0_perm_[i]] = lambda[i];
  return out;
}

DecompMap LeviSystem::dominant_multiplicities(const LeviWeight& lambda) const {
  require_dominant(lambda);
  {
    std::lock_guard lock(mutex_);
    if (auto it = dominant_cache_.find(lambda); it != dominant_cache_.end()) return it->second;
  }
  const RootSystem& rs = *system_;

  // Dominant weights below lambda, grouped by depth (height of lambda - mu).
  std::map<int, std::vector<LeviWeight>> by_depth;
  std::set<LeviWeight> seen{lambda};
  std::vector<std::pair<LeviWeight, int>> queue{{lambda, 0}};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto [mu, depth] = queue[k];
    by_depth[depth].push_back(mu);
    for (std::size_t r = 0; r < positive_weights_.size(); ++r) {
      LeviWeight next = mu;
      for (int i = 0; i < rank_; ++i) next[i] -= positive_weights_[r][i];
      if (!is_dominant(next) || !seen.insert(next).second) continue;
      queue.emplace_back(std::move(next), depth + RootSystem::height(rs.positive_roots()[r]));
    }
  }

  LeviWeight top = lambda;
  for (int i = 0; i < rank_; ++i) top[i] += 1;
  const long long top_norm = form(top, top);

  // Every dominant weight below lambda occurs, so a beta-string through mu
  // leaves V(lambda) exactly when its dominant conjugate is not yet recorded.
  DecompMap mult;
  for (const auto& [depth, weights] : by_depth) {
    for (const LeviWeight& mu : weights) {
      if (depth == 0) {
        mult[mu] = 1;
        continue;
      }
      BigInt sum = 0;
      for (const LeviWeight& beta : positive_weights_) {
        LeviWeight x = mu;
        while (true) {
          for (int i = 0; i < rank_; ++i) x[i] += beta[i];
          LeviWeight d = x;
          to_dominant(d);
          auto it = mult.find(d);
          if (it == mult.end()) break;
          sum += it->second * form(x, beta);
        }
      }
      LeviWeight shifted = mu;
      for (int i = 0; i < rank_; ++i) shifted[i] += 1;
      const long long gap = top_norm - form(shifted, shifted);
      if (gap <= 0) throw InternalError("Freudenthal denominator vanished");
      BigInt q, r;
      boost::multiprecision::divide_qr(BigInt(2) * sum, BigInt(gap), q, r);
      if (r != 0) throw InternalError("Freudenthal multiplicity is not an integer");
      if (q != 0) mult[mu] = q;
    }
  }
  std::lock_guard lock(mutex_);
  return dominant_cache_.try_emplace(lambda, std::move(mult)).first->second;
}

DecompMap LeviSystem::weight_multiplicities(const LeviWeight& lambda) const {
  DecompMap out;
  for (const auto& [mu, m] : dominant_multiplicities(lambda))
    for (auto& x : orbit(mu)) out.emplace(std::move(x), m);
  return out;
}

DecompMap LeviSystem::tensor_decompose(const LeviWeight& lambda, const LeviWeight& mu) const {
  require_dominant(lambda);
  require_dominant(mu);
  // Iterate over the weights of the smaller factor.
  const bool swap = weyl_dim(lambda) > weyl_dim(mu);
  const LeviWeight& small = swap ? mu : lambda;
  const LeviWeight& big = swap ? lambda : mu;
  DecompMap out;
  for (const auto& [nu, m] : weight_multiplicities(small)) {
    LeviWeight x = big;
    for (int i = 0; i < rank_; ++i) x[i] += nu[i] + 1;
    const int steps = to_dominant(x);
    if (std::any_of(x.begin(), x.end(), [](int c) { return c == 0; })) continue;
    for (int i = 0; i < rank_; ++i) x[i] -= 1;
    auto& slot = out[x];
    if (steps % 2 == 0)
      slot += m;
    else
      slot -= m;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [nu, m] : out)
    if (m < 0) throw InternalError("negative tensor multiplicity");
  return out;
}

BigInt LeviSystem::tensor_multiplicity(const LeviWeight& lambda, const LeviWeight& mu, const LeviWeight& nu) const {
  const DecompMap d = tensor_decompose(lambda, mu);
  auto it = d.find(nu);
  return it == d.end() ? BigInt(0) : it->second;
}

BigInt LeviSystem::kostant_partition(const Root& v) const {
  if (std::any_of(v.begin(), v.end(), [](int c) { return c < 0; })) return 0;
  const RootSystem& rs = *system_;
  std::function<BigInt(const Root&, int)> count = [&](const Root& x, int k) -> BigInt {
    if (k == static_cast<int>(kostant_order_.size())) return 1;  // simple roots absorb the rest
    const std::pair<Root, int> key{x, k};
    {
      std::lock_guard lock(mutex_);
      if (auto it = kostant_cache_.find(key); it != kostant_cache_.end()) return it->second;
    }
    const Root& beta = rs.positive_roots()[kostant_order_[k]];
    BigInt total = 0;
    Root y = x;
    while (std::all_of(y.begin(), y.end(), [](int c) { return c >= 0; })) {
      total += count(y, k + 1);
      for (int i = 0; i < rank_; ++i) y[i] -= beta[i];
    }
    std::lock_guard lock(mutex_);
    kostant_cache_.emplace(key, total);
    return total;
  };
  return count(v, 0);
}

BigInt LeviSystem::steinberg_multiplicity(const LeviWeight& lambda, const LeviWeight& mu, const LeviWeight& nu) const {
  require_dominant(lambda);
  require_dominant(mu);
  require_dominant(nu);
  if (rank_ == 0) return 1;
  const RootSystem& rs = *system_;
  WeylGroup group(system_);
  const auto elements = group.enumerate();
  const Weight a = Weight::from_ints(lambda) + rs.rho();
  const Weight b = Weight::from_ints(mu) + rs.rho();
  const Weight shift = Weight::from_ints(nu) + Rational(2) * rs.rho();
  std::vector<std::pair<std::vector<int>, int>> ua, vb;
  for (const auto& w : elements) {
    ua.emplace_back(w.apply(a).to_ints(), w.length() % 2 == 0 ? 1 : -1);
    vb.emplace_back(w.apply(b).to_ints(), w.length() % 2 == 0 ? 1 : -1);
  }
  const auto target = shift.to_ints();
  BigInt total = 0;
  for (const auto& [x, sx] : ua)
    for (const auto& [y, sy] : vb) {
      LeviWeight d(rank_);
      for (int i = 0; i < rank_; ++i) d[i] = x[i] + y[i] - target[i];
      auto root = rs.to_root_lattice(d);
      if (!root) continue;
      const BigInt p = kostant_partition(*root);
      if (sx * sy > 0)
        total += p;
      else
        total -= p;
    }
  return total;
}

BigInt LeviSystem::invariant_dimension(const std::vector<LeviWeight>& weights) const {
  for (const auto& w : weights) require_dominant(w);
  if (rank_ == 0 || weights.empty()) return 1;
  const int s = static_cast<int>(weights.size());
  if (s == 1) return std::all_of(weights[0].begin(), weights[0].end(), [](int c) { return c == 0; }) ? 1 : 0;

  // V(nu) x V(l_{k+1}) x ... x V(l_s) has invariants only if nu* <= l_{k+1} + ... + l_s.
  std::vector<LeviWeight> tail(s + 1, LeviWeight(rank_));
  for (int k = s - 1; k >= 0; --k)
    for (int i = 0; i < rank_; ++i) tail[k][i] = tail[k + 1][i] + weights[k][i];

  DecompMap current{{weights[0], 1}};
  for (int k = 1; k + 1 < s && !current.empty(); ++k) {
    DecompMap next;
    for (const auto& [nu, c] : current)
      for (const auto& [rho, m] : tensor_decompose(nu, weights[k]))
        if (dominance_gap(tail[k + 1], dual(rho))) next[rho] += c * m;
    current = std::move(next);
  }
  auto it = current.find(dual(weights[s - 1]));
  return it == current.end() ? BigInt(0) : it->second;
}

BigInt hom_dimension(const DeformedCalculus& deformed, const LeviSystem& levi, std::span<const int> classes, int n) {
  if (n < 1) throw Error("n must be positive");
  if (!deformed.central_condition(classes)) return 0;
  std::vector<LeviWeight> weights;
  for (int w : classes) weights.push_back(levi.restrict(Rational(n) * deformed.chi(w)));
  return levi.invariant_dimension(weights);
}

}  // namespace flagcalc
