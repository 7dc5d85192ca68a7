#include "flagcalc/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace flagcalc {

namespace {

using Mat = std::vector<int>;

Mat identity_mat(int n) {
  Mat m(n * n);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Mat matmul(const Mat& a, const Mat& b, int n) {
  Mat c(n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

std::vector<int> matvec(const Mat& m, const std::vector<int>& x, int n) {
  std::vector<int> y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += m[i * n + j] * x[j];
  return y;
}

Weight matvec(const Mat& m, const Weight& x, int n) {
  Weight y = Weight::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i * n + j] != 0) y[i] += m[i * n + j] * x[j];
  return y;
}

bool column_negative(const Mat& m, int col, int n) {
  for (int i = 0; i < n; ++i) {
    if (m[i * n + col] < 0) return true;
    if (m[i * n + col] > 0) return false;
  }
  return false;
}

}  // namespace

Root WeylElement::apply(const Root& root) const { return matvec(root_, root, rank_); }
Root WeylElement::apply_inverse(const Root& root) const { return matvec(inverse_, root, rank_); }
Weight WeylElement::apply(const Weight& weight) const { return matvec(weight_, weight, rank_); }
Weight WeylElement::apply_inverse(const Weight& weight) const {
  return matvec(weight_inverse_, weight, rank_);
}

std::size_t WeylElement::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (int x : root_) {
    h ^= static_cast<std::size_t>(x + 1024);
    h *= 1099511628211ULL;
  }
  return h;
}

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> system) : system_(std::move(system)) {
  const int n = system_->rank();
  for (int i = 0; i < n; ++i) {
    Mat s = identity_mat(n);
    for (int c = 0; c < n; ++c) s[i * n + c] -= system_->cartan(i, c);
    simple_root_mats_.push_back(std::move(s));
    Mat t = identity_mat(n);
    for (int r = 0; r < n; ++r) t[r * n + i] -= system_->cartan(r, i);
    simple_weight_mats_.push_back(std::move(t));
  }
}

int WeylGroup::count_inversions(const std::vector<int>& root_action) const {
  const int n = system_->rank();
  int count = 0;
  for (const Root& beta : system_->positive_roots()) {
    // Images of roots are roots, so the sign of any nonzero coordinate decides.
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) c += root_action[i * n + j] * beta[j];
      if (c != 0) {
        if (c < 0) ++count;
        break;
      }
    }
  }
  return count;
}

Word WeylGroup::least_reduced_word(std::vector<int> inverse) const {
  const int n = system_->rank();
  Word word;
  while (true) {
    int descent = -1;
    for (int i = 0; i < n && descent < 0; ++i)
      if (column_negative(inverse, i, n)) descent = i;
    if (descent < 0) break;
    word.push_back(descent);
    inverse = matmul(inverse, simple_root_mats_[descent], n);
  }
  return word;
}

WeylElement WeylGroup::assemble(Mat root, Mat inverse, Mat weight, Mat weight_inverse) const {
  WeylElement w;
  w.rank_ = system_->rank();
  w.length_ = count_inversions(root);
  w.word_ = least_reduced_word(inverse);
  if (static_cast<int>(w.word_.size()) != w.length_)
    throw InternalError("reduced word length disagrees with inversion count");
  w.root_ = std::move(root);
  w.inverse_ = std::move(inverse);
  w.weight_ = std::move(weight);
  w.weight_inverse_ = std::move(weight_inverse);
  return w;
}

WeylElement WeylGroup::identity() const {
  const int n = system_->rank();
  return assemble(identity_mat(n), identity_mat(n), identity_mat(n), identity_mat(n));
}

WeylElement WeylGroup::simple_reflection(int i) const {
  return assemble(simple_root_mats_.at(i), simple_root_mats_[i], simple_weight_mats_[i],
                  simple_weight_mats_[i]);
}

WeylElement WeylGroup::from_word(const Word& word) const {
  const int n = system_->rank();
  Mat root = identity_mat(n), inverse = identity_mat(n);
  Mat weight = identity_mat(n), weight_inverse = identity_mat(n);
  for (int i : word) {
    if (i < 0 || i >= n) throw Error("word letter " + std::to_string(i + 1) + " out of range for " + system_->name());
    root = matmul(root, simple_root_mats_[i], n);
    inverse = matmul(simple_root_mats_[i], inverse, n);
    weight = matmul(weight, simple_weight_mats_[i], n);
    weight_inverse = matmul(simple_weight_mats_[i], weight_inverse, n);
  }
  return assemble(std::move(root), std::move(inverse), std::move(weight), std::move(weight_inverse));
}

WeylElement WeylGroup::reflection(const Root& beta) const {
  const int n = system_->rank();
  if (!system_->positive_root_index(beta)) throw Error("reflection requires a positive root");
  const int norm = system_->inner_product(beta, beta);
  const Weight beta_weight = system_->to_weight(beta);
  Mat root(n * n), weight(n * n);
  for (int j = 0; j < n; ++j) {
    const int c = system_->coroot_pairing(system_->unit_root(j), beta);
    for (int i = 0; i < n; ++i) root[i * n + j] = (i == j ? 1 : 0) - c * beta[i];
    // <omega_j, beta^vee> = 2 beta_j d_j / (beta, beta)
    const int num = 2 * beta[j] * system_->symmetrizer(j);
    if (num % norm != 0) throw InternalError("non-integral fundamental coweight pairing");
    const int d = num / norm;
    for (int i = 0; i < n; ++i)
      weight[i * n + j] = (i == j ? 1 : 0) - d * static_cast<int>(numerator(beta_weight[i]));
  }
  return assemble(root, root, weight, weight);
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  const int n = system_->rank();
  return assemble(matmul(a.root_, b.root_, n), matmul(b.inverse_, a.inverse_, n),
                  matmul(a.weight_, b.weight_, n), matmul(b.weight_inverse_, a.weight_inverse_, n));
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  return assemble(w.inverse_, w.root_, w.weight_inverse_, w.weight_);
}

WeylElement WeylGroup::left_multiply(int i, const WeylElement& w) const {
  const int n = system_->rank();
  return assemble(matmul(simple_root_mats_[i], w.root_, n), matmul(w.inverse_, simple_root_mats_[i], n),
                  matmul(simple_weight_mats_[i], w.weight_, n),
                  matmul(w.weight_inverse_, simple_weight_mats_[i], n));
}

WeylElement WeylGroup::right_multiply(const WeylElement& w, int i) const {
  const int n = system_->rank();
  return assemble(matmul(w.root_, simple_root_mats_[i], n), matmul(simple_root_mats_[i], w.inverse_, n),
                  matmul(w.weight_, simple_weight_mats_[i], n),
                  matmul(simple_weight_mats_[i], w.weight_inverse_, n));
}

bool WeylGroup::is_left_descent(const WeylElement& w, int i) const {
  return column_negative(w.inverse_, i, system_->rank());
}

bool WeylGroup::is_right_descent(const WeylElement& w, int i) const {
  return column_negative(w.root_, i, system_->rank());
}

std::vector<int> WeylGroup::inversion_set(const WeylElement& w) const {
  std::vector<int> out;
  const auto& pos = system_->positive_roots();
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (RootSystem::is_negative(w.apply(pos[k]))) out.push_back(static_cast<int>(k));
  return out;
}

WeylElement WeylGroup::longest(const std::vector<int>& nodes) const {
  WeylElement w = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : nodes) {
      if (!is_left_descent(w, i)) {
        w = left_multiply(i, w);
        grew = true;
      }
    }
  }
  return w;
}

WeylElement WeylGroup::longest() const {
  std::vector<int> all(system_->rank());
  for (int i = 0; i < system_->rank(); ++i) all[i] = i;
  return longest(all);
}

std::vector<WeylElement> WeylGroup::enumerate(const std::vector<int>& nodes) const {
  std::vector<WeylElement> out{identity()};
  std::unordered_set<WeylElement, WeylElementHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i : nodes) {
      if (is_left_descent(out[head], i)) continue;
      WeylElement next = left_multiply(i, out[head]);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<WeylElement> WeylGroup::enumerate() const {
  std::vector<int> all(system_->rank());
  for (int i = 0; i < system_->rank(); ++i) all[i] = i;
  return enumerate(all);
}

long long classical_weyl_order(char type, int rank) {
  long long fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= i;
  switch (type) {
    case 'A': return fact * (rank + 1);
    case 'B':
    case 'C': return fact << rank;
    case 'D': return fact << (rank - 1);
    case 'G': return 12;
    default: throw Error("no classical order formula for this type");
  }
}

bool is_minimal_coset_rep(const Parabolic& parabolic, const WeylElement& w) {
  for (int i : parabolic.levi_simple())
    if (!RootSystem::is_positive(w.apply(parabolic.roots().unit_root(i)))) return false;
  return true;
}

WeylElement minimal_coset_rep(const WeylGroup& group, const Parabolic& parabolic, WeylElement w) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int i : parabolic.levi_simple()) {
      if (group.is_right_descent(w, i)) {
        w = group.right_multiply(w, i);
        shrunk = true;
      }
    }
  }
  return w;
}

WeylElement dual_rep(const WeylGroup& group, const Parabolic& parabolic, const WeylElement& w) {
  if (!is_minimal_coset_rep(parabolic, w))
    throw Error("element " + format_word(w.word()) + " is not a minimal coset representative");
  WeylElement d = group.multiply(group.multiply(group.longest(), w), group.longest(parabolic.levi_simple()));
  return minimal_coset_rep(group, parabolic, std::move(d));
}

CosetTable::CosetTable(std::shared_ptr<const Parabolic> parabolic)
    : parabolic_(std::move(parabolic)), group_(parabolic_->roots_ptr()) {}

std::shared_ptr<const CosetTable> CosetTable::build(std::shared_ptr<const Parabolic> parabolic) {
  std::shared_ptr<CosetTable> t(new CosetTable(std::move(parabolic)));
  const Parabolic& p = *t->parabolic_;
  const WeylGroup& g = t->group_;
  const int n = p.rank();

  // Suffixes of minimal representatives are minimal representatives, so W^P
  // is reached from the identity by length-increasing left multiplications.
  std::vector<WeylElement> found{g.identity()};
  std::unordered_set<WeylElement, WeylElementHash> seen{found.front()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      if (g.is_left_descent(found[head], i)) continue;
      WeylElement next = g.left_multiply(i, found[head]);
      if (!is_minimal_coset_rep(p, next)) continue;
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.word() < b.word();
  });
  t->elements_ = std::move(found);
  for (int k = 0; k < t->size(); ++k) t->index_.emplace(t->elements_[k], k);

  t->covers_into_.assign(t->size(), {});
  const auto& pos = p.roots().positive_roots();
  std::vector<WeylElement> reflections;
  reflections.reserve(pos.size());
  for (const Root& beta : pos) reflections.push_back(g.reflection(beta));
  for (int v = 0; v < t->size(); ++v) {
    for (std::size_t b = 0; b < pos.size(); ++b) {
      WeylElement w = g.multiply(reflections[b], t->elements_[v]);
      if (w.length() != t->elements_[v].length() + 1) continue;
      auto it = t->index_.find(w);
      if (it == t->index_.end()) continue;
      t->covers_into_[it->second].push_back(static_cast<int>(t->covers_.size()));
      t->covers_.push_back(Cover{v, it->second, static_cast<int>(b)});
    }
  }

  t->longest_ = g.longest();
  t->longest_levi_ = g.longest(p.levi_simple());
  t->dual_.resize(t->size());
  for (int k = 0; k < t->size(); ++k) {
    WeylElement d = g.multiply(g.multiply(t->longest_, t->elements_[k]), t->longest_levi_);
    auto it = t->index_.find(d);
    if (it == t->index_.end()) throw InternalError("w0 w w0^P left W^P");
    t->dual_[k] = it->second;
  }
  return t;
}

std::optional<int> CosetTable::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CosetTable::index_of_word(const Word& word) const {
  const WeylElement w = group_.from_word(word);
  auto idx = index_of(w);
  if (!idx) {
    throw Error("word \"" + format_word(word) + "\" does not name an element of W^P for " + parabolic_->label());
  }
  return *idx;
}

}  // namespace flagcalc
