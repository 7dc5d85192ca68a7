#include "flagcalc/polynomial.hpp"

#include <vector>

namespace flagcalc {

namespace {

// binom(e, k) * c^k for 0 <= k <= e <= max_e.
std::vector<std::vector<BigInt>> expansion_table(int max_e, int c) {
  std::vector<std::vector<BigInt>> t(max_e + 1);
  for (int e = 0; e <= max_e; ++e) {
    t[e].resize(e + 1);
    BigInt binom = 1;
    BigInt power = 1;
    for (int k = 0; k <= e; ++k) {
      t[e][k] = binom * power;
      power *= c;
      binom = binom * (e - k) / (k + 1);
    }
  }
  return t;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw Error("MultiPoly supports at most 8 variables");
}

MultiPoly MultiPoly::constant(int nvars, const BigInt& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(0, c);
  return p;
}

MultiPoly MultiPoly::linear(const std::vector<int>& coeffs) {
  MultiPoly p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.emplace(Key{1} << (8 * i), BigInt(coeffs[i]));
  return p;
}

MultiPoly::Key MultiPoly::pack(const std::vector<int>& exponents) {
  Key key = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw Error("exponent out of range");
    key |= static_cast<Key>(exponents[i]) << (8 * i);
  }
  return key;
}

int MultiPoly::total_degree(Key key) {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += exponent(key, i);
  return d;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, total_degree(key));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [key, c] : terms_) {
    const int k = total_degree(key);
    if (d >= 0 && k != d) return false;
    d = k;
  }
  return true;
}

BigInt MultiPoly::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(pack(exponents));
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(Key key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.nvars_, b.nvars_));
  out.terms_.reserve(a.terms_.size() * 2 + b.terms_.size() * 2);
  BigInt scratch;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      boost::multiprecision::multiply(scratch, ca, cb);
      // Byte-wise exponent addition cannot carry: degrees stay far below 256.
      out.terms_[ka + kb] += scratch;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const { return terms_ == other.terms_; }

MultiPoly MultiPoly::divexact(const BigInt& divisor) const {
  MultiPoly out(nvars_);
  out.terms_.reserve(terms_.size());
  BigInt q, r;
  for (const auto& [key, c] : terms_) {
    boost::multiprecision::divide_qr(c, divisor, q, r);
    if (r != 0) throw InternalError("polynomial coefficient not divisible by " + divisor.str());
    out.terms_.emplace(key, q);
  }
  return out;
}

MultiPoly MultiPoly::reflect(const RootSystem& system, int i) const {
  // f - (f - s_i f) = s_i f; reuse the expansion in divided_difference's style.
  MultiPoly out(nvars_);
  const int n = system.rank();
  std::vector<int> nbrs;
  std::vector<int> weights;
  for (int j = 0; j < n; ++j)
    if (j != i && system.cartan(i, j) != 0) {
      nbrs.push_back(j);
      weights.push_back(-system.cartan(i, j));
    }
  const int max_e = std::max(degree(), 0);
  std::vector<std::vector<std::vector<BigInt>>> tables;
  for (int c : weights) tables.push_back(expansion_table(max_e, c));

  std::vector<int> ks(nbrs.size());
  BigInt scratch;
  BigInt factor;
  for (const auto& [key, c] : terms_) {
    const int ei = exponent(key, i);
    std::fill(ks.begin(), ks.end(), 0);
    while (true) {
      factor = (ei % 2 == 0) ? 1 : -1;
      Key k2 = key;
      int raise = 0;
      for (std::size_t t = 0; t < nbrs.size(); ++t) {
        const int ej = exponent(key, nbrs[t]);
        factor *= tables[t][ej][ks[t]];
        k2 -= static_cast<Key>(ks[t]) << (8 * nbrs[t]);
        raise += ks[t];
      }
      k2 += static_cast<Key>(raise) << (8 * i);
      scratch = c;
      scratch *= factor;
      out.add_term(k2, scratch);
      std::size_t t = 0;
      for (; t < nbrs.size(); ++t) {
        if (ks[t] < exponent(key, nbrs[t])) {
          ++ks[t];
          break;
        }
        ks[t] = 0;
      }
      if (t == nbrs.size()) break;
    }
  }
  return out;
}

MultiPoly MultiPoly::divided_difference(const RootSystem& system, int i) const {
  MultiPoly diff = *this;
  diff -= reflect(system, i);
  MultiPoly out(nvars_);
  out.terms_.reserve(diff.terms_.size());
  const Key unit = Key{1} << (8 * i);
  for (auto& [key, c] : diff.terms_) {
    if (exponent(key, i) == 0) throw InternalError("f - s_i f not divisible by alpha_i");
    out.terms_.emplace(key - unit, std::move(c));
  }
  return out;
}

}  // namespace flagcalc

namespace flagcalc {

DifferenceOperators::DifferenceOperators(const RootSystem& system) : system_(system) {
  simple_forms_ = system.ambient_simple_roots();
  if (simple_forms_.empty()) {
    *this = in_simple_roots(system);
    return;
  }
  nvars_ = static_cast<int>(simple_forms_.front().size());
  if (nvars_ > MultiPoly::kMaxVars) throw Error("too many ambient coordinates");
  for (const auto& form : simple_forms_) {
    std::vector<int> support;
    for (int k = 0; k < nvars_; ++k)
      if (form[k] != 0) support.push_back(k);
    Simple s;
    if (support.size() == 1) {
      s = {Move::Negate, support[0], support[0], form[support[0]]};
    } else if (support.size() == 2 && form[support[0]] == 1 && form[support[1]] == -1) {
      s = {Move::Transpose, support[0], support[1], 1};
    } else if (support.size() == 2 && form[support[0]] == 1 && form[support[1]] == 1) {
      s = {Move::SignedSwap, support[0], support[1], 1};
    } else {
      throw InternalError("simple root is not a signed-permutation root");
    }
    moves_.push_back(s);
  }
}

DifferenceOperators DifferenceOperators::in_simple_roots(const RootSystem& system) {
  DifferenceOperators d(system, 0);
  return d;
}

MultiPoly DifferenceOperators::linear_form(const Root& beta) const {
  if (!ambient()) return MultiPoly::linear(beta);
  std::vector<int> coeffs(nvars_);
  for (int i = 0; i < system_.rank(); ++i)
    for (int k = 0; k < nvars_; ++k) coeffs[k] += beta[i] * simple_forms_[i][k];
  return MultiPoly::linear(coeffs);
}

MultiPoly DifferenceOperators::apply(const MultiPoly& f, int i) const {
  if (!ambient()) return f.divided_difference(system_, i);
  const Simple& s = moves_[i];
  using Key = MultiPoly::Key;
  MultiPoly out(nvars_);
  auto with = [&](Key key, int ea, int eb) {
    key &= ~((Key{0xFF} << (8 * s.a)) | (Key{0xFF} << (8 * s.b)));
    return key | (static_cast<Key>(ea) << (8 * s.a)) | (static_cast<Key>(eb) << (8 * s.b));
  };
  BigInt term;
  for (const auto& [key, c] : f.terms()) {
    const int p = MultiPoly::exponent(key, s.a);
    if (s.move == Move::Negate) {
      if (p % 2 == 0) continue;
      term = c * 2;
      term /= s.factor;
      out.add_term(with(key, p - 1, p - 1), term);
      continue;
    }
    const int q = MultiPoly::exponent(key, s.b);
    if (p == q) continue;
    // (x^p y^q - x^q y^p) / (x - y), with y = x_b or y = -x_b.
    const int lo = std::min(p, q), hi = std::max(p, q);
    const int sign = p > q ? 1 : -1;
    for (int k = 0; k < hi - lo; ++k) {
      const int ea = hi - 1 - k, eb = lo + k;
      int flip = sign;
      if (s.move == Move::SignedSwap && (q + eb) % 2 != 0) flip = -flip;
      term = c;
      if (flip < 0) term = -term;
      out.add_term(with(key, ea, eb), term);
    }
  }
  return out;
}

MultiPoly DifferenceOperators::point_class_candidate() const {
  const int n = system_.rank();
  if (!ambient()) {
    MultiPoly p = MultiPoly::constant(n, 1);
    for (const Root& beta : system_.positive_roots()) p = p * MultiPoly::linear(beta);
    return p;
  }
  std::vector<int> exponents(nvars_);
  switch (system_.type()) {
    case 'A':
      for (int k = 0; k < nvars_; ++k) exponents[k] = n - k;
      break;
    case 'B':
    case 'C':
      for (int k = 0; k < n; ++k) exponents[k] = 2 * (n - k) - 1;
      break;
    default:
      for (int k = 0; k < n; ++k) exponents[k] = 2 * (n - 1 - k);
      break;
  }
  MultiPoly p(nvars_);
  p.add_term(MultiPoly::pack(exponents), 1);
  return p;
}

}  // namespace flagcalc
