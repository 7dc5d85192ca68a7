#include "support.hpp"

using namespace flagcalc;
using namespace flagcalc::test;

namespace {

BigInt evaluate(const MultiPoly& f, const std::vector<BigInt>& point) {
  BigInt total = 0;
  for (const auto& [key, c] : f.terms()) {
    BigInt term = c;
    for (int v = 0; v < f.nvars(); ++v)
      for (int e = 0; e < MultiPoly::exponent(key, v); ++e) term *= point[v];
    total += term;
  }
  return total;
}

MultiPoly random_poly(int nvars, int degree, int terms) {
  MultiPoly f(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    for (int d = 0; d < degree; ++d) ++e[uniform(0, nvars - 1)];
    std::vector<int> unit(nvars, 0);
    MultiPoly m = MultiPoly::constant(nvars, uniform(-5, 5));
    for (int v = 0; v < nvars; ++v)
      for (int k = 0; k < e[v]; ++k) {
        unit.assign(nvars, 0);
        unit[v] = 1;
        m = m * MultiPoly::linear(unit);
      }
    f += m;
  }
  return f;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("arithmetic") {
  const MultiPoly x = MultiPoly::linear({1, 0}), y = MultiPoly::linear({0, 1});
  const MultiPoly f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.coefficient({2, 0}) == 1);
  CHECK(f.coefficient({1, 1}) == 0);
  CHECK((f - f).is_zero());
  CHECK((f * BigInt(6)).divexact(3) == f * BigInt(2));
  CHECK_THROWS_AS((f * BigInt(3)).divexact(2), InternalError);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly a = random_poly(3, 3, 4), b = random_poly(3, 2, 3);
    const std::vector<BigInt> pt{uniform(-7, 7), uniform(-7, 7), uniform(-7, 7)};
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("divided differences in simple-root coordinates") {
  for (const std::string g : {"A2", "B2", "C3", "G2"}) {
    CAPTURE(g);
    const RootSystem rs = RootSystem::parse(g);
    const int n = rs.rank();
    for (int trial = 0; trial < 5; ++trial) {
      const MultiPoly f = random_poly(n, 3, 4), h = random_poly(n, 2, 3);
      for (int i = 0; i < n; ++i) {
        CHECK(f.divided_difference(rs, i).divided_difference(rs, i).is_zero());
        CHECK(f.reflect(rs, i).reflect(rs, i) == f);
        // twisted Leibniz rule
        CHECK((f * h).divided_difference(rs, i) ==
              f.divided_difference(rs, i) * h + f.reflect(rs, i) * h.divided_difference(rs, i));
        CHECK(MultiPoly::linear(rs.unit_root(i)).divided_difference(rs, i) == MultiPoly::constant(n, 2));
      }
      // braid relations
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const int m = rs.cartan(i, j) * rs.cartan(j, i);
          const int len = m == 0 ? 2 : m == 1 ? 3 : m == 2 ? 4 : 6;
          MultiPoly a = f, b = f;
          for (int k = 0; k < len; ++k) {
            a = a.divided_difference(rs, k % 2 ? j : i);
            b = b.divided_difference(rs, k % 2 ? i : j);
          }
          CHECK(a == b);
        }
    }
  }
}

TEST_CASE("ambient operators agree with simple-root operators") {
  for (const std::string g : {"A3", "B3", "C3", "D4"}) {
    CAPTURE(g);
    const RootSystem rs = RootSystem::parse(g);
    const DifferenceOperators ops(rs);
    REQUIRE(ops.ambient());
    const DifferenceOperators plain = DifferenceOperators::in_simple_roots(rs);
    CHECK_FALSE(plain.ambient());
    for (int trial = 0; trial < 5; ++trial) {
      // f as a product of random roots in both coordinate systems
      MultiPoly fa = MultiPoly::constant(ops.nvars(), 1), fs = MultiPoly::constant(rs.rank(), 1);
      for (int d = 0; d < 4; ++d) {
        const Root& beta = rs.positive_roots()[uniform(0, rs.num_positive_roots() - 1)];
        fa = fa * ops.linear_form(beta);
        fs = fs * plain.linear_form(beta);
      }
      std::vector<BigInt> x(ops.nvars());
      for (auto& v : x) v = uniform(-9, 9);
      std::vector<BigInt> alpha(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) alpha[j] = evaluate(ops.linear_form(rs.unit_root(j)), x);
      CHECK(evaluate(fa, x) == evaluate(fs, alpha));
      for (int i = 0; i < rs.rank(); ++i) CHECK(evaluate(ops.apply(fa, i), x) == evaluate(plain.apply(fs, i), alpha));
      int i = uniform(0, rs.rank() - 1), j = uniform(0, rs.rank() - 1);
      CHECK(evaluate(ops.apply(ops.apply(fa, i), j), x) == evaluate(plain.apply(plain.apply(fs, i), j), alpha));
    }
  }
}

TEST_CASE("ambient operators on monomials") {
  for (const std::string g : {"A4", "B4", "C4", "D5"}) {
    CAPTURE(g);
    const RootSystem rs = RootSystem::parse(g);
    const DifferenceOperators ops(rs);
    for (int trial = 0; trial < 10; ++trial) {
      const MultiPoly f = random_poly(ops.nvars(), uniform(0, 5), 3);
      for (int i = 0; i < rs.rank(); ++i) {
        const MultiPoly d = ops.apply(f, i);
        CHECK(ops.apply(d, i).is_zero());
        // d_i(alpha_i g) = 2 g for s_i-invariant g
        CHECK(ops.apply(ops.linear_form(rs.unit_root(i)) * d, i) == d * BigInt(2));
      }
    }
    CHECK(ops.point_class_candidate().degree() == rs.num_positive_roots());
  }
}

}  // TEST_SUITE
