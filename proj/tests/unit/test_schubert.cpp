#include "qfunctions.hpp"
#include "support.hpp"

using namespace flagcalc;
using namespace flagcalc::test;

namespace {

std::shared_ptr<const SchubertCalculus> calculus(const std::string& g, std::vector<int> crossed) {
  return std::make_shared<const SchubertCalculus>(table(g, std::move(crossed)));
}

// d along a reduced word of x, rightmost letter first.
MultiPoly descend(const RootSystem& rs, MultiPoly f, const Word& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = f.divided_difference(rs, *it);
  return f;
}

// c^w_{u,v} from the G/B table with S^{w0} = prod beta / |W| in simple-root coordinates.
BigInt bgg_constant(const BggTable& bgg, const CosetTable& t, int u, int v, int w) {
  const RootSystem& rs = t.roots();
  const MultiPoly prod = bgg.numerator_of(t.element(t.dual(u))) * bgg.numerator_of(t.element(t.dual(v)));
  const BigInt c = descend(rs, prod, t.element(t.dual(w)).word()).constant_term();
  const BigInt d2 = bgg.denominator * bgg.denominator;
  if (c % d2 != 0) throw InternalError("non-integral constant from the G/B table");
  return c / d2;
}

}  // namespace

TEST_SUITE("schubert") {

TEST_CASE("G/B representatives") {
  for (const std::string g : {"A1", "A2", "B2", "G2", "A3"}) {
    CAPTURE(g);
    const WeylGroup group(roots_of(g));
    const BggTable bgg = bgg_representatives(group);
    CHECK(bgg.numerator_of(group.identity()) == MultiPoly::constant(group.roots().rank(), bgg.denominator));
    for (const auto& w : bgg.elements) {
      CHECK(bgg.numerator_of(w).degree() == w.length());
      CHECK(descend(group.roots(), bgg.numerator_of(w), w.word()).constant_term() == bgg.denominator);
      for (int i = 0; i < group.roots().rank(); ++i)
        if (!group.is_right_descent(w, i))
          CHECK(bgg.numerator_of(w).divided_difference(group.roots(), i).is_zero());
    }
  }
  {
    const WeylGroup a1(roots_of("A1"));
    const BggTable bgg = bgg_representatives(a1);
    CHECK(bgg.numerator_of(a1.simple_reflection(0)).divided_difference(a1.roots(), 0) ==
          MultiPoly::constant(1, bgg.denominator));
  }
  {
    const WeylGroup a2(roots_of("A2"));
    const BggTable bgg = bgg_representatives(a2);
    const MultiPoly sq = bgg.numerator_of(a2.simple_reflection(0)) * bgg.numerator_of(a2.simple_reflection(0));
    const BigInt d2 = bgg.denominator * bgg.denominator;
    CHECK(descend(a2.roots(), sq, {1, 0}).constant_term() == d2);
    CHECK(descend(a2.roots(), sq, {0, 1}).constant_term() == 0);
  }
}

TEST_CASE("Gr(2,4)") {
  const auto s = calculus("A3", {2});
  const CosetTable& t = s->table();
  const int one = grassmannian_index(t, {1}, 2, 2);
  const Expansion sq = s->product(one, one);
  REQUIRE(sq.size() == 2);
  for (const auto& term : sq) CHECK(term.coeff == 1);
  std::set<Partition> shapes;
  for (const auto& term : sq) shapes.insert(grassmannian_partition(t, term.index, 2, 2));
  CHECK(shapes == std::set<Partition>{{2}, {1, 1}});
  const std::vector<int> four(4, one);
  CHECK(s->intersection_number(four) == 2);
}

TEST_CASE("unit, duality and degree filter") {
  for (const auto& [g, k] : sweep_maximal()) {
    CAPTURE(g);
    CAPTURE(k);
    const auto s = calculus(g, {k});
    const CosetTable& t = s->table();
    const int n = t.size();
    for (int u = 0; u < n; ++u) {
      CHECK(s->product(u, t.top_index()) == Expansion{{u, 1}});
      const std::vector<int> pair{u, t.dual(u)};
      CHECK(s->intersection_number(pair) == 1);
      for (int v = 0; v < n; ++v) {
        CHECK(s->structure_constant(u, v, t.identity_index()) == (v == t.dual(u) ? 1 : 0));
        for (int w = 0; w < n; ++w) {
          const BigInt c = s->structure_constant(u, v, w);
          CHECK(c >= 0);
          if (t.codim(u) + t.codim(v) != t.codim(w)) CHECK(c == 0);
        }
      }
    }
  }
}

TEST_CASE("production engine agrees with the G/B table") {
  for (const std::string g : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    const WeylGroup group(roots_of(g));
    const BggTable bgg = bgg_representatives(group);
    const int l = group.roots().rank();
    std::vector<std::vector<int>> parabolics;
    for (int k = 1; k <= l; ++k) parabolics.push_back({k});
    if (l >= 2) parabolics.push_back({1, 2});
    std::vector<int> all(l);
    std::iota(all.begin(), all.end(), 1);
    parabolics.push_back(all);
    for (const auto& crossed : parabolics) {
      CAPTURE(g);
      CAPTURE(format_int_list(crossed));
      const auto s = calculus(g, crossed);
      const CosetTable& t = s->table();
      for (int u = 0; u < t.size(); ++u)
        for (int v = u; v < t.size(); ++v)
          for (int w = 0; w < t.size(); ++w)
            if (t.codim(u) + t.codim(v) == t.codim(w)) CHECK(s->structure_constant(u, v, w) == bgg_constant(bgg, t, u, v, w));
    }
  }
}

TEST_CASE("Grassmannians agree with Littlewood-Richardson") {
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      const int k = n - r;
      const auto s = calculus("A" + std::to_string(n - 1), {r});
      const CosetTable& t = s->table();
      for (int u = 0; u < t.size(); ++u)
        for (int v = 0; v < t.size(); ++v)
          for (int w = 0; w < t.size(); ++w) {
            if (t.codim(u) + t.codim(v) != t.codim(w)) continue;
            CHECK(s->structure_constant(u, v, w) ==
                  lr_coefficient(grassmannian_partition(t, u, r, k), grassmannian_partition(t, v, r, k),
                                 grassmannian_partition(t, w, r, k)));
          }
    }
}

TEST_CASE("Lagrangian Grassmannians agree with Q-functions") {
  QFunctions qf(16);
  for (int l = 2; l <= 4; ++l) {
    CAPTURE(l);
    const auto s = calculus("C" + std::to_string(l), {l});
    const CosetTable& t = s->table();
    for (int u = 0; u < t.size(); ++u)
      for (int v = u; v < t.size(); ++v)
        for (int w = 0; w < t.size(); ++w) {
          if (t.codim(u) + t.codim(v) != t.codim(w)) continue;
          const Rational c = qf.coefficient({lagrangian_partition(t, u), lagrangian_partition(t, v)}, lagrangian_partition(t, w));
          CHECK(Rational(s->structure_constant(u, v, w)) == c);
        }
  }
  const auto s3 = calculus("C3", {3});
  const std::vector<int> ex3{lagrangian_index(s3->table(), {1}), lagrangian_index(s3->table(), {2, 1}),
                             lagrangian_index(s3->table(), {2})};
  CHECK(s3->intersection_number(ex3) == 2);

  const auto s5 = calculus("C5", {5});
  const std::vector<int> ex5{lagrangian_index(s5->table(), {3, 1}), lagrangian_index(s5->table(), {3, 2}),
                             lagrangian_index(s5->table(), {4, 2})};
  const Rational oracle = qf.coefficient({{3, 1}, {3, 2}, {4, 2}}, {5, 4, 3, 2, 1});
  CHECK(oracle == 6);
  CHECK(Rational(s5->intersection_number(ex5)) == oracle);
}

TEST_CASE("Sp(6) triple") {
  const auto s = calculus("C3", {2});
  const CosetTable& t = s->table();
  const int w1 = t.index_of_word(parse_word("1,3,2,1,3,2"));
  const int w3 = t.index_of_word(parse_word("3,2"));
  const std::vector<int> triple{w1, w1, w3};
  CHECK(s->intersection_number(triple) == 1);
}

TEST_CASE("degrees of classical flag varieties") {
  auto degree = [](const std::string& g, int k) {
    const auto s = calculus(g, {k});
    const CosetTable& t = s->table();
    int divisor = -1;
    for (int x = 0; x < t.size(); ++x)
      if (t.codim(x) == 1) divisor = x;
    return s->intersection_number(std::vector<int>(t.parabolic().dim(), divisor));
  };
  CHECK(degree("A3", 2) == 2);     // Gr(2,4)
  CHECK(degree("A6", 3) == 462);   // Gr(3,7)
  CHECK(degree("C3", 3) == 16);    // LG(3,6)
  CHECK(degree("B3", 1) == 2);     // quadric Q^5
  CHECK(degree("D5", 5) == 12);    // spinor variety OG(5,10)
}

TEST_CASE("ring axioms on random triples") {
  std::vector<std::pair<std::string, std::vector<int>>> cases;
  for (const auto& [g, k] : sweep_maximal()) cases.push_back({g, {k}});
  cases.push_back({"A3", {1, 3}});
  cases.push_back({"B3", {1, 2}});
  cases.push_back({"C4", {2}});
  cases.push_back({"D4", {2}});
  cases.push_back({"G2", {1, 2}});
  for (const auto& [g, crossed] : cases) {
    CAPTURE(g);
    const auto s = calculus(g, crossed);
    const CosetTable& t = s->table();
    for (int trial = 0; trial < 25; ++trial) {
      const int a = uniform(0, t.size() - 1), b = uniform(0, t.size() - 1), c = uniform(0, t.size() - 1);
      const CohomClass A = CohomClass::basis(a), B = CohomClass::basis(b), C = CohomClass::basis(c);
      CHECK(s->cup_product(A, B) == s->cup_product(B, A));
      CHECK(s->cup_product(s->cup_product(A, B), C) == s->cup_product(A, s->cup_product(B, C)));
      CHECK(s->cup_product(A, s->unit()) == A);
    }
  }
}

TEST_CASE("cached tables round-trip through entries") {
  const auto s = calculus("B3", {2});
  s->compute_all();
  const auto entries = s->entries();
  const auto fresh = calculus("B3", {2});
  fresh->import_entries(entries);
  const CosetTable& t = s->table();
  for (int u = 0; u < t.size(); ++u)
    for (int v = 0; v < t.size(); ++v) CHECK(fresh->product(u, v) == s->product(u, v));
  std::vector<StructureEntry> bad = entries;
  bad.push_back({0, 0, 0, 1});
  CHECK_THROWS_AS(calculus("B3", {2})->import_entries(bad), Error);
}

}  // TEST_SUITE
