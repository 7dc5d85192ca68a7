#include "app.hpp"

#include <iomanip>

namespace flagcalc::app {

std::vector<int> levi_coords(const Parabolic& parabolic, const Weight& weight) {
  std::vector<int> out;
  for (const Rational& c : restrict_to_levi(parabolic, weight)) {
    if (denominator(c) != 1) throw Error("weight is not integral on the Levi");
    out.push_back(static_cast<int>(numerator(c)));
  }
  return out;
}

std::vector<int> diagram_to_sl(const Partition& diagram, int r) {
  Partition d = diagram;
  d.resize(r, 0);
  std::vector<int> out;
  for (int i = 0; i + 1 < r; ++i) out.push_back(d[i] - d[i + 1]);
  return out;
}

namespace {

std::string text(const BigInt& v) { return v.str(); }

std::string weights_text(const std::vector<std::vector<int>>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? " / " : "") + format_int_list(ws[i]);
  return out;
}

void add(std::vector<ExampleCheck>& out, std::string example, std::string quantity, std::string expected,
         std::string actual) {
  const bool pass = expected == actual;
  out.push_back({std::move(example), std::move(quantity), std::move(expected), std::move(actual), pass});
}

// A Lagrangian Grassmannian example: classes given by strict partitions, Levi
// diagrams as GL(l) highest weights.
void lagrangian_example(std::vector<ExampleCheck>& out, const std::string& name, int l,
                        const std::vector<Partition>& classes, const std::vector<Partition>& diagrams,
                        const std::string& intersection, const std::string& invariant) {
  const Session s = open_session("C" + std::to_string(l), {l});
  std::vector<int> idx;
  for (const Partition& a : classes) idx.push_back(lagrangian_index(*s.table, a));
  add(out, name, "intersection number", intersection, text(s.schubert->intersection_number(idx)));
  add(out, name, "deformed top coefficient", intersection, text(s.deformed->top_coefficient(idx)));

  std::vector<std::vector<int>> chi, expected;
  for (int x : idx) chi.push_back(levi_coords(*s.parabolic, s.deformed->chi(x)));
  for (const Partition& d : diagrams) expected.push_back(diagram_to_sl(d, l));
  add(out, name, "chi restrictions", weights_text(expected), weights_text(chi));
  add(out, name, "invariant dimension", invariant, text(s.levi->invariant_dimension(expected)));
  add(out, name, "invariant dimension (LR count)", invariant, text(sl_invariant_count(diagrams, l)));
  add(out, name, "hom dimension n=1", invariant, text(hom_dimension(*s.deformed, *s.levi, idx, 1)));
}

}  // namespace

std::vector<ExampleCheck> run_examples() {
  std::vector<ExampleCheck> out;

  lagrangian_example(out, "LG(3,6)", 3, {{1}, {2, 1}, {2}}, {{2, 0, 0}, {3, 3, 0}, {3, 1, 0}}, "2", "1");
  lagrangian_example(out, "LG(5,10)", 5, {{3, 1}, {3, 2}, {4, 2}}, {{4, 3, 1}, {4, 4, 2}, {5, 4, 2, 1}}, "4", "5");

  {
    const LeviSystem g2(std::make_shared<const RootSystem>(RootSystem::build('G', 2)));
    const std::vector<std::pair<std::vector<LeviWeight>, std::string>> cases = {
        {{{6, 0}, {0, 6}, {0, 7}}, "1"},
        {{{12, 0}, {0, 12}, {0, 14}}, "2"},
        {{{6, 0}, {0, 6}, {10, 1}}, "1"},
        {{{12, 0}, {0, 12}, {20, 2}}, "3"},
    };
    for (const auto& [weights, expected] : cases)
      add(out, "G2", "invariant dimension " + weights_text(weights), expected, text(g2.invariant_dimension(weights)));
  }

  {
    const Session s = open_session("C3", {2});
    const std::vector<int> idx = {s.index("1,3,2,1,3,2"), s.index("1,3,2,1,3,2"), s.index("3,2")};
    const std::string name = "Sp(6)/P2";
    add(out, name, "ordinary top coefficient", "1", text(s.schubert->intersection_number(idx)));
    std::vector<std::vector<int>> chi;
    for (int x : idx) chi.push_back(levi_coords(*s.parabolic, s.deformed->chi(x)));
    add(out, name, "chi restrictions", "1,1 / 1,1 / 3,1", weights_text(chi));
    for (int n = 1; n <= 3; ++n) {
      std::vector<LeviWeight> scaled;
      for (const auto& w : chi) {
        LeviWeight v = w;
        for (int& c : v) c *= n;
        scaled.push_back(v);
      }
      add(out, name, "invariant dimension n=" + std::to_string(n), "0", text(s.levi->invariant_dimension(scaled)));
    }
    add(out, name, "deformed top coefficient", "0", text(s.deformed->top_coefficient(idx)));
  }
  return out;
}

void print_examples(std::ostream& os, const std::vector<ExampleCheck>& checks) {
  for (const ExampleCheck& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(10) << c.example << std::setw(48) << c.quantity
       << "expected " << c.expected << ", got " << c.actual << '\n';
  }
}

}  // namespace flagcalc::app
