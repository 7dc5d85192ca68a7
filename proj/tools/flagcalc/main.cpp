#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace flagcalc;
using namespace flagcalc::app;

namespace {

std::string class_text(const Session& s, const CohomClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [x, coeff] : c.coeffs()) {
    if (!out.empty()) out += " + ";
    out += coeff.str() + "·[" + s.word(x) + "]";
  }
  return out;
}

Json class_json(const Session& s, const CohomClass& c) {
  Json terms = Json::array();
  for (const auto& [x, coeff] : c.coeffs()) terms.push_back({{"word", s.word(x)}, {"coeff", json_int(coeff)}});
  return terms;
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) {
    if (denominator(v) == 1)
      out.push_back(json_int(numerator(v)));
    else
      out.push_back(to_string(v));
  }
  return out;
}

std::vector<int> one_based(const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int k : nodes) out.push_back(k + 1);
  return out;
}

int cmd_roots(const std::string& group, bool json) {
  const RootSystem rs = RootSystem::parse(group);
  Json doc;
  doc["group"] = rs.name();
  Json cartan = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(row);
  }
  doc["cartan"] = cartan;
  Json roots = Json::array();
  for (const Root& r : rs.positive_roots()) roots.push_back(format_int_list(r));
  doc["positive_roots"] = roots;
  doc["rho"] = rational_list(rs.rho().coords());
  if (json) {
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  std::cout << rs.name() << ": " << rs.num_positive_roots() << " positive roots\n";
  for (const Root& r : rs.positive_roots()) std::cout << "  " << format_int_list(r) << '\n';
  return 0;
}

int cmd_wp(const std::string& group, const std::vector<int>& cross, bool json) {
  const Session s = open_session(group, cross);
  const CosetTable& t = *s.table;
  Json rows = Json::array();
  for (int x = 0; x < t.size(); ++x) {
    rows.push_back({{"word", s.word(x)},
                    {"length", t.length(x)},
                    {"chi_fund_coords", rational_list(s.deformed->chi(x).coords())},
                    {"chi_levi", rational_list(restrict_to_levi(*s.parabolic, s.deformed->chi(x)))},
                    {"delta_qw", one_based(stabilizer_simple_roots(t, x))},
                    {"dj", dj_profile(t, x)}});
  }
  if (json) {
    std::cout << Json{{"parabolic", s.parabolic->label()}, {"levi", s.levi->label()}, {"elements", rows}}.dump(2)
              << '\n';
    return 0;
  }
  std::cout << s.parabolic->label() << "  |W^P| = " << t.size() << "  Levi " << s.levi->label() << '\n';
  for (const Json& r : rows) {
    std::cout << "  " << r["word"].get<std::string>() << "  len " << r["length"] << "  chi " << r["chi_fund_coords"].dump()
              << "  levi " << r["chi_levi"].dump() << "  Q_w " << r["delta_qw"].dump() << "  d " << r["dj"].dump() << '\n';
  }
  return 0;
}

int cmd_product(const std::string& group, const std::vector<int>& cross, const std::vector<std::string>& words,
                bool deformed, bool json) {
  const Session s = open_session(group, cross);
  CohomClass acc;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const CohomClass next = CohomClass::basis(s.index(words[i]));
    if (i == 0)
      acc = next;
    else
      acc = deformed ? s.deformed->cup_product(acc, next) : s.schubert->cup_product(acc, next);
  }
  if (json)
    std::cout << Json{{"parabolic", s.parabolic->label()}, {"deformed", deformed}, {"terms", class_json(s, acc)}}.dump(2)
              << '\n';
  else
    std::cout << class_text(s, acc) << '\n';
  return 0;
}

int cmd_invariants(const std::string& group, const std::vector<int>& cross, const std::vector<std::string>& weights,
                   int scale) {
  auto system = std::make_shared<const RootSystem>(RootSystem::parse(group));
  std::unique_ptr<LeviSystem> levi;
  if (cross.empty()) {
    levi = std::make_unique<LeviSystem>(system);
  } else {
    const Session s = open_session(group, cross);
    levi = std::make_unique<LeviSystem>(*s.parabolic);
  }
  std::vector<LeviWeight> ws;
  for (const std::string& w : weights) {
    LeviWeight v = parse_int_list(w);
    if (static_cast<int>(v.size()) != levi->rank())
      throw Error("weight \"" + w + "\" needs " + std::to_string(levi->rank()) + " coordinates for Levi " + levi->label());
    for (int& c : v) c *= scale;
    ws.push_back(v);
  }
  std::cout << levi->invariant_dimension(ws).str() << '\n';
  return 0;
}

int cmd_verify(const std::string& group, const std::vector<int>& cross, VerifyOptions options,
               const std::string& out_path, bool no_cache) {
  const Session s = open_session(group, cross);
  load_or_compute_table(s, no_cache ? CacheConfig{} : default_cache());
  const VerifyReport report = verify(s, options);
  const std::string text = dump(report);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << text;
  }
  std::cerr << s.parabolic->label() << ": " << report.tuples.size() << " tuples, " << report.checked()
            << " with deformed top 1, " << report.violations() << " violations\n";
  return report.violations() == 0 ? 0 : 1;
}

int cmd_fulton(const std::string& lambda, const std::string& mu, const std::string& nu, int n_max, int rows,
               int width) {
  if (lambda.empty() && mu.empty() && nu.empty()) {
    const auto box = box_partitions(rows, width);
    long long with_c1 = 0, violations = 0;
    for (const auto& a : box)
      for (const auto& b : box)
        for (const auto& c : box) {
          const FultonReport r = fulton_check(a, b, c, n_max);
          if (r.c != 1) continue;
          ++with_c1;
          if (r.violation) {
            ++violations;
            std::cout << "VIOLATION " << format_int_list(a) << " | " << format_int_list(b) << " | "
                      << format_int_list(c) << '\n';
          }
        }
    std::cout << box.size() * box.size() * box.size() << " triples, " << with_c1 << " with c = 1, " << violations
              << " violations\n";
    return violations == 0 ? 0 : 1;
  }
  const FultonReport r = fulton_check(parse_int_list(lambda), parse_int_list(mu), parse_int_list(nu), n_max);
  std::cout << "c = " << r.c.str() << '\n';
  for (const auto& [n, c] : r.scaled) std::cout << "n = " << n << ": " << c.str() << '\n';
  return r.violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Schubert calculus on G/P and Levi invariants"};
  cli.require_subcommand(1);

  std::string group;
  std::string cross_text;
  bool json = false;

  auto* roots = cli.add_subcommand("roots", "positive roots, Cartan matrix and rho");
  roots->add_option("--group", group, "e.g. A3, C5, G2")->required();
  roots->add_flag("--json", json);

  auto* wp = cli.add_subcommand("wp", "list W^P with chi_w, Delta(Q_w) and d_j");
  wp->add_option("--group", group)->required();
  wp->add_option("--cross", cross_text, "crossed-out nodes, 1-based and comma separated")->required();
  wp->add_flag("--json", json);

  std::vector<std::string> words;
  bool deformed = false;
  auto* product = cli.add_subcommand("product", "product of Schubert classes");
  product->add_option("--group", group)->required();
  product->add_option("--cross", cross_text)->required();
  product->add_option("words", words, "reduced words, e.g. 1,3,2 (e for the identity)")->required();
  product->add_flag("--deformed", deformed, "use the deformed product");
  product->add_flag("--json", json);

  std::vector<std::string> weights;
  int scale = 1;
  auto* invariants = cli.add_subcommand("invariants", "dimension of invariants in a tensor product");
  invariants->add_option("--group", group)->required();
  invariants->add_option("--cross", cross_text, "use the Levi of this parabolic (default: the whole group)");
  invariants->add_option("weights", weights, "fundamental coordinates, e.g. 6,0")->required();
  invariants->add_option("--scale", scale, "multiply every weight by n")->check(CLI::PositiveNumber);

  VerifyOptions options;
  std::string out_path;
  bool no_cache = false;
  auto* verify_cmd = cli.add_subcommand("verify", "check every tuple with deformed top coefficient 1");
  verify_cmd->add_option("--group", group)->required();
  verify_cmd->add_option("--cross", cross_text)->required();
  verify_cmd->add_option("--s", options.s, "tuple size")->check(CLI::Range(2, 12));
  verify_cmd->add_option("--n-max", options.n_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", options.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path, "report file (default: stdout)");
  verify_cmd->add_flag("--no-cache", no_cache);

  std::string lambda, mu, nu;
  int n_max = 4, rows = 3, width = 2;
  auto* fulton = cli.add_subcommand("fulton", "c = 1 implies c(n) = 1 for LR coefficients");
  fulton->add_option("--lambda", lambda);
  fulton->add_option("--mu", mu);
  fulton->add_option("--nu", nu);
  fulton->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  fulton->add_option("--rows", rows, "sweep: at most this many parts")->check(CLI::PositiveNumber);
  fulton->add_option("--width", width, "sweep: parts at most this")->check(CLI::NonNegativeNumber);

  auto* examples = cli.add_subcommand("examples", "recompute the worked examples");

  CLI11_PARSE(cli, argc, argv);

  try {
    const std::vector<int> cross = parse_int_list(cross_text);
    if (*roots) return cmd_roots(group, json);
    if (*wp) return cmd_wp(group, cross, json);
    if (*product) return cmd_product(group, cross, words, deformed, json);
    if (*invariants) return cmd_invariants(group, cross, weights, scale);
    if (*verify_cmd) {
      options.tuple_cap = default_tuple_cap();
      return cmd_verify(group, cross, options, out_path, no_cache);
    }
    if (*fulton) {
      if ((lambda.empty() || mu.empty() || nu.empty()) && !(lambda.empty() && mu.empty() && nu.empty()))
        throw Error("give all of --lambda, --mu, --nu, or none for the sweep");
      return cmd_fulton(lambda, mu, nu, n_max, rows, width);
    }
    if (*examples) {
      const auto checks = run_examples();
      print_examples(std::cout, checks);
      for (const auto& c : checks)
        if (!c.pass) return 1;
      return 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
