#pragma once

#include "app.hpp"

#include <doctest.h>

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace flagcalc::test {

inline std::shared_ptr<const RootSystem> roots_of(const std::string& name) {
  return std::make_shared<const RootSystem>(RootSystem::parse(name));
}

inline std::shared_ptr<const Parabolic> parabolic(const std::string& name, std::vector<int> crossed) {
  for (int& k : crossed) --k;
  return std::make_shared<const Parabolic>(Parabolic::from_crossed(roots_of(name), crossed));
}

inline std::shared_ptr<const CosetTable> table(const std::string& name, std::vector<int> crossed) {
  return CosetTable::build(parabolic(name, std::move(crossed)));
}

/// Every supported (type, rank).
inline std::vector<std::string> all_groups() {
  std::vector<std::string> out;
  for (int r = 1; r <= 7; ++r) out.push_back("A" + std::to_string(r));
  for (int r = 2; r <= 5; ++r) out.push_back("B" + std::to_string(r));
  for (int r = 2; r <= 5; ++r) out.push_back("C" + std::to_string(r));
  for (int r = 4; r <= 5; ++r) out.push_back("D" + std::to_string(r));
  out.push_back("G2");
  return out;
}

/// The small groups swept exhaustively.
inline std::vector<std::string> sweep_groups() { return {"A2", "A3", "B2", "B3", "C3", "G2"}; }

/// (group, crossed nodes) for every maximal parabolic of the sweep groups.
inline std::vector<std::pair<std::string, int>> sweep_maximal() {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& g : sweep_groups())
    for (int k = 1; k <= RootSystem::parse(g).rank(); ++k) out.emplace_back(g, k);
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace flagcalc::test
