#pragma once

#include "flagcalc/deformed.hpp"
#include "flagcalc/levi_rep.hpp"
#include "flagcalc/lr_oracle.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace flagcalc::app {

using Json = nlohmann::ordered_json;

/// "e" for the identity, otherwise the 1-based comma list.
std::string word_text(const Word& word);

/// Exact integers: JSON numbers up to 2^53 - 1 in absolute value, decimal strings beyond.
Json json_int(const BigInt& value);
BigInt int_from_json(const Json& value);

struct CacheConfig {
  std::optional<std::filesystem::path> dir;  // nullopt disables the cache
};
/// FLAGCALC_CACHE_DIR, else $XDG_CACHE_HOME/flagcalc, else ~/.cache/flagcalc.
CacheConfig default_cache();

/// Everything downstream of (G, P).
struct Session {
  std::shared_ptr<const RootSystem> system;
  std::shared_ptr<const Parabolic> parabolic;
  std::shared_ptr<const CosetTable> table;
  std::shared_ptr<const SchubertCalculus> schubert;
  std::shared_ptr<const DeformedCalculus> deformed;
  std::shared_ptr<const LeviSystem> levi;

  /// Index of a 1-based word; throws Error naming the word if it is not in W^P.
  int index(const std::string& word) const;
  std::string word(int index) const;
};

/// crossed holds 1-based Bourbaki node labels.
Session open_session(const std::string& group, const std::vector<int>& crossed);

inline constexpr int kCacheSchemaVersion = 1;
std::string cache_key(const Parabolic& parabolic);
std::filesystem::path cache_file(const CacheConfig& cache, const Parabolic& parabolic);
/// Loads the full structure-constant table from the cache if a matching file
/// exists; otherwise computes it and writes the file. Returns true on a hit.
bool load_or_compute_table(const Session& session, const CacheConfig& cache);

struct TupleRow {
  std::vector<std::string> words;
  BigInt cup_top;
  BigInt deformed_top;
  bool levi_movable = false;
  std::map<int, BigInt> invariant_dims;
  bool violation = false;
};

struct VerifyReport {
  char type = 'A';
  int rank = 0;
  std::vector<int> levi_simple;  // 1-based
  int s = 3;
  int n_max = 1;
  std::vector<TupleRow> tuples;

  int violations() const;
  int checked() const;
};

Json to_json(const VerifyReport& report);
VerifyReport report_from_json(const Json& json);
/// Canonical text form: two-space indent, trailing newline.
std::string dump(const VerifyReport& report);

struct VerifyOptions {
  int s = 3;
  int n_max = 3;
  int jobs = 1;
  long long tuple_cap = 1000000;
};
/// FLAGCALC_TUPLE_CAP or 10^6.
long long default_tuple_cap();

/// Thrown when the tuple count exceeds the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(long long count, long long cap);
  long long count;
};

/// Multisets of s classes with total codimension (s - 1) dim G/P, each sorted
/// by index; the list is in lexicographic order.
std::vector<std::vector<int>> enumerate_tuples(const CosetTable& table, int s);
VerifyReport verify(const Session& session, const VerifyOptions& options);

struct ExampleCheck {
  std::string example;
  std::string quantity;
  std::string expected;
  std::string actual;
  bool pass = false;
};
/// Recomputes the four worked examples (LG(3,6), LG(5,10), G2, Sp(6)).
std::vector<ExampleCheck> run_examples();
void print_examples(std::ostream& out, const std::vector<ExampleCheck>& checks);

/// Levi restriction of a weight as integers (throws if not integral).
std::vector<int> levi_coords(const Parabolic& parabolic, const Weight& weight);
/// GL(r) diagram (a_1 >= ... >= a_r) to SL(r) coordinates a_i - a_{i+1}.
std::vector<int> diagram_to_sl(const Partition& diagram, int r);

}  // namespace flagcalc::app
