#include "app.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace flagcalc::app {

CapExceeded::CapExceeded(long long count, long long cap)
    : Error("refusing to enumerate " + std::to_string(count) + " tuples (cap " + std::to_string(cap) +
            "; raise FLAGCALC_TUPLE_CAP to allow)"),
      count(count) {}

long long default_tuple_cap() {
  if (const char* text = std::getenv("FLAGCALC_TUPLE_CAP"); text && *text) {
    char* end = nullptr;
    const long long cap = std::strtoll(text, &end, 10);
    if (*end != '\0' || cap < 0) throw Error(std::string("FLAGCALC_TUPLE_CAP is not a nonnegative integer: ") + text);
    return cap;
  }
  return 1000000;
}

namespace {

// Number of nondecreasing index sequences of length k starting at >= start with codim sum = remaining.
long long count_tuples(const CosetTable& table, int k, int start, int remaining,
                       std::map<std::tuple<int, int, int>, long long>& memo) {
  if (k == 0) return remaining == 0 ? 1 : 0;
  const auto key = std::make_tuple(k, start, remaining);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  long long total = 0;
  for (int x = start; x < table.size(); ++x)
    if (table.codim(x) <= remaining) total += count_tuples(table, k - 1, x, remaining - table.codim(x), memo);
  memo[key] = total;
  return total;
}

void collect(const CosetTable& table, int k, int start, int remaining, std::vector<int>& prefix,
             std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  for (int x = start; x < table.size(); ++x) {
    if (table.codim(x) > remaining) continue;
    prefix.push_back(x);
    collect(table, k - 1, x, remaining - table.codim(x), prefix, out);
    prefix.pop_back();
  }
}

long long tuple_count(const CosetTable& table, int s) {
  std::map<std::tuple<int, int, int>, long long> memo;
  return count_tuples(table, s, 0, table.parabolic().dim(), memo);
}

}  // namespace

std::vector<std::vector<int>> enumerate_tuples(const CosetTable& table, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect(table, s, 0, table.parabolic().dim(), prefix, out);
  return out;
}

VerifyReport verify(const Session& session, const VerifyOptions& options) {
  if (options.s < 2) throw Error("s must be at least 2");
  if (options.n_max < 1) throw Error("n_max must be at least 1");
  const CosetTable& table = *session.table;
  const long long count = tuple_count(table, options.s);
  if (count > options.tuple_cap) throw CapExceeded(count, options.tuple_cap);
  const auto tuples = enumerate_tuples(table, options.s);

  VerifyReport report;
  report.type = session.system->type();
  report.rank = session.system->rank();
  for (int k : session.parabolic->levi_simple()) report.levi_simple.push_back(k + 1);
  report.s = options.s;
  report.n_max = options.n_max;
  report.tuples.resize(tuples.size());

  auto work = [&](std::size_t i) {
    const std::vector<int>& t = tuples[i];
    TupleRow& row = report.tuples[i];
    for (int x : t) row.words.push_back(session.word(x));
    row.cup_top = session.schubert->intersection_number(t);
    row.deformed_top = session.deformed->top_coefficient(t);
    row.levi_movable = row.deformed_top > 0;
    if (row.deformed_top == 1) {
      for (int n = 1; n <= options.n_max; ++n) {
        std::vector<LeviWeight> weights;
        for (int x : t) weights.push_back(session.levi->restrict(Rational(n) * session.deformed->chi(x)));
        const BigInt d = session.levi->invariant_dimension(weights);
        row.invariant_dims[n] = d;
        if (d != 1) row.violation = true;
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tuples.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return report;
}

}  // namespace flagcalc::app
