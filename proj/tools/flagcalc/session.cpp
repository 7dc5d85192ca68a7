#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace flagcalc::app {

std::string word_text(const Word& word) { return word.empty() ? "e" : format_word(word); }

Json json_int(const BigInt& value) {
  static const BigInt limit = (BigInt(1) << 53) - 1;
  if (value > limit || value < -limit) return Json(value.str());
  return Json(static_cast<long long>(value));
}

BigInt int_from_json(const Json& value) {
  if (value.is_string()) return BigInt(value.get<std::string>());
  if (value.is_number_integer()) return BigInt(value.get<long long>());
  throw Error("expected an integer in JSON, got " + value.dump());
}

CacheConfig default_cache() {
  if (const char* dir = std::getenv("FLAGCALC_CACHE_DIR"); dir && *dir) return {std::filesystem::path(dir)};
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return {std::filesystem::path(xdg) / "flagcalc"};
  if (const char* home = std::getenv("HOME"); home && *home)
    return {std::filesystem::path(home) / ".cache" / "flagcalc"};
  return {std::nullopt};
}

int Session::index(const std::string& word) const { return table->index_of_word(parse_word(word)); }

std::string Session::word(int index) const { return word_text(table->element(index).word()); }

Session open_session(const std::string& group, const std::vector<int>& crossed) {
  Session s;
  s.system = std::make_shared<const RootSystem>(RootSystem::parse(group));
  std::vector<int> nodes;
  for (int k : crossed) {
    if (k < 1 || k > s.system->rank())
      throw Error("node " + std::to_string(k) + " is not in the Dynkin diagram of " + group);
    nodes.push_back(k - 1);
  }
  s.parabolic = std::make_shared<const Parabolic>(Parabolic::from_crossed(s.system, nodes));
  s.table = CosetTable::build(s.parabolic);
  s.schubert = std::make_shared<const SchubertCalculus>(s.table);
  s.deformed = std::make_shared<const DeformedCalculus>(s.schubert);
  s.levi = std::make_shared<const LeviSystem>(*s.parabolic);
  return s;
}

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> one_based(const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int k : nodes) out.push_back(k + 1);
  return out;
}

}  // namespace

std::string cache_key(const Parabolic& parabolic) {
  const RootSystem& rs = parabolic.roots();
  const std::string input = std::string(1, rs.type()) + "|" + std::to_string(rs.rank()) + "|" +
                            format_int_list(one_based(parabolic.levi_simple()));
  std::ostringstream os;
  os << std::hex << fnv1a(input);
  return os.str();
}

std::filesystem::path cache_file(const CacheConfig& cache, const Parabolic& parabolic) {
  const RootSystem& rs = parabolic.roots();
  std::string stem = std::string(1, rs.type()) + std::to_string(rs.rank());
  for (int k : parabolic.crossed()) stem += "_" + std::to_string(k + 1);
  return *cache.dir / (stem + "-" + cache_key(parabolic) + ".json");
}

namespace {

bool try_load(const Session& session, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  try {
    const Json doc = Json::parse(in);
    if (doc.at("schema_version").get<int>() != kCacheSchemaVersion) return false;
    if (doc.at("input_hash").get<std::string>() != cache_key(*session.parabolic)) return false;
    std::vector<StructureEntry> entries;
    for (const Json& e : doc.at("entries"))
      entries.push_back({session.index(e.at("u").get<std::string>()), session.index(e.at("v").get<std::string>()),
                         session.index(e.at("w").get<std::string>()), int_from_json(e.at("c"))});
    session.schubert->import_entries(entries);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void save(const Session& session, const std::filesystem::path& file) {
  Json doc;
  doc["schema_version"] = kCacheSchemaVersion;
  doc["group"] = session.system->name();
  doc["levi_simple"] = one_based(session.parabolic->levi_simple());
  doc["input_hash"] = cache_key(*session.parabolic);
  Json entries = Json::array();
  for (const StructureEntry& e : session.schubert->entries())
    entries.push_back({{"u", session.word(e.u)}, {"v", session.word(e.v)}, {"w", session.word(e.w)}, {"c", json_int(e.c)}});
  doc["entries"] = std::move(entries);

  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) return;
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

bool load_or_compute_table(const Session& session, const CacheConfig& cache) {
  if (cache.dir) {
    const auto file = cache_file(cache, *session.parabolic);
    if (try_load(session, file)) return true;
    session.schubert->compute_all();
    save(session, file);
    return false;
  }
  session.schubert->compute_all();
  return false;
}

}  // namespace flagcalc::app
