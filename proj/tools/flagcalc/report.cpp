#include "app.hpp"

#include <algorithm>

namespace flagcalc::app {

int VerifyReport::violations() const {
  return static_cast<int>(std::count_if(tuples.begin(), tuples.end(), [](const TupleRow& r) { return r.violation; }));
}

int VerifyReport::checked() const {
  return static_cast<int>(
      std::count_if(tuples.begin(), tuples.end(), [](const TupleRow& r) { return !r.invariant_dims.empty(); }));
}

Json to_json(const VerifyReport& report) {
  Json doc;
  doc["group"] = {{"type", std::string(1, report.type)}, {"rank", report.rank}};
  doc["levi_simple"] = report.levi_simple;
  doc["s"] = report.s;
  doc["n_max"] = report.n_max;
  Json rows = Json::array();
  for (const TupleRow& row : report.tuples) {
    Json dims = Json::object();
    for (const auto& [n, d] : row.invariant_dims) dims[std::to_string(n)] = json_int(d);
    rows.push_back({{"words", row.words},
                    {"cup_top", json_int(row.cup_top)},
                    {"deformed_top", json_int(row.deformed_top)},
                    {"levi_movable", row.levi_movable},
                    {"invariant_dims", std::move(dims)},
                    {"status", row.violation ? "VIOLATION" : "OK"}});
  }
  doc["tuples"] = std::move(rows);
  doc["summary"] = {{"tuples", report.tuples.size()}, {"checked", report.checked()}, {"violations", report.violations()}};
  return doc;
}

VerifyReport report_from_json(const Json& doc) {
  VerifyReport report;
  const std::string type = doc.at("group").at("type").get<std::string>();
  if (type.size() != 1) throw Error("malformed group type in report: " + type);
  report.type = type[0];
  report.rank = doc.at("group").at("rank").get<int>();
  report.levi_simple = doc.at("levi_simple").get<std::vector<int>>();
  report.s = doc.at("s").get<int>();
  report.n_max = doc.at("n_max").get<int>();
  for (const Json& r : doc.at("tuples")) {
    TupleRow row;
    row.words = r.at("words").get<std::vector<std::string>>();
    row.cup_top = int_from_json(r.at("cup_top"));
    row.deformed_top = int_from_json(r.at("deformed_top"));
    row.levi_movable = r.at("levi_movable").get<bool>();
    for (const auto& [n, d] : r.at("invariant_dims").items()) row.invariant_dims[std::stoi(n)] = int_from_json(d);
    const std::string status = r.at("status").get<std::string>();
    if (status != "OK" && status != "VIOLATION") throw Error("unknown tuple status: " + status);
    row.violation = status == "VIOLATION";
    report.tuples.push_back(std::move(row));
  }
  return report;
}

std::string dump(const VerifyReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace flagcalc::app
