#include "ringpoints/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ringpoints/errors.hpp"

namespace ringpoints {

using nlohmann::json;

json to_json(const ResultRecord& r) {
  json witness = json::array();
  for (const auto& p : r.witness) {
    json coords = json::array();
    for (int i = 0; i < p.dim(); ++i)
      coords.push_back(p[i]);
    witness.push_back(std::move(coords));
  }
  return json{{"n", r.n},
              {"m", r.m},
              {"mode", r.mode},
              {"value", r.value},
              {"exact", r.exact},
              {"witness", std::move(witness)},
              {"elapsed_ms", r.elapsed_ms},
              {"variant", r.variant},
              {"version", r.version}};
}

ResultRecord record_from_json(const json& j) {
  try {
    ResultRecord r;
    r.n = j.at("n").get<std::uint32_t>();
    r.m = j.at("m").get<int>();
    r.mode = j.at("mode").get<std::string>();
    r.value = j.at("value").get<std::uint64_t>();
    r.exact = j.at("exact").get<bool>();
    for (const auto& coords : j.at("witness")) {
      if (!coords.is_array() || coords.empty() || coords.size() > static_cast<std::size_t>(max_dimension))
        throw invalid_input("malformed witness point");
      Point p(static_cast<int>(coords.size()));
      for (std::size_t i = 0; i < coords.size(); ++i)
        p[static_cast<int>(i)] = coords[i].get<std::uint32_t>();
      r.witness.push_back(p);
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    r.variant = j.at("variant").get<std::string>();
    r.version = j.at("version").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw invalid_input(std::string("malformed result record: ") + e.what());
  }
}

std::string checksum(const json& records) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : records.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

std::filesystem::path cache_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty())
    return *flag;
  if (const char* env = std::getenv("RINGPOINTS_CACHE"); env && *env)
    return env;
  return "ringpoints-cache.json";
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

void ResultCache::load() {
  records_.clear();
  std::ifstream in(path_);
  if (!in)
    return;
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw invalid_input("cache " + path_.string() + " does not parse: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("records") || !doc.contains("checksum"))
    throw invalid_input("cache " + path_.string() + " lacks records or checksum");
  if (doc["checksum"] != checksum(doc["records"]))
    throw invalid_input("cache " + path_.string() + " is corrupt: checksum mismatch");
  for (const auto& r : doc["records"])
    records_.push_back(record_from_json(r));
}

void ResultCache::save() const {
  json records = json::array();
  for (const auto& r : records_)
    records.push_back(to_json(r));
  json doc{{"format", 1}, {"records", records}, {"checksum", checksum(records)}};
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      throw invalid_input("cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out)
      throw invalid_input("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path_);
}

std::optional<ResultRecord> ResultCache::find(std::uint32_t n, int m, const std::string& mode) const {
  for (const auto& r : records_)
    if (r.n == n && r.m == m && r.mode == mode)
      return r;
  return std::nullopt;
}

bool ResultCache::store(const ResultRecord& r) {
  for (auto& old : records_) {
    if (old.n != r.n || old.m != r.m || old.mode != r.mode)
      continue;
    if (old.exact)
      return false;
    if (!r.exact && r.value <= old.value)
      return false;
    old = r;
    return true;
  }
  records_.push_back(r);
  return true;
}

} // namespace ringpoints
