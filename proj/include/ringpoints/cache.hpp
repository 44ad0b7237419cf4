#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringpoints/geometry.hpp"

namespace ringpoints {

/// One computed maximum. mode is "I", "semi-general" or "general".
struct ResultRecord {
  std::uint32_t n = 1;
  int m = 2;
  std::string mode = "I";
  std::uint64_t value = 0;
  bool exact = true;
  std::vector<Point> witness;
  std::int64_t elapsed_ms = 0;
  std::string variant;
  std::string version;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

nlohmann::json to_json(const ResultRecord& r);
/// Throws invalid_input on missing or mistyped fields.
ResultRecord record_from_json(const nlohmann::json& j);

/// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string checksum(const nlohmann::json& records);

/// The cache path: the flag if given, else $RINGPOINTS_CACHE, else
/// ./ringpoints-cache.json.
std::filesystem::path cache_path(const std::optional<std::string>& flag);

/// JSON file of ResultRecords keyed by (n, m, mode).
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path path);

  /// Reads the file if it exists. Throws invalid_input when it does not
  /// parse or its checksum does not match.
  void load();
  /// Writes to a temporary file in the same directory, then renames it.
  void save() const;

  const std::filesystem::path& path() const { return path_; }
  const std::vector<ResultRecord>& records() const { return records_; }
  std::optional<ResultRecord> find(std::uint32_t n, int m, const std::string& mode) const;
  /// Inserts or replaces. An exact record is never replaced; an inexact one
  /// only by an exact one or a larger lower bound. Returns whether it changed.
  bool store(const ResultRecord& r);

private:
  std::filesystem::path path_;
  std::vector<ResultRecord> records_;
};

} // namespace ringpoints
