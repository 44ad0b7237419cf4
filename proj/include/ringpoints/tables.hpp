#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ringpoints {

struct ExpectedCell {
  std::uint32_t n = 1;
  int m = 2;
  std::uint64_t value = 0;
  /// Only a lower bound is published.
  bool lower_bound = false;
};

/// Lines "n m value" or "n m >=value"; '#' starts a comment.
std::vector<ExpectedCell> parse_expected(std::istream& in);
std::vector<ExpectedCell> load_expected(const std::filesystem::path& file);
std::optional<ExpectedCell> find_expected(const std::vector<ExpectedCell>& cells, std::uint32_t n, int m);

/// Directory holding table1.txt .. table3.txt: $RINGPOINTS_DATA if set,
/// else the source tree's data directory.
std::filesystem::path data_dir();

} // namespace ringpoints
