#include "ringpoints/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ringpoints/errors.hpp"

#ifndef RINGPOINTS_DATA_DIR
#define RINGPOINTS_DATA_DIR "data"
#endif

namespace ringpoints {

std::vector<ExpectedCell> parse_expected(std::istream& in) {
  std::vector<ExpectedCell> cells;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    ExpectedCell cell;
    std::string value;
    if (!(fields >> cell.n))
      continue;
    if (!(fields >> cell.m >> value))
      throw invalid_input("expected-value line " + std::to_string(lineno) + " is malformed");
    if (value.rfind(">=", 0) == 0) {
      cell.lower_bound = true;
      value.erase(0, 2);
    }
    try {
      cell.value = std::stoull(value);
    } catch (const std::exception&) {
      throw invalid_input("expected-value line " + std::to_string(lineno) + " has a bad value");
    }
    cells.push_back(cell);
  }
  return cells;
}

std::vector<ExpectedCell> load_expected(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw invalid_input("cannot open " + file.string());
  return parse_expected(in);
}

std::optional<ExpectedCell> find_expected(const std::vector<ExpectedCell>& cells, std::uint32_t n, int m) {
  for (const auto& c : cells)
    if (c.n == n && c.m == m)
      return c;
  return std::nullopt;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("RINGPOINTS_DATA"); env && *env)
    return env;
  return RINGPOINTS_DATA_DIR;
}

} // namespace ringpoints
