#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ringpoints/cliquegraph.hpp"

namespace oracle {

inline bool square_mod(std::uint64_t s, std::uint64_t n) {
  for (std::uint64_t d = 0; d < n; ++d)
    if (d * d % n == s % n)
      return true;
  return false;
}

/// Pairwise integrality straight from the definition.
inline bool integral_set(const std::vector<ringpoints::Point>& pts, std::uint32_t n) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < pts[i].dim(); ++k) {
        std::uint64_t d = (pts[i][k] + n - pts[j][k]) % n;
        s += d * d;
      }
      if (!square_mod(s, n))
        return false;
    }
  return true;
}

inline bool distinct(std::vector<ringpoints::Point> pts) {
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

/// Largest clique by plain include/exclude recursion.
class NaiveClique {
public:
  explicit NaiveClique(const std::vector<std::vector<bool>>& adj) : adj_(adj) {}

  std::size_t solve() {
    std::vector<int> current;
    go(0, current);
    return best_;
  }

private:
  void go(std::size_t v, std::vector<int>& current) {
    if (current.size() + (adj_.size() - v) <= best_)
      return;
    if (v == adj_.size()) {
      best_ = std::max(best_, current.size());
      return;
    }
    bool ok = true;
    for (int u : current)
      ok = ok && adj_[static_cast<std::size_t>(u)][v];
    if (ok) {
      current.push_back(static_cast<int>(v));
      go(v + 1, current);
      current.pop_back();
    }
    go(v + 1, current);
  }

  const std::vector<std::vector<bool>>& adj_;
  std::size_t best_ = 0;
};

} // namespace oracle
