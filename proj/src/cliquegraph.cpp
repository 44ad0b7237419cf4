#include "ringpoints/cliquegraph.hpp"

#include <algorithm>
#include <map>

#include "ringpoints/errors.hpp"

namespace ringpoints {

std::string to_string(GraphVariant v) {
  switch (v) {
  case GraphVariant::full:
    return "full";
  case GraphVariant::rooted:
    return "rooted";
  case GraphVariant::delta_class:
    return "delta-family";
  case GraphVariant::even_reduction:
    return "even-reduction";
  case GraphVariant::hamming:
    return "hamming";
  }
  return "unknown";
}

namespace {

void check_budget(std::uint32_t n, int m, std::uint64_t limit) {
  Space space(n, m);
  if (space.size() > limit)
    throw resource_limit("Z_" + std::to_string(n) + "^" + std::to_string(m) + " has " +
                         std::to_string(space.size()) + " points, over the vertex limit " + std::to_string(limit));
}

/// Difference arithmetic on row-major codes of Z_n^m.
class CodeArith {
public:
  CodeArith(std::uint32_t n, int m) : space_(n, m) {}

  const Space& space() const { return space_; }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    const auto n = space_.modulus();
    std::uint64_t out = 0, scale = 1;
    for (int i = 0; i < space_.dim(); ++i) {
      auto x = a % n, y = b % n;
      out += ((x + n - y) % n) * scale;
      scale *= n;
      a /= n;
      b /= n;
    }
    return out;
  }

  /// Integrality of every difference vector, indexed by its code.
  std::vector<char> integral_differences() const {
    std::vector<char> table(space_.size());
    for (std::uint64_t d = 0; d < space_.size(); ++d)
      table[d] = space_.is_integral_delta(space_.delta(space_.decode(d), space_.decode(0)));
    return table;
  }

private:
  Space space_;
};

DistanceGraph induced(std::uint32_t n, int m, GraphVariant variant, std::vector<std::uint64_t> labels,
                      const CodeArith& arith, const std::vector<char>& integral) {
  DistanceGraph g;
  g.n = n;
  g.m = m;
  g.variant = variant;
  g.graph = BitGraph(static_cast<std::uint32_t>(labels.size()));
  for (std::uint32_t i = 0; i < labels.size(); ++i)
    for (std::uint32_t j = i + 1; j < labels.size(); ++j)
      if (integral[arith.sub(labels[i], labels[j])])
        g.graph.add_edge(i, j);
  g.labels = std::move(labels);
  return g;
}

std::uint64_t delta_key(const DeltaVec& d, std::uint32_t n) {
  std::uint64_t key = 0;
  for (int i = 0; i < d.dim(); ++i)
    key = key * (n / 2 + 1) + d[i];
  return key;
}

Point delta_point(const DeltaVec& d) {
  Point p(d.dim());
  for (int i = 0; i < d.dim(); ++i)
    p[i] = d[i];
  return p;
}

} // namespace

DistanceGraph build_full(std::uint32_t n, int m, std::uint64_t vertex_limit) {
  check_budget(n, m, vertex_limit);
  CodeArith arith(n, m);
  std::vector<std::uint64_t> labels(arith.space().size());
  for (std::uint64_t i = 0; i < labels.size(); ++i)
    labels[i] = i;
  return induced(n, m, GraphVariant::full, std::move(labels), arith, arith.integral_differences());
}

DistanceGraph build_rooted(std::uint32_t n, int m, std::uint64_t vertex_limit) {
  check_budget(n, m, vertex_limit);
  CodeArith arith(n, m);
  auto integral = arith.integral_differences();
  std::vector<std::uint64_t> labels;
  for (std::uint64_t i = 1; i < arith.space().size(); ++i)
    if (integral[i])
      labels.push_back(i);
  auto g = induced(n, m, GraphVariant::rooted, std::move(labels), arith, integral);
  g.fixed = {0};
  return g;
}

std::vector<DeltaVec> delta_family_order(std::uint32_t n, int m) {
  CodeArith arith(n, m);
  const auto& space = arith.space();
  auto integral = arith.integral_differences();
  std::map<std::uint64_t, DeltaVec> classes;
  const auto zero = space.decode(0);
  for (std::uint64_t x = 1; x < space.size(); ++x)
    if (integral[x]) {
      auto d = space.delta(space.decode(x), zero);
      classes.emplace(delta_key(d, n), d);
    }
  std::vector<std::pair<std::uint64_t, DeltaVec>> keyed;
  for (const auto& [key, d] : classes) {
    auto anchor = space.encode(delta_point(d));
    std::uint64_t common = 0;
    for (std::uint64_t x = 1; x < space.size(); ++x)
      if (x != anchor && integral[x] && integral[arith.sub(x, anchor)])
        ++common;
    keyed.emplace_back(common, d);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first)
      return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<DeltaVec> order;
  for (auto& [count, d] : keyed)
    order.push_back(d);
  return order;
}

DistanceGraph build_delta_graph(std::uint32_t n, int m, const std::vector<DeltaVec>& order, std::uint32_t i) {
  if (i >= order.size())
    throw invalid_input("edge class index out of range");
  CodeArith arith(n, m);
  const auto& space = arith.space();
  // Class index of every difference code, -1 when not integral.
  std::map<std::uint64_t, std::int64_t> index_of;
  for (std::size_t k = 0; k < order.size(); ++k)
    index_of[delta_key(order[k], n)] = static_cast<std::int64_t>(k);
  const auto zero = space.decode(0);
  std::vector<std::int64_t> class_index(space.size(), -1);
  for (std::uint64_t x = 1; x < space.size(); ++x) {
    auto it = index_of.find(delta_key(space.delta(space.decode(x), zero), n));
    if (it != index_of.end())
      class_index[x] = it->second;
  }
  const auto anchor = space.encode(delta_point(order[i]));
  const auto lo = static_cast<std::int64_t>(i);
  std::vector<std::uint64_t> labels;
  for (std::uint64_t x = 1; x < space.size(); ++x)
    if (x != anchor && class_index[x] >= lo && class_index[arith.sub(x, anchor)] >= lo)
      labels.push_back(x);

  DistanceGraph g;
  g.n = n;
  g.m = m;
  g.variant = GraphVariant::delta_class;
  g.anchor_class = i;
  g.fixed = {0, anchor};
  g.graph = BitGraph(static_cast<std::uint32_t>(labels.size()));
  for (std::uint32_t a = 0; a < labels.size(); ++a)
    for (std::uint32_t b = a + 1; b < labels.size(); ++b)
      if (class_index[arith.sub(labels[a], labels[b])] >= lo)
        g.graph.add_edge(a, b);
  g.labels = std::move(labels);
  return g;
}

std::vector<DistanceGraph> build_delta_family(std::uint32_t n, int m, std::uint64_t vertex_limit) {
  check_budget(n, m, vertex_limit);
  auto order = delta_family_order(n, m);
  std::vector<DistanceGraph> family;
  for (std::uint32_t i = 0; i < order.size(); ++i)
    family.push_back(build_delta_graph(n, m, order, i));
  return family;
}

std::vector<Point> clique_points(const DistanceGraph& g, std::span<const std::uint32_t> clique) {
  Space space(g.n, g.m);
  std::vector<Point> points;
  for (auto f : g.fixed)
    points.push_back(space.decode(f));
  for (auto v : clique)
    points.push_back(space.decode(g.labels.at(v)));
  return points;
}

} // namespace ringpoints
