#include "ringpoints/dimacs.hpp"

#include <ostream>

namespace ringpoints {

namespace {

void write_point(std::ostream& out, std::uint64_t code, std::uint32_t n, int m) {
  std::vector<std::uint64_t> coords(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = code % n;
    code /= n;
  }
  for (int i = 0; i < m; ++i)
    out << (i ? "," : "") << coords[static_cast<std::size_t>(i)];
}

} // namespace

void write_dimacs(std::ostream& out, const DistanceGraph& g) {
  const auto& graph = g.graph;
  out << "c integral distance graph n=" << g.n << " m=" << g.m << " variant=" << to_string(g.variant) << '\n';
  out << "p edge " << graph.size() << ' ' << graph.edge_count() << '\n';
  for (std::uint32_t i = 0; i < graph.size(); ++i)
    for (std::uint32_t j = i + 1; j < graph.size(); ++j)
      if (graph.adjacent(i, j))
        out << "e " << i + 1 << ' ' << j + 1 << '\n';
}

void write_vertex_map(std::ostream& out, const DistanceGraph& g) {
  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    out << v + 1 << ' ';
    write_point(out, g.labels[v], g.n, g.m);
    out << '\n';
  }
  for (auto code : g.fixed) {
    out << "fixed ";
    write_point(out, code, g.n, g.m);
    out << '\n';
  }
}

} // namespace ringpoints
