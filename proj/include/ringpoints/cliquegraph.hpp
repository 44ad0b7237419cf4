#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringpoints/geometry.hpp"

namespace ringpoints {

/// Undirected simple graph with one adjacency bit-vector per vertex.
class BitGraph {
public:
  BitGraph() = default;
  explicit BitGraph(std::uint32_t vertices);

  std::uint32_t size() const { return size_; }
  std::uint32_t words() const { return words_; }

  void add_edge(std::uint32_t i, std::uint32_t j);
  bool adjacent(std::uint32_t i, std::uint32_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  const std::uint64_t* row(std::uint32_t i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
  std::uint32_t degree(std::uint32_t i) const;
  std::uint64_t edge_count() const;
  /// Adjacency symmetric, no self-loops.
  bool is_consistent() const;
  bool is_clique(std::span<const std::uint32_t> vertices) const;

private:
  std::uint32_t size_ = 0;
  std::uint32_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class GraphVariant { full, rooted, delta_class, even_reduction, hamming };

std::string to_string(GraphVariant v);

/// A BitGraph whose vertices are points of Z_n^m, identified by their
/// row-major codes.
struct DistanceGraph {
  std::uint32_t n = 1;
  int m = 1;
  GraphVariant variant = GraphVariant::full;
  BitGraph graph;
  /// Row-major point code of each vertex.
  std::vector<std::uint64_t> labels;
  /// Points assumed present but not represented as vertices (root,
  /// anchor pair). A clique K yields the point set fixed + K.
  std::vector<std::uint64_t> fixed;
  /// For delta_class graphs: index of the anchoring edge class.
  std::optional<std::uint32_t> anchor_class;

  std::uint32_t vertex_count() const { return graph.size(); }
};

/// Vertex budget for graph construction.
inline constexpr std::uint64_t default_vertex_limit = 1u << 15;

DistanceGraph build_full(std::uint32_t n, int m, std::uint64_t vertex_limit = default_vertex_limit);
DistanceGraph build_rooted(std::uint32_t n, int m, std::uint64_t vertex_limit = default_vertex_limit);

/// The nonzero integral classes of D_{n,m}, in the fixed numbering used by
/// the delta family: ascending by the number of points at integral distance
/// to both 0 and the class representative, ties lexicographic.
std::vector<DeltaVec> delta_family_order(std::uint32_t n, int m);

/// Graph G_i anchored at 0 and the representative of class order[i]. Only
/// pairs whose class index is >= i are adjacent, and only points whose
/// classes to both anchors are >= i are vertices.
DistanceGraph build_delta_graph(std::uint32_t n, int m, const std::vector<DeltaVec>& order, std::uint32_t i);
std::vector<DistanceGraph> build_delta_family(std::uint32_t n, int m,
                                              std::uint64_t vertex_limit = default_vertex_limit);

struct SolverOptions {
  unsigned threads = 1;
  /// Wall-clock budget; zero means unlimited.
  std::chrono::milliseconds budget{0};
  /// A clique known in advance. The solver only searches for larger ones.
  std::vector<std::uint32_t> seed;
  /// Only cliques strictly larger than this are of interest; when none
  /// exists the result is empty but still exact.
  std::uint32_t lower_bound = 0;
};

struct CliqueResult {
  std::uint32_t size = 0;
  std::vector<std::uint32_t> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  /// False when the budget ran out; size is then only a lower bound.
  bool exact = true;
};

/// Exact maximum clique by branch and bound with greedy colouring bounds.
CliqueResult max_clique(const BitGraph& g, const SolverOptions& options = {});

/// Point set of a clique: fixed points plus the clique's labels.
std::vector<Point> clique_points(const DistanceGraph& g, std::span<const std::uint32_t> clique);

enum class Strategy { full, rooted, delta_family };

struct IOptions {
  Strategy strategy = Strategy::rooted;
  /// Split composite n into coprime prime-power factors.
  bool cartesian = true;
  /// Solve powers of two >= 4 on Z_{n/2}^m.
  bool even_reduction = true;
  /// Seed the search with the best known construction (m = 2).
  bool seed_constructions = true;
  SolverOptions solver;
  std::uint64_t vertex_limit = default_vertex_limit;
};

struct IValue {
  std::uint32_t n = 1;
  int m = 1;
  std::uint64_t value = 0;
  bool exact = true;
  std::vector<Point> witness;
  std::chrono::milliseconds elapsed{0};
  std::string method;
};

/// I(n, m): the largest integral point set of Z_n^m.
IValue I_of(std::uint32_t n, int m, const IOptions& options = {});

} // namespace ringpoints
