#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringpoints/cliquegraph.hpp"
#include "ringpoints/geometry.hpp"

namespace ringpoints {

/// A point set over Z_n^m together with the cardinality its construction promises.
struct Construction {
  std::uint32_t n = 1;
  int m = 2;
  std::vector<Point> points;
  std::uint64_t bound = 0;
  std::string source;
};

/// Points (u, v * k) with k = prod p_i^ceil(r_i / 2); n * prod p_i^floor(r_i / 2) of them.
Construction lemma1_points(std::uint32_t n);
/// For n = 2 (mod 4): 2n * prod_{p odd} p^floor(r / 2) points. Throws not_applicable otherwise.
Construction lemma2_points(std::uint32_t n);
std::uint64_t lemma1_bound(std::uint32_t n);
std::optional<std::uint64_t> lemma2_bound(std::uint32_t n);
/// The larger of the two construction bounds: the conjectured value of I(n, 2).
std::uint64_t conjectured_I2(std::uint32_t n);

/// CRT product of an integral set over Z_a^m and one over Z_b^m, gcd(a, b) = 1.
std::vector<Point> cartesian_compose(std::span<const Point> over_a, std::uint32_t a, std::span<const Point> over_b,
                                     std::uint32_t b);

/// w(u, v) = sum (u_i - v_i)^2 mod 2n on canonical lifts of u, v in Z_n^m.
std::uint32_t even_weight(const Point& u, const Point& v, std::uint32_t two_n);
/// Graph on Z_n^m (n = two_n / 2) joining u, v when even_weight(u, v) is a
/// square mod two_n. Cliques are the members of H_{2n}^m. When n is even the
/// weight is translation invariant and rooted = true fixes the origin.
DistanceGraph even_reduction_graph(std::uint32_t two_n, int m, bool rooted = false,
                                   std::uint64_t vertex_limit = default_vertex_limit);
/// All 2^m preimages in Z_{2n}^m of each point of a set over Z_n^m.
std::vector<Point> even_lift(std::span<const Point> points, std::uint32_t n);

/// Z_3^m joined when the Hamming distance is not 2 (mod 3).
DistanceGraph hamming_graph_I3(int m, bool rooted = false, std::uint64_t vertex_limit = default_vertex_limit);
std::uint32_t hamming_distance(const Point& u, const Point& v);

/// {(q, +-omega(p) q) : q a square mod p}, p prime with p = 1 (mod 4).
std::vector<Point> ilig_set(std::uint32_t p);

/// Upper bound on the semi-general maximum over Z_n^2: the minimum of 2n,
/// p + 1 for odd primes, and n (1 + p^-ceil((a+1)/2) + p^-a) over p^a || n.
std::uint64_t semi_general_upper(std::uint32_t n);

struct Bound {
  std::uint64_t value = 0;
  std::string source;
};

struct BoundReport {
  std::uint32_t n = 1;
  int m = 2;
  Bound lower;
  Bound upper;
  std::optional<std::uint64_t> exact;

  bool consistent() const { return lower.value <= upper.value && (!exact || (lower.value <= *exact && *exact <= upper.value)); }
};

/// Construction lower bound and trivial n^2 upper bound for I(n, 2).
BoundReport integral_bounds(std::uint32_t n);
/// Bounds for the semi-general maximum over Z_n^2.
BoundReport semi_general_bounds(std::uint32_t n);

struct ConjectureEntry {
  std::uint32_t n = 1;
  std::uint64_t exact = 0;
  std::uint64_t conjectured = 0;
  /// False when the search budget ran out; exact is then a lower bound.
  bool verified = true;
  std::chrono::milliseconds elapsed{0};

  bool holds() const { return verified && exact == conjectured; }
};

struct ConjectureReport {
  std::vector<ConjectureEntry> entries;

  std::vector<std::uint32_t> counterexamples() const;
  std::vector<std::uint32_t> unverified() const;
  bool all_tight() const { return counterexamples().empty() && unverified().empty(); }
};

/// Exact I(n, 2) for every n <= n_max against conjectured_I2(n). The search
/// is not seeded with the constructions it is compared against.
ConjectureReport verify_conjecture(std::uint32_t n_max, const IOptions& options = {});

} // namespace ringpoints
