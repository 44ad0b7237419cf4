#include <algorithm>
#include <set>

#include "ringpoints/cliquegraph.hpp"
#include "ringpoints/errors.hpp"
#include "ringpoints/reductions.hpp"

namespace ringpoints {

namespace {

using clock_type = std::chrono::steady_clock;

/// Vertices of g whose labels form, together with g.fixed, the given point
/// set; empty if the set does not fit the graph or is not a clique there.
std::vector<std::uint32_t> seed_from(const DistanceGraph& g, std::span<const Point> points) {
  Space space(g.n, g.m);
  std::set<std::uint64_t> wanted;
  for (const auto& p : points)
    wanted.insert(space.encode(p));
  for (auto f : g.fixed)
    if (!wanted.erase(f))
      return {};
  std::vector<std::uint32_t> seed;
  for (std::uint32_t v = 0; v < g.labels.size(); ++v)
    if (wanted.count(g.labels[v]))
      seed.push_back(v);
  if (seed.size() != wanted.size() || !g.graph.is_clique(seed))
    return {};
  return seed;
}

std::vector<Point> best_construction(std::uint32_t n, int m) {
  if (m != 2)
    return {};
  if (auto l2 = lemma2_bound(n); l2 && *l2 > lemma1_bound(n))
    return lemma2_points(n).points;
  return lemma1_points(n).points;
}

std::vector<Point> project(std::span<const Point> points, std::uint32_t n) {
  std::set<Point> out;
  for (auto p : points) {
    for (int i = 0; i < p.dim(); ++i)
      p[i] %= n;
    out.insert(p);
  }
  return {out.begin(), out.end()};
}

SolverOptions remaining(const SolverOptions& base, clock_type::time_point start) {
  auto opts = base;
  if (base.budget.count() > 0) {
    auto used = std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start);
    opts.budget = std::max(std::chrono::milliseconds(1), base.budget - used);
  }
  return opts;
}

IValue solve_graph(const DistanceGraph& g, std::span<const Point> seed_points, const SolverOptions& solver) {
  auto opts = solver;
  opts.seed = seed_from(g, seed_points);
  auto r = max_clique(g.graph, opts);
  IValue v;
  v.n = g.n;
  v.m = g.m;
  v.exact = r.exact;
  v.witness = clique_points(g, r.witness);
  v.value = v.witness.size();
  return v;
}

IValue delta_family_search(std::uint32_t n, int m, std::span<const Point> seed_points, const IOptions& options,
                           clock_type::time_point start) {
  Space space(n, m);
  if (space.size() > options.vertex_limit)
    throw resource_limit("Z_n^m exceeds the vertex limit");
  auto order = delta_family_order(n, m);
  IValue best;
  best.n = n;
  best.m = m;
  best.witness = {space.decode(0)};
  if (!seed_points.empty() && space.is_integral_set(seed_points))
    best.witness.assign(seed_points.begin(), seed_points.end());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    auto g = build_delta_graph(n, m, order, i);
    if (best.witness.size() < 2)
      best.witness = clique_points(g, {});
    auto opts = remaining(options.solver, start);
    opts.lower_bound = static_cast<std::uint32_t>(best.witness.size() - 2);
    auto r = max_clique(g.graph, opts);
    if (!r.exact)
      best.exact = false;
    if (r.size + 2 > best.witness.size())
      best.witness = clique_points(g, r.witness);
    if (!r.exact)
      break;
  }
  best.value = best.witness.size();
  return best;
}

IValue prime_power(std::uint32_t n, int m, const IOptions& options, clock_type::time_point start) {
  auto seed_points = options.seed_constructions ? best_construction(n, m) : std::vector<Point>{};

  if (options.even_reduction && n % 2 == 0 && n >= 4) {
    const auto half = n / 2;
    auto g = even_reduction_graph(n, m, half % 2 == 0, options.vertex_limit);
    auto reduced = solve_graph(g, project(seed_points, half), remaining(options.solver, start));
    IValue v;
    v.n = n;
    v.m = m;
    v.exact = reduced.exact;
    v.witness = even_lift(reduced.witness, half);
    v.value = v.witness.size();
    v.method = "even-reduction";
    return v;
  }

  switch (options.strategy) {
  case Strategy::full: {
    auto v = solve_graph(build_full(n, m, options.vertex_limit), seed_points, remaining(options.solver, start));
    v.method = "full";
    return v;
  }
  case Strategy::rooted: {
    auto v = solve_graph(build_rooted(n, m, options.vertex_limit), seed_points, remaining(options.solver, start));
    v.method = "rooted";
    return v;
  }
  case Strategy::delta_family: {
    auto v = delta_family_search(n, m, seed_points, options, start);
    v.method = "delta-family";
    return v;
  }
  }
  throw invalid_input("unknown strategy");
}

} // namespace

IValue I_of(std::uint32_t n, int m, const IOptions& options) {
  const auto start = clock_type::now();
  Space space(n, m);
  IValue v;
  v.n = n;
  v.m = m;
  if (m == 1 || n <= 2) {
    // Every pair is integral: n = 1, 2 square everything, m = 1 is a square already.
    if (space.size() > options.vertex_limit * 64)
      throw resource_limit("witness too large");
    for (std::uint64_t x = 0; x < space.size(); ++x)
      v.witness.push_back(space.decode(x));
    v.value = space.size();
    v.method = "closed form";
  } else if (auto f = factorize(n); options.cartesian && f.size() > 1) {
    std::uint32_t modulus = 1;
    v.witness = {space.decode(0)};
    v.witness.front() = Point(m);
    std::vector<std::string> parts;
    for (auto [p, r] : f) {
      auto q = static_cast<std::uint32_t>(ipow(p, r));
      auto opts = options;
      opts.solver = remaining(options.solver, start);
      auto part = I_of(q, m, opts);
      v.exact = v.exact && part.exact;
      v.witness = cartesian_compose(v.witness, modulus, part.witness, q);
      modulus *= q;
      parts.push_back(std::to_string(q) + ":" + part.method);
    }
    v.value = v.witness.size();
    v.method = "cartesian";
    for (const auto& part : parts)
      v.method += " " + part;
  } else {
    v = prime_power(n, m, options, start);
  }
  v.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start);
  return v;
}

} // namespace ringpoints
