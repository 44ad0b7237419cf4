#include "ringpoints/reductions.hpp"

#include <algorithm>

#include "ringpoints/errors.hpp"

namespace ringpoints {

namespace {

/// Points (u, j * k) for u in Z_n and 0 <= j < n / k.
Construction column_construction(std::uint32_t n, std::uint32_t k, std::string source) {
  Construction c;
  c.n = n;
  c.m = 2;
  c.source = std::move(source);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t j = 0; j < n / k; ++j)
      c.points.push_back(Point{u, j * k});
  c.bound = c.points.size();
  return c;
}

std::uint32_t crt(std::uint32_t xa, std::uint32_t a, std::uint32_t xb, std::uint32_t b) {
  // x = xa + a * t with a * t = xb - xa (mod b)
  if (b == 1)
    return xa % a;
  auto inv = inverse_mod(Residue{a % b}, b).value;
  std::uint64_t diff = (xb + b - xa % b) % b;
  std::uint64_t t = diff * inv % b;
  return static_cast<std::uint32_t>(xa + std::uint64_t{a} * t);
}

} // namespace

std::uint64_t lemma1_bound(std::uint32_t n) {
  std::uint64_t bound = n;
  for (auto [p, r] : factorize(n))
    bound *= ipow(p, r / 2);
  return bound;
}

std::optional<std::uint64_t> lemma2_bound(std::uint32_t n) {
  if (n % 4 != 2)
    return std::nullopt;
  std::uint64_t bound = 2 * std::uint64_t{n};
  for (auto [p, r] : factorize(n))
    if (p != 2)
      bound *= ipow(p, r / 2);
  return bound;
}

Construction lemma1_points(std::uint32_t n) {
  if (n == 0)
    throw invalid_input("modulus must be positive");
  std::uint64_t k = 1;
  for (auto [p, r] : factorize(n))
    k *= ipow(p, (r + 1) / 2);
  return column_construction(n, static_cast<std::uint32_t>(k), "lemma1");
}

Construction lemma2_points(std::uint32_t n) {
  if (n % 4 != 2)
    throw not_applicable("the second construction needs n = 2 (mod 4), got " + std::to_string(n));
  std::uint64_t k = 1;
  for (auto [p, r] : factorize(n))
    if (p != 2)
      k *= ipow(p, (r + 1) / 2);
  return column_construction(n, static_cast<std::uint32_t>(k), "lemma2");
}

std::uint64_t conjectured_I2(std::uint32_t n) { return std::max(lemma1_bound(n), lemma2_bound(n).value_or(0)); }

std::vector<Point> cartesian_compose(std::span<const Point> over_a, std::uint32_t a, std::span<const Point> over_b,
                                     std::uint32_t b) {
  if (a == 0 || b == 0 || gcd(a, b) != 1)
    throw invalid_input("moduli " + std::to_string(a) + " and " + std::to_string(b) + " are not coprime");
  if (over_a.empty() || over_b.empty())
    return {};
  const int m = over_a.front().dim();
  Space sa(a, m), sb(b, m);
  if (!sa.is_integral_set(over_a) || !sb.is_integral_set(over_b))
    throw invalid_input("cartesian_compose needs integral point sets");
  std::vector<Point> out;
  out.reserve(over_a.size() * over_b.size());
  for (const auto& pa : over_a)
    for (const auto& pb : over_b) {
      if (pb.dim() != m)
        throw invalid_input("dimension mismatch");
      Point q(m);
      for (int i = 0; i < m; ++i)
        q[i] = crt(pa[i], a, pb[i], b);
      out.push_back(q);
    }
  return out;
}

std::uint32_t even_weight(const Point& u, const Point& v, std::uint32_t two_n) {
  if (u.dim() != v.dim())
    throw invalid_input("dimension mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < u.dim(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(u[i]) - static_cast<std::int64_t>(v[i]);
    s += d * d;
  }
  return static_cast<std::uint32_t>(s % two_n);
}

DistanceGraph even_reduction_graph(std::uint32_t two_n, int m, bool rooted, std::uint64_t vertex_limit) {
  if (two_n < 2 || two_n % 2 != 0)
    throw invalid_input("even reduction needs an even modulus, got " + std::to_string(two_n));
  const auto n = two_n / 2;
  if (rooted && n % 2 != 0)
    throw invalid_input("the even-reduction weight is only translation invariant for 2n with n even");
  Space space(n, m);
  if (space.size() > vertex_limit)
    throw resource_limit("even-reduction graph over Z_" + std::to_string(n) + "^" + std::to_string(m) +
                         " exceeds the vertex limit");
  SquareTable sq(two_n);
  const Point zero = space.decode(0);
  std::vector<std::uint64_t> labels;
  std::vector<Point> points;
  for (std::uint64_t x = rooted ? 1 : 0; x < space.size(); ++x) {
    auto p = space.decode(x);
    if (rooted && !sq.is_square(even_weight(p, zero, two_n)))
      continue;
    labels.push_back(x);
    points.push_back(p);
  }
  DistanceGraph g;
  g.n = n;
  g.m = m;
  g.variant = GraphVariant::even_reduction;
  g.graph = BitGraph(static_cast<std::uint32_t>(labels.size()));
  for (std::uint32_t i = 0; i < points.size(); ++i)
    for (std::uint32_t j = i + 1; j < points.size(); ++j)
      if (sq.is_square(even_weight(points[i], points[j], two_n)))
        g.graph.add_edge(i, j);
  g.labels = std::move(labels);
  if (rooted)
    g.fixed = {0};
  return g;
}

std::vector<Point> even_lift(std::span<const Point> points, std::uint32_t n) {
  std::vector<Point> out;
  for (const auto& p : points) {
    const int m = p.dim();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      Point q(m);
      for (int i = 0; i < m; ++i)
        q[i] = p[i] + ((mask >> i) & 1u ? n : 0);
      out.push_back(q);
    }
  }
  return out;
}

std::uint32_t hamming_distance(const Point& u, const Point& v) {
  if (u.dim() != v.dim())
    throw invalid_input("dimension mismatch");
  std::uint32_t h = 0;
  for (int i = 0; i < u.dim(); ++i)
    h += u[i] != v[i];
  return h;
}

DistanceGraph hamming_graph_I3(int m, bool rooted, std::uint64_t vertex_limit) {
  Space space(3, m);
  if (space.size() > vertex_limit)
    throw resource_limit("Z_3^" + std::to_string(m) + " exceeds the vertex limit");
  const Point zero = space.decode(0);
  std::vector<std::uint64_t> labels;
  std::vector<Point> points;
  for (std::uint64_t x = rooted ? 1 : 0; x < space.size(); ++x) {
    auto p = space.decode(x);
    if (rooted && hamming_distance(p, zero) % 3 == 2)
      continue;
    labels.push_back(x);
    points.push_back(p);
  }
  DistanceGraph g;
  g.n = 3;
  g.m = m;
  g.variant = GraphVariant::hamming;
  g.graph = BitGraph(static_cast<std::uint32_t>(labels.size()));
  for (std::uint32_t i = 0; i < points.size(); ++i)
    for (std::uint32_t j = i + 1; j < points.size(); ++j)
      if (hamming_distance(points[i], points[j]) % 3 != 2)
        g.graph.add_edge(i, j);
  g.labels = std::move(labels);
  if (rooted)
    g.fixed = {0};
  return g;
}

std::vector<Point> ilig_set(std::uint32_t p) {
  const auto w = omega(p).value;
  std::vector<Point> out;
  for (auto q : SquareTable(p).squares()) {
    auto y = static_cast<std::uint32_t>(std::uint64_t{w} * q % p);
    out.push_back(Point{q, y});
    if (q != 0)
      out.push_back(Point{q, (p - y) % p});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t semi_general_upper(std::uint32_t n) {
  if (n < 2)
    throw invalid_input("semi_general_upper needs n >= 2");
  std::uint64_t best = 2 * std::uint64_t{n};
  if (n % 2 == 1 && is_prime(n))
    best = std::min<std::uint64_t>(best, n + 1);
  for (auto [p, a] : factorize(n)) {
    // p^a divides n and ceil((a + 1) / 2) <= a, so every term is an integer.
    auto c = (a + 2) / 2;
    auto h = n + n / ipow(p, c) + n / ipow(p, a);
    best = std::min(best, h);
  }
  return best;
}

BoundReport integral_bounds(std::uint32_t n) {
  BoundReport r;
  r.n = n;
  auto l1 = lemma1_bound(n);
  auto l2 = lemma2_bound(n);
  r.lower = l2 && *l2 > l1 ? Bound{*l2, "lemma2"} : Bound{l1, "lemma1"};
  r.upper = {std::uint64_t{n} * n, "trivial n^2"};
  return r;
}

BoundReport semi_general_bounds(std::uint32_t n) {
  BoundReport r;
  r.n = n;
  r.lower = {std::min<std::uint64_t>(std::uint64_t{n} * n, 2), "two points"};
  if (n < 2) {
    r.upper = {1, "trivial n^2"};
    return r;
  }
  auto value = semi_general_upper(n);
  std::string source = "2n";
  if (n % 2 == 1 && is_prime(n) && value == n + 1u)
    source = "p+1";
  else if (value < 2 * std::uint64_t{n})
    source = "prime-power";
  r.upper = {value, source};
  return r;
}

std::vector<std::uint32_t> ConjectureReport::counterexamples() const {
  std::vector<std::uint32_t> out;
  for (const auto& e : entries)
    if (e.verified && e.exact != e.conjectured)
      out.push_back(e.n);
  return out;
}

std::vector<std::uint32_t> ConjectureReport::unverified() const {
  std::vector<std::uint32_t> out;
  for (const auto& e : entries)
    if (!e.verified)
      out.push_back(e.n);
  return out;
}

ConjectureReport verify_conjecture(std::uint32_t n_max, const IOptions& options) {
  if (n_max < 1)
    throw invalid_input("n_max must be positive");
  auto opts = options;
  opts.seed_constructions = false;
  opts.cartesian = true;
  ConjectureReport report;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    auto value = I_of(n, 2, opts);
    report.entries.push_back({n, value.value, conjectured_I2(n), value.exact, value.elapsed});
  }
  return report;
}

} // namespace ringpoints
