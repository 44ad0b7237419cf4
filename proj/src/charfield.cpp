#include "ringpoints/charfield.hpp"

#include "ringpoints/errors.hpp"
#include "ringpoints/modring.hpp"

namespace ringpoints {

namespace {

std::uint64_t sq(std::uint64_t x, std::uint32_t n) { return x * x % n; }

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p))
    throw invalid_input("odd prime modulus required, got " + std::to_string(p));
}

std::int64_t signed_mod(std::int64_t x, std::uint32_t n) {
  auto r = x % static_cast<std::int64_t>(n);
  return r < 0 ? r + n : r;
}

} // namespace

DistMatrix::DistMatrix(int order, std::uint32_t n) : order_(order), n_(n) {
  if (order < 0)
    throw invalid_input("negative matrix order");
  if (n == 0 || n > max_modulus)
    throw invalid_input("modulus out of range");
  d_.assign(static_cast<std::size_t>(order) * order, 0);
}

DistMatrix DistMatrix::from_points(std::span<const Point> points, std::uint32_t n) {
  DistMatrix d(static_cast<int>(points.size()), n);
  Space space(n, points.empty() ? 1 : static_cast<int>(points[0].dim()));
  std::vector<std::int32_t> root(n, -1);
  for (std::uint64_t x = n; x-- > 0;)
    root[x * x % n] = static_cast<std::int32_t>(x);
  for (int j = 1; j < d.order_; ++j)
    for (int i = 0; i < j; ++i) {
      auto s = space.squared_norm(space.delta(points[i], points[j]));
      if (root[s] < 0)
        throw invalid_input(to_string(points[i]) + " and " + to_string(points[j]) + " are not at integral distance");
      d.set(i, j, static_cast<std::uint32_t>(root[s]));
    }
  return d;
}

void DistMatrix::set(int i, int j, std::uint32_t value) {
  if (i == j) {
    if (value % n_ != 0)
      throw invalid_input("diagonal distances are zero");
    return;
  }
  d_[static_cast<std::size_t>(i) * order_ + j] = value % n_;
  d_[static_cast<std::size_t>(j) * order_ + i] = value % n_;
}

DistMatrix DistMatrix::sub(std::span<const int> idx) const {
  DistMatrix out(static_cast<int>(idx.size()), n_);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      out.set(static_cast<int>(a), static_cast<int>(b), at(idx[a], idx[b]));
  return out;
}

std::uint32_t heron_v2(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t n) {
  if (n == 0)
    throw invalid_input("modulus must be positive");
  std::int64_t x = a % n, y = b % n, z = c % n;
  std::uint64_t v = static_cast<std::uint64_t>(signed_mod(x + y + z, n));
  v = v * static_cast<std::uint64_t>(signed_mod(x + y - z, n)) % n;
  v = v * static_cast<std::uint64_t>(signed_mod(x - y + z, n)) % n;
  v = v * static_cast<std::uint64_t>(signed_mod(-x + y + z, n)) % n;
  return static_cast<std::uint32_t>(v);
}

namespace {

Characteristic classify(std::uint32_t v2, std::uint32_t p) {
  if (v2 % p == 0)
    throw degenerate("degenerate simplex: volume vanishes mod " + std::to_string(p));
  if (sqrt_mod(Residue{v2 % p}, p))
    return {1};
  return {alpha(p).value};
}

} // namespace

Characteristic triangle_char(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t p) {
  require_odd_prime(p);
  if (a % p == 0 || b % p == 0 || c % p == 0)
    throw invalid_input("triangle sides must be nonzero");
  return classify(heron_v2(a, b, c, p), p);
}

QuadExt QuadExtRing::add(QuadExt a, QuadExt b) const { return {(a.x + b.x) % p_, (a.y + b.y) % p_}; }

QuadExt QuadExtRing::sub(QuadExt a, QuadExt b) const { return {(a.x + p_ - b.x) % p_, (a.y + p_ - b.y) % p_}; }

QuadExt QuadExtRing::mul(QuadExt a, QuadExt b) const {
  std::uint64_t p = p_;
  auto x = (std::uint64_t{a.x} * b.x + std::uint64_t{a.y} * b.y % p * c_) % p;
  auto y = (std::uint64_t{a.x} * b.y + std::uint64_t{a.y} * b.x) % p;
  return {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
}

QuadExt squared_distance(const QuadExtRing& ring, const std::array<QuadExt, 2>& u, const std::array<QuadExt, 2>& v) {
  auto dx = ring.sub(u[0], v[0]), dy = ring.sub(u[1], v[1]);
  return ring.add(ring.mul(dx, dx), ring.mul(dy, dy));
}

RealizedTriangle realize_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t p) {
  auto ch = triangle_char(a, b, c, p);
  a %= p;
  b %= p;
  c %= p;
  auto inv2a = inverse_mod(Residue{static_cast<std::uint32_t>(2ull * a % p)}, p).value;
  auto x3 = (sq(a, p) + sq(b, p) + p - sq(c, p)) % p * inv2a % p;
  // y3^2 char = V^2 / (2a)^2
  auto v2 = heron_v2(a, b, c, p);
  auto rhs = std::uint64_t{v2} * sq(inv2a, p) % p * inverse_mod(Residue{ch.value}, p).value % p;
  auto y3 = sqrt_mod(Residue{static_cast<std::uint32_t>(rhs)}, p);
  if (!y3)
    throw degenerate("no realization found");
  RealizedTriangle t;
  t.p = p;
  t.characteristic = ch;
  t.vertices[0] = {QuadExt{0, 0}, QuadExt{0, 0}};
  t.vertices[1] = {QuadExt{a, 0}, QuadExt{0, 0}};
  t.vertices[2] = {QuadExt{static_cast<std::uint32_t>(x3), 0}, QuadExt{0, y3->value}};
  return t;
}

std::uint32_t cayley_menger(const DistMatrix& d) {
  const int t = d.order();
  const auto n = d.modulus();
  std::vector<std::int64_t> m(static_cast<std::size_t>(t + 1) * (t + 1), 1);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      m[static_cast<std::size_t>(i) * (t + 1) + j] = static_cast<std::int64_t>(sq(d.at(i, j), n));
  m.back() = 0;
  auto det = det_mod(std::move(m), t + 1, n);
  return t % 2 == 0 || det == 0 ? det : n - det;
}

std::uint32_t sphere_det(const DistMatrix& d) {
  const int t = d.order();
  const auto n = d.modulus();
  std::vector<std::int64_t> m(static_cast<std::size_t>(t) * t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      m[static_cast<std::size_t>(i) * t + j] = static_cast<std::int64_t>(sq(d.at(i, j), n));
  return det_mod(std::move(m), t, n);
}

std::uint32_t ptolemy_product(const DistMatrix& d) {
  if (d.order() != 4)
    throw invalid_input("the Ptolemy product needs four points");
  const auto n = d.modulus();
  std::int64_t u = std::int64_t{d.at(0, 1)} * d.at(2, 3) % n;
  std::int64_t v = std::int64_t{d.at(0, 2)} * d.at(1, 3) % n;
  std::int64_t w = std::int64_t{d.at(0, 3)} * d.at(1, 2) % n;
  std::int64_t prod = signed_mod(u + v + w, n);
  prod = prod * signed_mod(u + v - w, n) % n;
  prod = prod * signed_mod(u - v + w, n) % n;
  prod = prod * signed_mod(-u + v + w, n) % n;
  return static_cast<std::uint32_t>(signed_mod(-prod, n));
}

Characteristic simplex_char(const DistMatrix& d, std::uint32_t p) {
  require_odd_prime(p);
  if (d.modulus() != p)
    throw invalid_input("distance matrix is not over Z_p");
  return classify(cayley_menger(d), p);
}

CharConsistency char_consistent(const DistMatrix& d, int m, std::uint32_t p) {
  require_odd_prime(p);
  if (d.modulus() != p)
    throw invalid_input("distance matrix is not over Z_p");
  CharConsistency out;
  bool found = false;
  for_each_subset(d.order(), m + 1, [&](std::span<const int> idx) {
    auto v2 = cayley_menger(d.sub(idx));
    if (v2 == 0)
      return;
    auto ch = classify(v2, p);
    ++out.simplices;
    if (!found) {
      out.value = ch;
      found = true;
    } else if (ch != out.value) {
      out.consistent = false;
    }
  });
  if (!found)
    throw degenerate("no non-degenerate simplex");
  return out;
}

bool is_valid_abstract(const DistMatrix& d, int m) {
  const int r = d.order();
  if (m < 1 || r < m + 1)
    throw invalid_input("need at least m + 1 points");
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (d.at(i, j) == 0)
        return false;
  bool ok = true;
  for (int t : {m + 2, m + 3})
    for_each_subset(r, t, [&](std::span<const int> idx) {
      if (ok && cayley_menger(d.sub(idx)) != 0)
        ok = false;
    });
  if (!ok)
    return false;
  bool spanning = false;
  for_each_subset(r, m + 1, [&](std::span<const int> idx) {
    if (!spanning && cayley_menger(d.sub(idx)) != 0)
      spanning = true;
  });
  return spanning;
}

bool ring_integral_check(std::span<const Point> points, std::uint32_t n) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].dim() != points[j].dim())
        throw invalid_input("points of different dimension");
      std::uint64_t s = 0;
      for (int k = 0; k < points[i].dim(); ++k) {
        auto diff = (points[i][k] + n - points[j][k] % n) % n;
        s = (s + sq(diff, n)) % n;
      }
      bool found = false;
      for (std::uint64_t d = 0; d < n && !found; ++d)
        found = sq(d, n) == s;
      if (!found)
        return false;
    }
  return true;
}

} // namespace ringpoints
