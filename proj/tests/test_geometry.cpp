#include <doctest.h>

#include <array>
#include <random>

#include "seed.hpp"
#include "ringpoints/errors.hpp"
#include "ringpoints/geometry.hpp"

using namespace ringpoints;

namespace {

bool square_mod(std::uint64_t s, std::uint32_t n) {
  for (std::uint64_t d = 0; d < n; ++d)
    if (d * d % n == s % n)
      return true;
  return false;
}

std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t n) { return (a + n - b) % n; }

// Collinear iff both differences to p1 are multiples of one direction t.
bool collinear_oracle(const Point& p1, const Point& p2, const Point& p3, std::uint32_t n) {
  std::uint32_t qx = sub(p2[0], p1[0], n), qy = sub(p2[1], p1[1], n);
  std::uint32_t rx = sub(p3[0], p1[0], n), ry = sub(p3[1], p1[1], n);
  for (std::uint32_t tx = 0; tx < n; ++tx)
    for (std::uint32_t ty = 0; ty < n; ++ty) {
      bool q = false, r = false;
      for (std::uint64_t s = 0; s < n; ++s) {
        q |= s * tx % n == qx && s * ty % n == qy;
        r |= s * tx % n == rx && s * ty % n == ry;
      }
      if (q && r)
        return true;
    }
  return false;
}

// The definition unrolled: a + w_i t1 = u_i, b + w_i t2 = v_i.
bool collinear_definition(const std::array<Point, 3>& p, std::uint32_t n) {
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t t1 = 0; t1 < n; ++t1)
        for (std::uint32_t t2 = 0; t2 < n; ++t2) {
          bool all = true;
          for (const auto& q : p) {
            bool some = false;
            for (std::uint64_t w = 0; w < n && !some; ++w)
              some = (a + w * t1) % n == q[0] && (b + w * t2) % n == q[1];
            all = all && some;
          }
          if (all)
            return true;
        }
  return false;
}

// Common center with common value r^2, r != 0; or any common value.
bool concyclic_oracle(const std::array<Point, 4>& p, std::uint32_t n, bool any_radius) {
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      std::array<std::uint64_t, 4> v{};
      for (std::size_t i = 0; i < 4; ++i) {
        std::uint64_t dx = sub(p[i][0], a, n), dy = sub(p[i][1], b, n);
        v[i] = (dx * dx + dy * dy) % n;
      }
      if (v[1] != v[0] || v[2] != v[0] || v[3] != v[0])
        continue;
      if (any_radius)
        return true;
      for (std::uint64_t r = 1; r < n; ++r)
        if (r * r % n == v[0])
          return true;
    }
  return false;
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("delta") {
  CHECK(delta(Point{1, 6}, Point{5, 2}, 7) == DeltaVec{3, 3});
  CHECK(delta(Point{4, 4, 1}, Point{4, 4, 1}, 9) == DeltaVec{0, 0, 0});
  CHECK(delta(Point{0, 0}, Point{7, 5}, 12) == DeltaVec{5, 5});
  CHECK_THROWS_AS(delta(Point{0, 0}, Point{1, 1, 1}, 5), invalid_input);
}

TEST_CASE("integral distance") {
  CHECK(!is_integral_delta(DeltaVec{1, 1}, 3));
  CHECK(is_integral_delta(DeltaVec{0, 0, 0}, 11));
  CHECK(is_integral(Point{0, 0}, Point{1, 5}, 13));
  CHECK(!is_integral(Point{0, 0}, Point{1, 1}, 3));
  CHECK(is_integral(Point{2, 1}, Point{2, 1}, 3));
  CHECK(is_integral(Point{0, 0}, Point{1, 2}, 4) == square_mod(5, 4));
  CHECK(is_integral(Point{0, 0}, Point{2, 2}, 4) == square_mod(8, 4));
}

TEST_CASE("integrality is symmetric, translation invariant, and Lee reduction preserves it") {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    Space s(n, 2);
    for (std::uint64_t i = 0; i < s.size(); ++i)
      for (std::uint64_t j = 0; j < s.size(); ++j) {
        auto u = s.decode(i), v = s.decode(j);
        std::uint64_t raw = 0;
        for (int k = 0; k < 2; ++k) {
          std::uint64_t d = sub(u[k], v[k], n);
          raw += d * d;
        }
        CHECK(s.squared_norm(s.delta(u, v)) == raw % n);
        CHECK(s.is_integral(u, v) == square_mod(raw, n));
        CHECK(s.is_integral(u, v) == s.is_integral(v, u));
        for (std::uint64_t t = 0; t < s.size(); t += 3) {
          auto w = s.decode(t);
          CHECK(s.is_integral(s.add(u, w), s.add(v, w)) == s.is_integral(u, v));
        }
      }
  }
  std::mt19937_64 rng(test_seed(7));
  for (int trial = 0; trial < 2000; ++trial) {
    std::uint32_t n = 2 + rng() % 300;
    int m = 1 + static_cast<int>(rng() % 8);
    Point u(m), v(m), w(m);
    std::uint64_t raw = 0;
    for (int k = 0; k < m; ++k) {
      u[k] = rng() % n;
      v[k] = rng() % n;
      w[k] = rng() % n;
      std::uint64_t d = sub(u[k], v[k], n);
      raw += d * d;
    }
    Space s(n, m);
    CHECK(s.is_integral(u, v) == square_mod(raw, n));
    CHECK(s.is_integral(s.add(u, w), s.add(v, w)) == s.is_integral(u, v));
  }
}

TEST_CASE("collinearity fixtures") {
  CHECK(!is_collinear(Point{0, 0}, Point{2, 4}, Point{4, 4}, 8));
  CHECK(collinear_det(Point{0, 0}, Point{2, 4}, Point{4, 4}, 8));
  for (std::uint32_t n = 3; n <= 12; ++n)
    CHECK(is_collinear(Point{0, 0}, Point{1, 1}, Point{2, 2}, n));
  CHECK(is_collinear(Point{0, 0}, Point{1, 2}, Point{2, 4}, 7));
  CHECK(collinear_det(Point{0, 0}, Point{1, 2}, Point{2, 4}, 7));
  CHECK(!collinear_det(Point{0, 0}, Point{1, 0}, Point{0, 1}, 5));
  CHECK(is_collinear(Point{1, 1}, Point{1, 1}, Point{3, 0}, 5));
  CHECK_THROWS_AS(is_collinear(Point{0, 0, 0}, Point{1, 1, 1}, Point{2, 2, 2}, 5), invalid_input);
}

TEST_CASE("collinearity matches the definition by brute force") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    Space s(n, 2);
    for (std::uint64_t a = 0; a < s.size(); ++a)
      for (std::uint64_t b = 0; b < s.size(); ++b)
        for (std::uint64_t c = 0; c < s.size(); ++c) {
          std::array<Point, 3> p{s.decode(a), s.decode(b), s.decode(c)};
          CHECK(is_collinear(p[0], p[1], p[2], n) == collinear_definition(p, n));
        }
  }
  for (std::uint32_t n = 5; n <= 10; ++n) {
    Space s(n, 2);
    Point o{0, 0};
    for (std::uint64_t b = 0; b < s.size(); ++b)
      for (std::uint64_t c = 0; c < s.size(); ++c)
        CHECK(is_collinear(o, s.decode(b), s.decode(c), n) == collinear_oracle(o, s.decode(b), s.decode(c), n));
  }
}

TEST_CASE("collinearity is invariant under permutation and translation") {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    Space s(n, 2);
    std::mt19937 rng(test_seed(n));
    for (std::uint64_t a = 0; a < s.size(); ++a)
      for (std::uint64_t b = 0; b < s.size(); ++b)
        for (std::uint64_t c = 0; c < s.size(); ++c) {
          auto p = s.decode(a), q = s.decode(b), r = s.decode(c);
          bool v = is_collinear(p, q, r, n);
          CHECK(is_collinear(p, r, q, n) == v);
          CHECK(is_collinear(q, p, r, n) == v);
          CHECK(is_collinear(q, r, p, n) == v);
          CHECK(is_collinear(r, p, q, n) == v);
          CHECK(is_collinear(r, q, p, n) == v);
          auto t = s.decode(rng() % s.size());
          CHECK(is_collinear(s.add(p, t), s.add(q, t), s.add(r, t), n) == v);
        }
  }
}

TEST_CASE("exact and determinant collinearity agree for primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    Space s(p, 2);
    Point o{0, 0};
    for (std::uint64_t b = 0; b < s.size(); ++b)
      for (std::uint64_t c = 0; c < s.size(); ++c)
        CHECK(is_collinear(o, s.decode(b), s.decode(c), p) == collinear_det(o, s.decode(b), s.decode(c), p));
  }
}

TEST_CASE("concyclic fixtures") {
  CHECK(is_concyclic(Point{1, 0}, Point{4, 0}, Point{0, 1}, Point{0, 4}, 5));
  CHECK(concyclic_det(Point{1, 0}, Point{4, 0}, Point{0, 1}, Point{0, 4}, 5));
  CHECK_THROWS_AS(is_concyclic(Point{1, 0}, Point{1, 0}, Point{0, 1}, Point{0, 4}, 5), invalid_input);
  std::array<Point, 4> sq7{Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}};
  CHECK(is_concyclic(sq7[0], sq7[1], sq7[2], sq7[3], 7) == concyclic_oracle(sq7, 7, false));
  // center (4,4): every corner at squared distance 9 + 9 = 18 = 4 = 2^2
  CHECK(is_concyclic(sq7[0], sq7[1], sq7[2], sq7[3], 7));
}

TEST_CASE("concyclicity and equidistance match brute force") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    Space s(n, 2);
    const auto cells = s.size();
    for (std::uint64_t a = 0; a < cells; ++a)
      for (std::uint64_t b = a + 1; b < cells; ++b)
        for (std::uint64_t c = b + 1; c < cells; ++c)
          for (std::uint64_t d = c + 1; d < cells; ++d) {
            std::array<Point, 4> p{s.decode(a), s.decode(b), s.decode(c), s.decode(d)};
            CHECK(is_concyclic(p[0], p[1], p[2], p[3], n) == concyclic_oracle(p, n, false));
            CHECK(is_equidistant(p[0], p[1], p[2], p[3], n) == concyclic_oracle(p, n, true));
          }
  }
  std::mt19937 rng(test_seed(11));
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t n = 7 + rng() % 14;
    std::array<Point, 4> p;
    for (auto& q : p)
      q = Point{static_cast<std::uint32_t>(rng() % n), static_cast<std::uint32_t>(rng() % n)};
    if (p[0] == p[1] || p[0] == p[2] || p[0] == p[3] || p[1] == p[2] || p[1] == p[3] || p[2] == p[3])
      continue;
    CHECK(is_concyclic(p[0], p[1], p[2], p[3], n) == concyclic_oracle(p, n, false));
    CHECK(is_equidistant(p[0], p[1], p[2], p[3], n) == concyclic_oracle(p, n, true));
  }
}

TEST_CASE("concyclic implies vanishing determinant, and Z_8 separates them") {
  std::optional<std::array<Point, 4>> separating;
  for (std::uint32_t n = 2; n <= 8; ++n) {
    Space s(n, 2);
    const auto cells = s.size();
    for (std::uint64_t a = 0; a < cells; ++a)
      for (std::uint64_t b = a + 1; b < cells; ++b)
        for (std::uint64_t c = b + 1; c < cells; ++c)
          for (std::uint64_t d = c + 1; d < cells; ++d) {
            auto p = s.decode(a), q = s.decode(b), r = s.decode(c), t = s.decode(d);
            bool cyc = is_concyclic(p, q, r, t, n);
            bool det = concyclic_det(p, q, r, t, n);
            if (cyc)
              CHECK(det);
            CHECK(is_equidistant(p, q, r, t, n) >= cyc);
            if (n == 8 && det && !cyc && !separating)
              separating = std::array<Point, 4>{p, q, r, t};
          }
  }
  REQUIRE(separating);
  // First separating quadruple in row-major order over Z_8^2.
  CHECK((*separating)[0] == Point{0, 0});
  CHECK((*separating)[1] == Point{0, 1});
  CHECK((*separating)[2] == Point{0, 2});
  CHECK((*separating)[3] == Point{0, 3});
}

} // TEST_SUITE
