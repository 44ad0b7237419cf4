#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ringpoints/geometry.hpp"

namespace ringpoints {

/// Symmetric matrix of distances delta_{i,j} in Z_n with zero diagonal.
class DistMatrix {
public:
  DistMatrix(int order, std::uint32_t n);

  /// Picks for every pair the smallest d with d^2 = |u - v|^2; throws
  /// invalid_input when a pair is not at integral distance.
  static DistMatrix from_points(std::span<const Point> points, std::uint32_t n);

  int order() const { return order_; }
  std::uint32_t modulus() const { return n_; }
  std::uint32_t at(int i, int j) const { return d_[static_cast<std::size_t>(i) * order_ + j]; }
  void set(int i, int j, std::uint32_t value);
  /// The principal submatrix on the given indices.
  DistMatrix sub(std::span<const int> idx) const;

private:
  int order_;
  std::uint32_t n_;
  std::vector<std::uint32_t> d_;
};

/// 1 or alpha(p).
struct Characteristic {
  std::uint32_t value = 1;

  friend bool operator==(Characteristic, Characteristic) = default;
};

/// (a+b+c)(a+b-c)(a-b+c)(-a+b+c) mod n.
std::uint32_t heron_v2(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t n);

/// Characteristic of the triangle with sides a, b, c over the odd prime p.
/// Throws invalid_input for a zero side, degenerate when heron_v2 vanishes.
Characteristic triangle_char(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t p);

/// x + y sqrt(c) over Z_p.
struct QuadExt {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(QuadExt, QuadExt) = default;
};

/// Arithmetic of Z_p[sqrt(c)].
class QuadExtRing {
public:
  QuadExtRing(std::uint32_t p, std::uint32_t c) : p_(p), c_(c % p) {}

  std::uint32_t modulus() const { return p_; }
  std::uint32_t radicand() const { return c_; }
  QuadExt add(QuadExt a, QuadExt b) const;
  QuadExt sub(QuadExt a, QuadExt b) const;
  QuadExt mul(QuadExt a, QuadExt b) const;

private:
  std::uint32_t p_;
  std::uint32_t c_;
};

struct RealizedTriangle {
  std::uint32_t p = 0;
  Characteristic characteristic;
  /// (0,0), (a,0), (x3, y3 sqrt(char)), coordinates in Z_p[sqrt(char)].
  std::array<std::array<QuadExt, 2>, 3> vertices;
};

RealizedTriangle realize_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t p);

/// Squared distance of two points of Z_p[sqrt(c)]^2.
QuadExt squared_distance(const QuadExtRing& ring, const std::array<QuadExt, 2>& u, const std::array<QuadExt, 2>& v);

/// (-1)^t times the bordered determinant of squared distances of t points
/// (ones border, zero corner). The sign makes three points give heron_v2.
std::uint32_t cayley_menger(const DistMatrix& d);

/// Determinant of the squared distances of m + 2 points.
std::uint32_t sphere_det(const DistMatrix& d);

/// -(d12 d34 + d13 d24 + d14 d23)(d12 d34 + d13 d24 - d14 d23)
///  (d12 d34 - d13 d24 + d14 d23)(-d12 d34 + d13 d24 + d14 d23)
std::uint32_t ptolemy_product(const DistMatrix& d);

/// Characteristic of m + 1 points over the odd prime p; degenerate when the
/// Cayley-Menger value vanishes.
Characteristic simplex_char(const DistMatrix& d, std::uint32_t p);

struct CharConsistency {
  bool consistent = true;
  /// Characteristic of the first non-degenerate simplex.
  Characteristic value;
  std::uint64_t simplices = 0;
};

/// Compares the characteristics of all non-degenerate (m+1)-subsets. Throws
/// degenerate when there is none.
CharConsistency char_consistent(const DistMatrix& d, int m, std::uint32_t p);

/// Abstract integral point set over Z_n in dimension m: nonzero distances,
/// vanishing Cayley-Menger values on all (m+2)- and (m+3)-subsets, and one
/// non-degenerate (m+1)-subset. Throws invalid_input when order < m + 1.
bool is_valid_abstract(const DistMatrix& d, int m);

/// Every pair has a d in Z_n with sum (x_i - y_i)^2 = d^2.
bool ring_integral_check(std::span<const Point> points, std::uint32_t n);

/// Calls f with every k-subset of {0..r-1} in lexicographic order.
template <class F>
void for_each_subset(int r, int k, F&& f) {
  if (k < 0 || k > r)
    return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    f(std::span<const int>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == r - k + i)
      --i;
    if (i < 0)
      return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace ringpoints
