#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ringpoints/modring.hpp"

namespace ringpoints {

/// Up to max_dimension small unsigned coordinates. Tag keeps points and
/// difference vectors apart in the type system.
template <typename Tag>
class Coords {
public:
  Coords() = default;
  explicit Coords(int dim) : dim_(static_cast<std::uint8_t>(dim)) {}
  Coords(std::initializer_list<std::uint32_t> values) {
    for (auto v : values)
      c_[dim_++] = v;
  }

  int dim() const { return dim_; }
  std::uint32_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::uint32_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint32_t> coords() const { return {c_.data(), dim_}; }

  friend bool operator==(const Coords& a, const Coords& b) {
    if (a.dim_ != b.dim_)
      return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a[i] != b[i])
        return false;
    return true;
  }
  friend auto operator<=>(const Coords& a, const Coords& b) {
    for (int i = 0; i < std::min(a.dim_, b.dim_); ++i)
      if (a[i] != b[i])
        return a[i] <=> b[i];
    return a.dim_ <=> b.dim_;
  }

private:
  std::array<std::uint32_t, max_dimension> c_{};
  std::uint8_t dim_ = 0;
};

struct PointTag {};
struct DeltaTag {};

/// An element of Z_n^m, coordinates in [0, n-1].
using Point = Coords<PointTag>;
/// Componentwise Lee-reduced difference of two points, entries in [0, n/2].
using DeltaVec = Coords<DeltaTag>;

std::string to_string(const Point& p);
std::string to_string(const DeltaVec& d);

/// Z_n^m with its square table; the context for all distance predicates.
class Space {
public:
  Space(std::uint32_t n, int m);

  std::uint32_t modulus() const { return n_; }
  int dim() const { return m_; }
  const SquareTable& square_table() const { return squares_; }

  /// n^m
  std::uint64_t size() const { return size_; }
  /// Row-major index sum u_i * n^(m-1-i).
  std::uint64_t encode(const Point& p) const;
  Point decode(std::uint64_t index) const;
  Point make_point(std::initializer_list<std::int64_t> coords) const;

  Point add(const Point& a, const Point& b) const;
  Point sub(const Point& a, const Point& b) const;

  DeltaVec delta(const Point& u, const Point& v) const;
  /// Sum of squared components mod n.
  std::uint32_t squared_norm(const DeltaVec& d) const;
  bool is_integral_delta(const DeltaVec& d) const;
  bool is_integral(const Point& u, const Point& v) const;
  /// Every pair of the set is at integral distance.
  bool is_integral_set(std::span<const Point> points) const;

private:
  void check(const Point& p) const;

  std::uint32_t n_;
  int m_;
  std::uint64_t size_;
  SquareTable squares_;
};

DeltaVec delta(const Point& u, const Point& v, std::uint32_t n);
bool is_integral_delta(const DeltaVec& d, std::uint32_t n);
bool is_integral(const Point& u, const Point& v, std::uint32_t n);

/// For every pair (q, r) of Z_n^2, whether {0, q, r} is collinear, i.e.
/// q and r lie on a common cyclic line {w * t : w in Z_n}. One bit per pair.
class CollinearityTable {
public:
  explicit CollinearityTable(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }
  /// Indices are row-major codes x * n + y of the two translated points.
  bool through_origin(std::uint32_t q, std::uint32_t r) const {
    auto bit = static_cast<std::uint64_t>(q) * cells_ + r;
    return (bits_[bit >> 6] >> (bit & 63)) & 1u;
  }
  bool collinear(const Point& p1, const Point& p2, const Point& p3) const;
  /// Same, on row-major codes of Z_n^2.
  bool collinear_codes(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

private:
  std::uint32_t n_;
  std::uint32_t cells_;
  std::vector<std::uint64_t> bits_;
};

/// Shared immutable table for modulus n, built on first use.
std::shared_ptr<const CollinearityTable> collinearity_table(std::uint32_t n);

/// For every translated point q != 0 of Z_n^2, the centers c with
/// 2 q.c = |q|^2 (mod n), i.e. |q - c|^2 = |c|^2; plus the centers whose
/// squared distance to the origin is r^2 for some r != 0.
class CircleTable {
public:
  explicit CircleTable(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }
  /// Four distinct points, as row-major codes, on a common circle.
  bool concyclic_codes(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const;
  /// Four distinct points with a common center, whatever the common squared distance.
  bool equidistant_codes(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const;

private:
  const std::uint64_t* row(std::uint32_t q) const { return bits_.data() + static_cast<std::size_t>(q) * words_; }

  std::uint32_t n_;
  std::uint32_t cells_;
  std::uint32_t words_;
  std::vector<std::uint64_t> bits_;
};

std::shared_ptr<const CircleTable> circle_table(std::uint32_t n);

/// Exact collinearity of three points of Z_n^2; repeated points count as collinear.
bool is_collinear(const Point& p1, const Point& p2, const Point& p3, std::uint32_t n);
/// det [[u1 v1 1] [u2 v2 1] [u3 v3 1]] == 0 (mod n). Exact for prime n, necessary otherwise.
bool collinear_det(const Point& p1, const Point& p2, const Point& p3, std::uint32_t n);
/// Four distinct points of Z_n^2 on a circle with a nonzero radius element.
/// Throws invalid_input when two of the points coincide.
bool is_concyclic(const Point& p1, const Point& p2, const Point& p3, const Point& p4, std::uint32_t n);
/// Four distinct points of Z_n^2 sharing a center c with equal |p - c|^2,
/// any value allowed (zero and non-squares included). Implied by is_concyclic.
bool is_equidistant(const Point& p1, const Point& p2, const Point& p3, const Point& p4, std::uint32_t n);
/// Vanishing of the 4x4 determinant with rows (x^2 + y^2, x, y, 1).
bool concyclic_det(const Point& p1, const Point& p2, const Point& p3, const Point& p4, std::uint32_t n);

} // namespace ringpoints
