#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringpoints/geometry.hpp"

namespace ringpoints {

/// Integral classes b_0 = (0,0), b_1, ..., b_t of D_{n,2} in ascending
/// lexicographic order, with O(1) lookup of the class of a point pair.
class EdgeClassTable {
public:
  explicit EdgeClassTable(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }
  std::size_t size() const { return classes_.size(); }
  const DeltaVec& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<DeltaVec>& classes() const { return classes_; }

  /// Index of an integral class; nothing for non-integral ones.
  std::optional<std::uint32_t> index(const DeltaVec& d) const;
  /// Class index of the pair (a, b) of row-major codes, -1 if not integral.
  std::int32_t class_of(std::uint32_t a, std::uint32_t b) const {
    auto dx = a / n_ >= b / n_ ? a / n_ - b / n_ : b / n_ - a / n_;
    auto dy = a % n_ >= b % n_ ? a % n_ - b % n_ : b % n_ - a % n_;
    return by_delta_[std::min(dx, n_ - dx) * (n_ / 2 + 1) + std::min(dy, n_ - dy)];
  }
  std::int32_t class_of(const Point& a, const Point& b) const { return class_of(a[0] * n_ + a[1], b[0] * n_ + b[1]); }

private:
  std::uint32_t n_;
  std::vector<DeltaVec> classes_;
  std::vector<std::int32_t> by_delta_;
};

/// Symmetric r x r matrix of edge-class indices with zero diagonal. The
/// entries above the diagonal are stored in reading order: column j = 1..r-1
/// from row 0 to row j-1. Removing the last point therefore drops a suffix.
class DeltaMatrix {
public:
  DeltaMatrix() = default;
  explicit DeltaMatrix(int order);
  DeltaMatrix(int order, std::vector<std::uint16_t> reading);

  static DeltaMatrix from_points(std::span<const Point> points, const EdgeClassTable& table);

  int order() const { return order_; }
  std::uint16_t at(int i, int j) const;
  void set(int i, int j, std::uint16_t value);
  std::span<const std::uint16_t> reading() const { return reading_; }

  /// The matrix with its last row and column removed.
  DeltaMatrix reduced() const;
  /// Row and column i of the result are row and column perm[i] of this.
  DeltaMatrix permuted(std::span<const int> perm) const;

  friend bool operator==(const DeltaMatrix&, const DeltaMatrix&) = default;

private:
  int order_ = 0;
  std::vector<std::uint16_t> reading_;
};

/// Column-lexicographic order of the upper triangles. Throws invalid_input
/// for matrices of different order.
std::strong_ordering compare(const DeltaMatrix& a, const DeltaMatrix& b);
/// a >= pi(a) for every simultaneous row/column permutation pi.
bool is_canonical(const DeltaMatrix& a);
/// reduced(a) >= reduced(pi(a)) for every permutation pi.
bool is_semi_canonical(const DeltaMatrix& a);

enum class PositionMode { any, semi_general, general };

std::string to_string(PositionMode mode);
PositionMode parse_position_mode(const std::string& text);

/// Which four-point condition general position forbids. center: a common
/// center with any common squared distance (is_equidistant). radius: a common
/// squared distance r^2 with r != 0 (is_concyclic). The published general
/// position counts follow center.
enum class CircleRule { center, radius };

std::string to_string(CircleRule rule);
CircleRule parse_circle_rule(const std::string& text);

struct PointSetRecord {
  DeltaMatrix matrix;
  std::vector<Point> witness;
};

/// L_r: distinct semi-canonical matrices of r-point sets, sorted by compare,
/// each with one realization. Stored flat.
class Level {
public:
  Level() = default;
  explicit Level(int order) : order_(order) {}

  int order() const { return order_; }
  std::size_t size() const { return order_ == 0 ? 0 : points_.size() / static_cast<std::size_t>(order_); }
  bool empty() const { return size() == 0; }
  std::size_t reading_length() const { return static_cast<std::size_t>(order_) * (order_ - 1) / 2; }

  std::span<const std::uint16_t> reading(std::size_t i) const {
    return {readings_.data() + i * reading_length(), reading_length()};
  }
  /// Row-major codes x * n + y of the realization.
  std::span<const std::uint16_t> points(std::size_t i) const {
    return {points_.data() + i * order_, static_cast<std::size_t>(order_)};
  }
  PointSetRecord record(std::size_t i, std::uint32_t n) const;

  void push(std::span<const std::uint16_t> reading, std::span<const std::uint16_t> points);
  void append(const Level& other);
  /// Sort by compare and drop repeated matrices, keeping the first realization.
  void normalize();

private:
  int order_ = 0;
  std::vector<std::uint16_t> readings_;
  std::vector<std::uint16_t> points_;
};

struct GlueStats {
  std::uint64_t glues = 0;
  std::uint64_t max_results = 0;
  /// Glues that produced more than two distinct extensions.
  std::uint64_t over_two = 0;
};

/// Orderly generation of integral point sets over Z_n^2 under a position filter.
class OrderlyGenerator {
public:
  OrderlyGenerator(std::uint32_t n, PositionMode mode, CircleRule rule = CircleRule::center);

  std::uint32_t modulus() const { return n_; }
  PositionMode mode() const { return mode_; }
  CircleRule circle_rule() const { return rule_; }
  const EdgeClassTable& classes() const { return table_; }

  /// L_1 and L_2 (empty for n = 1).
  Level seed_L1() const;
  Level seed_L2() const;
  /// All semi-canonical integral triangles by a nested loop.
  Level seed_L3() const;
  /// All (r+1)-point extensions of x1's realization whose distance row to the
  /// first r-1 points is x2's last row. Requires reduced(x1) == reduced(x2).
  std::vector<PointSetRecord> gamma_glue(const PointSetRecord& x1, const PointSetRecord& x2) const;
  /// One step of the orderly algorithm.
  Level extend_level(const Level& level, unsigned threads = 1, GlueStats* stats = nullptr) const;

  /// The realization satisfies pairwise integrality and the position mode.
  bool admissible(std::span<const Point> points) const;

private:
  bool new_point_ok(std::span<const std::uint16_t> pts, std::uint16_t q) const;
  void extend_range(const Level& level, std::size_t begin, std::size_t end, const std::vector<char>& canonical,
                    Level& out, GlueStats& stats) const;

  std::uint32_t n_;
  PositionMode mode_;
  CircleRule rule_;
  EdgeClassTable table_;
  std::shared_ptr<const CollinearityTable> collinear_;
  std::shared_ptr<const CircleTable> circles_;
};

struct OrderlyOptions {
  unsigned threads = 1;
  std::chrono::milliseconds budget{0};
  CircleRule circle_rule = CircleRule::center;
  /// Called with every completed level.
  std::function<void(const Level&)> on_level;
};

struct OrderlyResult {
  std::uint32_t n = 1;
  PositionMode mode = PositionMode::any;
  std::uint64_t value = 0;
  bool exact = true;
  std::vector<Point> witness;
  /// level_sizes[r] = |L_r|
  std::vector<std::uint64_t> level_sizes;
  GlueStats glue;
  std::chrono::milliseconds elapsed{0};
};

/// Largest r with L_r nonempty: the maximum integral point set over Z_n^2 in
/// the given position.
OrderlyResult max_cardinality(std::uint32_t n, PositionMode mode, const OrderlyOptions& options = {});

/// One line per record: "r | upper entries in reading order | x,y ...".
void write_level(std::ostream& out, const Level& level, std::uint32_t n);

} // namespace ringpoints
