#include "ringpoints/orderly.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>
#include <thread>

#include "ringpoints/errors.hpp"

namespace ringpoints {

namespace {

using clock_type = std::chrono::steady_clock;

constexpr int max_order = 64;

std::size_t reading_index(int i, int j) {
  return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

std::uint16_t code_of(const Point& p, std::uint32_t n) { return static_cast<std::uint16_t>(p[0] * n + p[1]); }

Point point_of(std::uint16_t code, std::uint32_t n) { return Point{code / n, code % n}; }

/// Whether some injective sequence of t of the k points, whose pairwise
/// classes are in the full k x k matrix m, reads strictly greater than target.
class ExceedSearch {
public:
  ExceedSearch(const std::uint16_t* m, int k, std::span<const std::uint16_t> target, int t)
      : m_(m), k_(k), target_(target), t_(t) {}

  bool run() { return dfs(0); }

private:
  bool dfs(int j) {
    if (j == t_)
      return false;
    const auto* col = target_.data() + reading_index(0, j);
    for (int p = 0; p < k_; ++p) {
      if (used_[p])
        continue;
      int cmp = 0;
      for (int i = 0; i < j && cmp == 0; ++i) {
        auto v = m_[seq_[i] * k_ + p];
        cmp = v > col[i] ? 1 : v < col[i] ? -1 : 0;
      }
      if (cmp > 0)
        return true;
      if (cmp < 0)
        continue;
      used_[p] = true;
      seq_[j] = p;
      bool found = dfs(j + 1);
      used_[p] = false;
      if (found)
        return true;
    }
    return false;
  }

  const std::uint16_t* m_;
  int k_;
  std::span<const std::uint16_t> target_;
  int t_;
  std::array<bool, max_order + 1> used_{};
  std::array<int, max_order + 1> seq_{};
};

std::vector<std::uint16_t> full_matrix(const DeltaMatrix& a) {
  const int r = a.order();
  std::vector<std::uint16_t> m(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[static_cast<std::size_t>(i) * r + j] = a.at(i, j);
  return m;
}

} // namespace

EdgeClassTable::EdgeClassTable(std::uint32_t n) : n_(n) {
  if (n == 0 || n > 255)
    throw invalid_input("edge class tables support 1 <= n <= 255");
  const auto half = n / 2;
  Space space(n, 2);
  by_delta_.assign(static_cast<std::size_t>(half + 1) * (half + 1), -1);
  for (std::uint32_t dx = 0; dx <= half; ++dx)
    for (std::uint32_t dy = 0; dy <= half; ++dy) {
      DeltaVec d{dx, dy};
      if (space.is_integral_delta(d)) {
        by_delta_[dx * (half + 1) + dy] = static_cast<std::int32_t>(classes_.size());
        classes_.push_back(d);
      }
    }
}

std::optional<std::uint32_t> EdgeClassTable::index(const DeltaVec& d) const {
  if (d.dim() != 2 || d[0] > n_ / 2 || d[1] > n_ / 2)
    return std::nullopt;
  auto v = by_delta_[d[0] * (n_ / 2 + 1) + d[1]];
  if (v < 0)
    return std::nullopt;
  return static_cast<std::uint32_t>(v);
}

DeltaMatrix::DeltaMatrix(int order) : order_(order), reading_(static_cast<std::size_t>(order) * (order - 1) / 2, 0) {
  if (order < 1 || order > max_order)
    throw invalid_input("matrix order must lie in [1, 64]");
}

DeltaMatrix::DeltaMatrix(int order, std::vector<std::uint16_t> reading) : DeltaMatrix(order) {
  if (reading.size() != reading_.size())
    throw invalid_input("reading length does not match the order");
  reading_ = std::move(reading);
}

DeltaMatrix DeltaMatrix::from_points(std::span<const Point> points, const EdgeClassTable& table) {
  DeltaMatrix a(static_cast<int>(points.size()));
  for (int j = 1; j < a.order_; ++j)
    for (int i = 0; i < j; ++i) {
      auto c = table.class_of(points[i], points[j]);
      if (c < 0)
        throw invalid_input("points " + to_string(points[i]) + " and " + to_string(points[j]) +
                            " are not at integral distance");
      if (c == 0)
        throw invalid_input("repeated point " + to_string(points[i]));
      a.set(i, j, static_cast<std::uint16_t>(c));
    }
  return a;
}

std::uint16_t DeltaMatrix::at(int i, int j) const {
  if (i == j)
    return 0;
  if (i > j)
    std::swap(i, j);
  return reading_[reading_index(i, j)];
}

void DeltaMatrix::set(int i, int j, std::uint16_t value) {
  if (i == j)
    throw invalid_input("diagonal entries are zero");
  if (i > j)
    std::swap(i, j);
  reading_[reading_index(i, j)] = value;
}

DeltaMatrix DeltaMatrix::reduced() const {
  if (order_ < 2)
    throw invalid_input("cannot reduce a matrix of order < 2");
  DeltaMatrix out(order_ - 1);
  std::copy_n(reading_.begin(), out.reading_.size(), out.reading_.begin());
  return out;
}

DeltaMatrix DeltaMatrix::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_)
    throw invalid_input("permutation size does not match the order");
  DeltaMatrix out(order_);
  for (int j = 1; j < order_; ++j)
    for (int i = 0; i < j; ++i)
      out.set(i, j, at(perm[i], perm[j]));
  return out;
}

std::strong_ordering compare(const DeltaMatrix& a, const DeltaMatrix& b) {
  if (a.order() != b.order())
    throw invalid_input("cannot compare matrices of different order");
  auto ra = a.reading(), rb = b.reading();
  return std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end());
}

bool is_canonical(const DeltaMatrix& a) {
  auto m = full_matrix(a);
  return !ExceedSearch(m.data(), a.order(), a.reading(), a.order()).run();
}

bool is_semi_canonical(const DeltaMatrix& a) {
  if (a.order() < 2)
    return true;
  auto m = full_matrix(a);
  auto target = a.reduced();
  return !ExceedSearch(m.data(), a.order(), target.reading(), a.order() - 1).run();
}

std::string to_string(PositionMode mode) {
  switch (mode) {
  case PositionMode::any:
    return "any";
  case PositionMode::semi_general:
    return "semi-general";
  case PositionMode::general:
    return "general";
  }
  return "unknown";
}

PositionMode parse_position_mode(const std::string& text) {
  if (text == "any" || text == "I")
    return PositionMode::any;
  if (text == "semi-general")
    return PositionMode::semi_general;
  if (text == "general")
    return PositionMode::general;
  throw invalid_input("unknown position mode '" + text + "'");
}

PointSetRecord Level::record(std::size_t i, std::uint32_t n) const {
  PointSetRecord rec;
  auto r = reading(i);
  rec.matrix = DeltaMatrix(order_, {r.begin(), r.end()});
  for (auto c : points(i))
    rec.witness.push_back(point_of(c, n));
  return rec;
}

void Level::push(std::span<const std::uint16_t> reading, std::span<const std::uint16_t> points) {
  if (points.size() != static_cast<std::size_t>(order_) || reading.size() != reading_length())
    throw invalid_input("record does not match the level order");
  readings_.insert(readings_.end(), reading.begin(), reading.end());
  points_.insert(points_.end(), points.begin(), points.end());
}

void Level::append(const Level& other) {
  if (other.order_ != order_)
    throw invalid_input("cannot append levels of different order");
  readings_.insert(readings_.end(), other.readings_.begin(), other.readings_.end());
  points_.insert(points_.end(), other.points_.begin(), other.points_.end());
}

void Level::normalize() {
  const auto count = size();
  std::vector<std::uint32_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    auto ra = reading(a), rb = reading(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::stable_sort(idx.begin(), idx.end(), less);
  std::vector<std::uint16_t> readings, points;
  readings.reserve(readings_.size());
  points.reserve(points_.size());
  const auto len = reading_length();
  for (std::size_t k = 0; k < count; ++k) {
    auto r = reading(idx[k]);
    if (k > 0 && readings.size() >= len && std::equal(r.begin(), r.end(), readings.end() - static_cast<std::ptrdiff_t>(len)))
      continue;
    readings.insert(readings.end(), r.begin(), r.end());
    auto p = this->points(idx[k]);
    points.insert(points.end(), p.begin(), p.end());
  }
  readings_ = std::move(readings);
  points_ = std::move(points);
}

std::string to_string(CircleRule rule) { return rule == CircleRule::center ? "center" : "radius"; }

CircleRule parse_circle_rule(const std::string& text) {
  if (text == "center")
    return CircleRule::center;
  if (text == "radius")
    return CircleRule::radius;
  throw invalid_input("unknown circle rule '" + text + "'");
}

OrderlyGenerator::OrderlyGenerator(std::uint32_t n, PositionMode mode, CircleRule rule)
    : n_(n), mode_(mode), rule_(rule), table_(n) {
  if (mode != PositionMode::any)
    collinear_ = collinearity_table(n);
  if (mode == PositionMode::general)
    circles_ = circle_table(n);
}

bool OrderlyGenerator::new_point_ok(std::span<const std::uint16_t> pts, std::uint16_t q) const {
  if (mode_ == PositionMode::any)
    return true;
  const auto r = pts.size();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (collinear_->collinear_codes(pts[a], pts[b], q))
        return false;
  if (mode_ == PositionMode::general)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a + 1; b < r; ++b)
        for (std::size_t c = b + 1; c < r; ++c)
          if (rule_ == CircleRule::center ? circles_->equidistant_codes(pts[a], pts[b], pts[c], q)
                                          : circles_->concyclic_codes(pts[a], pts[b], pts[c], q))
            return false;
  return true;
}

bool OrderlyGenerator::admissible(std::span<const Point> points) const {
  std::vector<std::uint16_t> codes;
  for (const auto& p : points) {
    if (p.dim() != 2 || p[0] >= n_ || p[1] >= n_)
      return false;
    auto q = code_of(p, n_);
    for (auto c : codes)
      if (table_.class_of(c, q) <= 0)
        return false;
    if (!new_point_ok(codes, q))
      return false;
    codes.push_back(q);
  }
  return true;
}

Level OrderlyGenerator::seed_L1() const {
  Level level(1);
  std::array<std::uint16_t, 1> origin{0};
  level.push({}, origin);
  return level;
}

Level OrderlyGenerator::seed_L2() const {
  Level level(2);
  for (std::uint32_t i = 1; i < table_.size(); ++i) {
    const auto& b = table_[i];
    std::array<std::uint16_t, 1> reading{static_cast<std::uint16_t>(i)};
    std::array<std::uint16_t, 2> pts{0, static_cast<std::uint16_t>(b[0] * n_ + b[1])};
    level.push(reading, pts);
  }
  level.normalize();
  return level;
}

Level OrderlyGenerator::seed_L3() const {
  Level level(3);
  const auto cells = n_ * n_;
  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (std::uint32_t a = 1; a < cells; ++a) {
    if (table_.class_of(0, a) <= 0)
      continue;
    for (std::uint32_t b = a + 1; b < cells; ++b) {
      if (table_.class_of(0, b) <= 0 || table_.class_of(a, b) <= 0)
        continue;
      std::array<std::uint16_t, 3> pts{0, static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)};
      if (!new_point_ok(std::span(pts).first(2), pts[2]))
        continue;
      std::array<std::uint16_t, 9> m{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          m[i * 3 + j] = i == j ? 0 : static_cast<std::uint16_t>(table_.class_of(pts[i], pts[j]));
      for (const auto& p : perms) {
        // Semi-canonical: the first pair carries the largest class.
        auto head = m[p[0] * 3 + p[1]];
        if (head < m[p[0] * 3 + p[2]] || head < m[p[1] * 3 + p[2]])
          continue;
        std::array<std::uint16_t, 3> reading{head, m[p[0] * 3 + p[2]], m[p[1] * 3 + p[2]]};
        std::array<std::uint16_t, 3> ordered{pts[p[0]], pts[p[1]], pts[p[2]]};
        level.push(reading, ordered);
      }
    }
  }
  level.normalize();
  return level;
}

std::vector<PointSetRecord> OrderlyGenerator::gamma_glue(const PointSetRecord& x1, const PointSetRecord& x2) const {
  const int r = x1.matrix.order();
  if (r < 2 || x2.matrix.order() != r || x1.witness.size() != static_cast<std::size_t>(r))
    throw invalid_input("gamma_glue needs two records of the same order >= 2");
  if (x1.matrix.reduced() != x2.matrix.reduced())
    throw invalid_input("gamma_glue needs records that agree after removing the last point");
  std::vector<PointSetRecord> out;
  const auto& w = x1.witness;
  const auto& base = table_[x2.matrix.at(0, r - 1)];
  for (std::uint32_t sx = 0; sx < 2; ++sx)
    for (std::uint32_t sy = 0; sy < 2; ++sy) {
      Point q{(w[0][0] + (sx ? n_ - base[0] : base[0])) % n_, (w[0][1] + (sy ? n_ - base[1] : base[1])) % n_};
      bool ok = true;
      for (int i = 0; i < r - 1 && ok; ++i)
        ok = table_.class_of(q, w[i]) == x2.matrix.at(i, r - 1);
      if (!ok || q == w[r - 1] || table_.class_of(q, w[r - 1]) <= 0)
        continue;
      PointSetRecord rec;
      rec.witness = w;
      rec.witness.push_back(q);
      rec.matrix = DeltaMatrix::from_points(rec.witness, table_);
      bool seen = std::any_of(out.begin(), out.end(), [&](const auto& o) { return o.matrix == rec.matrix; });
      if (!seen)
        out.push_back(std::move(rec));
    }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return compare(a.matrix, b.matrix) == std::strong_ordering::less; });
  return out;
}

void OrderlyGenerator::extend_range(const Level& level, std::size_t begin, std::size_t end,
                                    const std::vector<char>& canonical, Level& out, GlueStats& stats) const {
  const int r = level.order();
  const auto prefix = level.reading_length() - static_cast<std::size_t>(r - 1);
  std::vector<std::uint16_t> m(static_cast<std::size_t>(r + 1) * (r + 1));
  std::vector<std::uint16_t> reading(level.reading_length() + static_cast<std::size_t>(r));
  std::vector<std::uint16_t> pts(static_cast<std::size_t>(r + 1));
  std::array<std::uint16_t, 4> found{};

  std::size_t group = begin;
  while (group < end) {
    auto head = level.reading(group);
    std::size_t group_end = group + 1;
    while (group_end < end) {
      auto other = level.reading(group_end);
      if (!std::equal(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(prefix), other.begin()))
        break;
      ++group_end;
    }
    for (auto i1 = group; i1 < group_end; ++i1) {
      if (!canonical[i1])
        continue;
      auto x1 = level.reading(i1);
      auto w = level.points(i1);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          m[static_cast<std::size_t>(i) * (r + 1) + j] = i == j ? 0 : x1[i < j ? reading_index(i, j) : reading_index(j, i)];
      std::copy(x1.begin(), x1.end(), reading.begin());
      std::copy(w.begin(), w.end(), pts.begin());

      for (auto i2 = group; i2 <= i1; ++i2) {
        auto last = level.reading(i2).subspan(prefix);
        const auto& base = table_[last[0]];
        const auto w0x = w[0] / n_, w0y = w[0] % n_;
        std::size_t nfound = 0, distinct = 0;
        std::array<std::uint16_t, 4> glued_last{};
        for (std::uint32_t s = 0; s < 4; ++s) {
          auto qx = (w0x + ((s & 1) ? n_ - base[0] : base[0])) % n_;
          auto qy = (w0y + ((s & 2) ? n_ - base[1] : base[1])) % n_;
          auto q = static_cast<std::uint16_t>(qx * n_ + qy);
          if (std::find(found.begin(), found.begin() + static_cast<std::ptrdiff_t>(nfound), q) !=
              found.begin() + static_cast<std::ptrdiff_t>(nfound))
            continue;
          bool ok = true;
          for (int i = 1; i < r - 1 && ok; ++i)
            ok = table_.class_of(q, w[i]) == last[i];
          if (!ok || q == w[r - 1])
            continue;
          auto closing = table_.class_of(q, w[r - 1]);
          if (closing <= 0)
            continue;
          found[nfound++] = q;
          auto cl = static_cast<std::uint16_t>(closing);
          if (std::find(glued_last.begin(), glued_last.begin() + static_cast<std::ptrdiff_t>(distinct), cl) ==
              glued_last.begin() + static_cast<std::ptrdiff_t>(distinct))
            glued_last[distinct++] = cl;
          if (!new_point_ok(w, q))
            continue;
          for (int i = 0; i < r - 1; ++i) {
            m[static_cast<std::size_t>(i) * (r + 1) + r] = last[i];
            m[static_cast<std::size_t>(r) * (r + 1) + i] = last[i];
          }
          m[static_cast<std::size_t>(r - 1) * (r + 1) + r] = cl;
          m[static_cast<std::size_t>(r) * (r + 1) + r - 1] = cl;
          m[static_cast<std::size_t>(r) * (r + 1) + r] = 0;
          if (ExceedSearch(m.data(), r + 1, x1, r).run())
            continue;
          std::copy(last.begin(), last.end(), reading.begin() + static_cast<std::ptrdiff_t>(x1.size()));
          reading.back() = cl;
          pts[static_cast<std::size_t>(r)] = q;
          out.push(reading, pts);
        }
        ++stats.glues;
        stats.max_results = std::max<std::uint64_t>(stats.max_results, distinct);
        if (distinct > 2)
          ++stats.over_two;
      }
    }
    group = group_end;
  }
}

Level OrderlyGenerator::extend_level(const Level& level, unsigned threads, GlueStats* stats) const {
  const int r = level.order();
  if (r < 2)
    throw invalid_input("extend_level needs a level of order >= 2");
  Level out(r + 1);
  const auto count = level.size();
  if (count == 0)
    return out;

  std::vector<char> canonical(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto reading = level.reading(i);
    canonical[i] = is_canonical(DeltaMatrix(r, {reading.begin(), reading.end()}));
  }

  // Split at group boundaries so every chunk owns whole groups.
  const auto prefix = level.reading_length() - static_cast<std::size_t>(r - 1);
  auto same_group = [&](std::size_t a, std::size_t b) {
    auto ra = level.reading(a), rb = level.reading(b);
    return std::equal(ra.begin(), ra.begin() + static_cast<std::ptrdiff_t>(prefix), rb.begin());
  };
  threads = std::max(1u, threads);
  std::vector<std::size_t> cuts{0};
  for (unsigned t = 1; t < threads; ++t) {
    auto c = std::max(cuts.back(), count * t / threads);
    while (c > 0 && c < count && same_group(c - 1, c))
      ++c;
    cuts.push_back(c);
  }
  cuts.push_back(count);

  std::vector<Level> parts(threads, Level(r + 1));
  std::vector<GlueStats> part_stats(threads);
  if (threads == 1) {
    extend_range(level, 0, count, canonical, parts[0], part_stats[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { extend_range(level, cuts[t], cuts[t + 1], canonical, parts[t], part_stats[t]); });
  }
  for (unsigned t = 0; t < threads; ++t) {
    out.append(parts[t]);
    if (stats) {
      stats->glues += part_stats[t].glues;
      stats->max_results = std::max(stats->max_results, part_stats[t].max_results);
      stats->over_two += part_stats[t].over_two;
    }
  }
  out.normalize();
  return out;
}

OrderlyResult max_cardinality(std::uint32_t n, PositionMode mode, const OrderlyOptions& options) {
  const auto start = clock_type::now();
  OrderlyGenerator gen(n, mode, options.circle_rule);
  OrderlyResult result;
  result.n = n;
  result.mode = mode;
  result.level_sizes = {0};

  auto accept = [&](const Level& level) {
    result.level_sizes.push_back(level.size());
    if (options.on_level)
      options.on_level(level);
    if (!level.empty()) {
      result.value = static_cast<std::uint64_t>(level.order());
      result.witness = level.record(0, n).witness;
    }
  };

  accept(gen.seed_L1());
  Level level = gen.seed_L2();
  accept(level);
  if (!level.empty()) {
    level = gen.seed_L3();
    accept(level);
    while (!level.empty()) {
      if (options.budget.count() > 0 && clock_type::now() - start > options.budget) {
        result.exact = false;
        break;
      }
      level = gen.extend_level(level, options.threads, &result.glue);
      accept(level);
    }
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start);
  return result;
}

void write_level(std::ostream& out, const Level& level, std::uint32_t n) {
  for (std::size_t i = 0; i < level.size(); ++i) {
    out << level.order() << " |";
    for (auto v : level.reading(i))
      out << ' ' << v;
    out << " |";
    for (auto c : level.points(i))
      out << ' ' << c / n << ',' << c % n;
    out << '\n';
  }
}

} // namespace ringpoints
