#include "ringpoints/geometry.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ringpoints/errors.hpp"

namespace ringpoints {

namespace {

template <typename Tag>
std::string coords_to_string(const Coords<Tag>& c) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < c.dim(); ++i)
    out << (i ? "," : "") << c[i];
  out << ')';
  return out.str();
}

std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t n) { return a >= b ? a - b : a + n - b; }

void require_plane(const Point& p) {
  if (p.dim() != 2)
    throw invalid_input("expected a point of Z_n^2, got dimension " + std::to_string(p.dim()));
}

template <typename Table>
std::shared_ptr<const Table> cached_table(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const Table>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot)
    slot = std::make_shared<const Table>(n);
  return slot;
}

} // namespace

std::string to_string(const Point& p) { return coords_to_string(p); }
std::string to_string(const DeltaVec& d) { return coords_to_string(d); }

Space::Space(std::uint32_t n, int m) : n_(n), m_(m), size_(1), squares_(n) {
  if (m < 1 || m > max_dimension)
    throw invalid_input("dimension must lie in [1, 8], got " + std::to_string(m));
  for (int i = 0; i < m; ++i)
    size_ *= n;
}

void Space::check(const Point& p) const {
  if (p.dim() != m_)
    throw invalid_input("point " + to_string(p) + " is not in dimension " + std::to_string(m_));
  for (int i = 0; i < m_; ++i)
    if (p[i] >= n_)
      throw invalid_input("coordinate out of range in " + to_string(p));
}

std::uint64_t Space::encode(const Point& p) const {
  check(p);
  std::uint64_t code = 0;
  for (int i = 0; i < m_; ++i)
    code = code * n_ + p[i];
  return code;
}

Point Space::decode(std::uint64_t index) const {
  if (index >= size_)
    throw invalid_input("point index out of range");
  Point p(m_);
  for (int i = m_ - 1; i >= 0; --i) {
    p[i] = static_cast<std::uint32_t>(index % n_);
    index /= n_;
  }
  return p;
}

Point Space::make_point(std::initializer_list<std::int64_t> coords) const {
  if (static_cast<int>(coords.size()) != m_)
    throw invalid_input("wrong number of coordinates");
  Point p(m_);
  int i = 0;
  for (auto c : coords)
    p[i++] = reduce(c, n_).value;
  return p;
}

Point Space::add(const Point& a, const Point& b) const {
  check(a);
  check(b);
  Point r(m_);
  for (int i = 0; i < m_; ++i)
    r[i] = (a[i] + b[i]) % n_;
  return r;
}

Point Space::sub(const Point& a, const Point& b) const {
  check(a);
  check(b);
  Point r(m_);
  for (int i = 0; i < m_; ++i)
    r[i] = mod_sub(a[i], b[i], n_);
  return r;
}

DeltaVec Space::delta(const Point& u, const Point& v) const {
  check(u);
  check(v);
  DeltaVec d(m_);
  for (int i = 0; i < m_; ++i) {
    auto diff = u[i] > v[i] ? u[i] - v[i] : v[i] - u[i];
    d[i] = std::min(diff, n_ - diff);
  }
  return d;
}

std::uint32_t Space::squared_norm(const DeltaVec& d) const {
  std::uint64_t s = 0;
  for (int i = 0; i < d.dim(); ++i)
    s += std::uint64_t{d[i]} * d[i];
  return static_cast<std::uint32_t>(s % n_);
}

bool Space::is_integral_delta(const DeltaVec& d) const { return squares_.is_square(squared_norm(d)); }

bool Space::is_integral(const Point& u, const Point& v) const { return is_integral_delta(delta(u, v)); }

bool Space::is_integral_set(std::span<const Point> points) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!is_integral(points[i], points[j]))
        return false;
  return true;
}

DeltaVec delta(const Point& u, const Point& v, std::uint32_t n) {
  if (u.dim() != v.dim())
    throw invalid_input("dimension mismatch");
  return Space(n, u.dim()).delta(u, v);
}

bool is_integral_delta(const DeltaVec& d, std::uint32_t n) { return Space(n, d.dim()).is_integral_delta(d); }

bool is_integral(const Point& u, const Point& v, std::uint32_t n) {
  if (u.dim() != v.dim())
    throw invalid_input("dimension mismatch");
  return Space(n, u.dim()).is_integral(u, v);
}

CollinearityTable::CollinearityTable(std::uint32_t n) : n_(n), cells_(n * n) {
  if (n == 0 || n > 256)
    throw resource_limit("collinearity table supports 1 <= n <= 256");
  bits_.assign((std::uint64_t{cells_} * cells_ + 63) / 64, 0);
  std::vector<std::uint32_t> line;
  for (std::uint32_t tx = 0; tx < n; ++tx)
    for (std::uint32_t ty = 0; ty < n; ++ty) {
      line.clear();
      for (std::uint64_t w = 0; w < n; ++w)
        line.push_back(static_cast<std::uint32_t>((w * tx % n) * n + w * ty % n));
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      for (auto q : line)
        for (auto r : line) {
          auto bit = std::uint64_t{q} * cells_ + r;
          bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        }
    }
}

bool CollinearityTable::collinear_codes(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
  auto ax = a / n_, ay = a % n_;
  auto q = mod_sub(b / n_, ax, n_) * n_ + mod_sub(b % n_, ay, n_);
  auto r = mod_sub(c / n_, ax, n_) * n_ + mod_sub(c % n_, ay, n_);
  return through_origin(q, r);
}

bool CollinearityTable::collinear(const Point& p1, const Point& p2, const Point& p3) const {
  for (const auto* p : {&p1, &p2, &p3}) {
    require_plane(*p);
    if ((*p)[0] >= n_ || (*p)[1] >= n_)
      throw invalid_input("coordinate out of range");
  }
  return collinear_codes(p1[0] * n_ + p1[1], p2[0] * n_ + p2[1], p3[0] * n_ + p3[1]);
}

std::shared_ptr<const CollinearityTable> collinearity_table(std::uint32_t n) {
  return cached_table<CollinearityTable>(n);
}

CircleTable::CircleTable(std::uint32_t n) : n_(n), cells_(n * n), words_((n * n + 63) / 64) {
  if (n == 0 || n > 256)
    throw resource_limit("circle table supports 1 <= n <= 256");
  // Row 0 holds the admissible centers (|c|^2 a nonzero-element square),
  // row q != 0 the solutions c of 2 q.c = |q|^2.
  bits_.assign(static_cast<std::size_t>(cells_) * words_, 0);
  SquareTable sq(n);
  auto set = [&](std::uint32_t q, std::uint32_t c) {
    bits_[static_cast<std::size_t>(q) * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  };
  for (std::uint32_t c = 0; c < cells_; ++c) {
    std::uint64_t cx = c / n, cy = c % n;
    if (sq.is_nonzero_square(cx * cx + cy * cy))
      set(0, c);
  }
  for (std::uint32_t q = 1; q < cells_; ++q) {
    std::uint64_t qx = q / n, qy = q % n;
    auto rhs = (qx * qx + qy * qy) % n;
    for (std::uint32_t c = 0; c < cells_; ++c) {
      std::uint64_t cx = c / n, cy = c % n;
      if (2 * (qx * cx + qy * cy) % n == rhs)
        set(q, c);
    }
  }
}

bool CircleTable::concyclic_codes(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const {
  auto ax = a / n_, ay = a % n_;
  auto shift = [&](std::uint32_t p) { return mod_sub(p / n_, ax, n_) * n_ + mod_sub(p % n_, ay, n_); };
  const auto *r0 = row(0), *rb = row(shift(b)), *rc = row(shift(c)), *rd = row(shift(d));
  for (std::uint32_t w = 0; w < words_; ++w)
    if (r0[w] & rb[w] & rc[w] & rd[w])
      return true;
  return false;
}

bool CircleTable::equidistant_codes(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const {
  auto ax = a / n_, ay = a % n_;
  auto shift = [&](std::uint32_t p) { return mod_sub(p / n_, ax, n_) * n_ + mod_sub(p % n_, ay, n_); };
  const auto *rb = row(shift(b)), *rc = row(shift(c)), *rd = row(shift(d));
  for (std::uint32_t w = 0; w < words_; ++w)
    if (rb[w] & rc[w] & rd[w])
      return true;
  return false;
}

std::shared_ptr<const CircleTable> circle_table(std::uint32_t n) { return cached_table<CircleTable>(n); }

bool is_collinear(const Point& p1, const Point& p2, const Point& p3, std::uint32_t n) {
  return collinearity_table(n)->collinear(p1, p2, p3);
}

bool collinear_det(const Point& p1, const Point& p2, const Point& p3, std::uint32_t n) {
  for (const auto* p : {&p1, &p2, &p3})
    require_plane(*p);
  std::vector<std::int64_t> m;
  for (const auto* p : {&p1, &p2, &p3})
    m.insert(m.end(), {(*p)[0], (*p)[1], 1});
  return det_mod(std::move(m), 3, n) == 0;
}

namespace {

bool common_center(const Point& p1, const Point& p2, const Point& p3, const Point& p4, std::uint32_t n,
                   bool nonzero_radius) {
  const std::array<const Point*, 4> pts{&p1, &p2, &p3, &p4};
  for (auto* p : pts) {
    require_plane(*p);
    if ((*p)[0] >= n || (*p)[1] >= n)
      throw invalid_input("coordinate out of range");
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j])
        throw invalid_input("four distinct points required, got repeated " + to_string(*pts[i]));
  auto code = [n](const Point& p) { return p[0] * n + p[1]; };
  if (n <= 96) {
    const auto& table = *circle_table(n);
    return nonzero_radius ? table.concyclic_codes(code(p1), code(p2), code(p3), code(p4))
                          : table.equidistant_codes(code(p1), code(p2), code(p3), code(p4));
  }

  // Large n: scan centers directly.
  SquareTable sq(n);
  auto dist2 = [n](const Point& p, std::uint64_t a, std::uint64_t b) {
    std::uint64_t dx = mod_sub(p[0], static_cast<std::uint32_t>(a), n);
    std::uint64_t dy = mod_sub(p[1], static_cast<std::uint32_t>(b), n);
    return (dx * dx + dy * dy) % n;
  };
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      auto s = dist2(p1, a, b);
      if ((!nonzero_radius || sq.is_nonzero_square(s)) && dist2(p2, a, b) == s && dist2(p3, a, b) == s &&
          dist2(p4, a, b) == s)
        return true;
    }
  return false;
}

} // namespace

bool is_concyclic(const Point& p1, const Point& p2, const Point& p3, const Point& p4, std::uint32_t n) {
  return common_center(p1, p2, p3, p4, n, true);
}

bool is_equidistant(const Point& p1, const Point& p2, const Point& p3, const Point& p4, std::uint32_t n) {
  return common_center(p1, p2, p3, p4, n, false);
}

bool concyclic_det(const Point& p1, const Point& p2, const Point& p3, const Point& p4, std::uint32_t n) {
  std::vector<std::int64_t> m;
  for (const auto* p : {&p1, &p2, &p3, &p4}) {
    require_plane(*p);
    std::int64_t x = (*p)[0], y = (*p)[1];
    m.insert(m.end(), {x * x + y * y, x, y, 1});
  }
  return det_mod(std::move(m), 4, n) == 0;
}

} // namespace ringpoints
