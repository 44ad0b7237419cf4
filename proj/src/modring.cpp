#include "ringpoints/modring.hpp"

#include <string>

#include "ringpoints/errors.hpp"

namespace ringpoints {

namespace {

void check_modulus(std::uint32_t n) {
  if (n == 0)
    throw invalid_input("modulus must be positive");
  if (n > max_modulus)
    throw invalid_input("modulus " + std::to_string(n) + " exceeds 2^16");
}

void check_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw invalid_input(std::to_string(p) + " is not an odd prime");
}

} // namespace

ModRing::ModRing(std::uint32_t n) : n_(n) { check_modulus(n); }

Residue ModRing::reduce(std::int64_t x) const {
  auto r = x % static_cast<std::int64_t>(n_);
  if (r < 0)
    r += n_;
  return {static_cast<std::uint32_t>(r)};
}

Residue ModRing::add(Residue a, Residue b) const {
  auto s = a.value + b.value;
  return {s >= n_ ? s - n_ : s};
}

Residue ModRing::sub(Residue a, Residue b) const {
  return {a.value >= b.value ? a.value - b.value : a.value + n_ - b.value};
}

Residue ModRing::mul(Residue a, Residue b) const {
  return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % n_)};
}

Residue ModRing::neg(Residue a) const { return {a.value == 0 ? 0 : n_ - a.value}; }

std::uint32_t ModRing::lee_weight(Residue r) const {
  return r.value <= n_ - r.value ? r.value : n_ - r.value;
}

Residue reduce(std::int64_t x, std::uint32_t n) { return ModRing(n).reduce(x); }

std::uint32_t lee_weight(Residue r, std::uint32_t n) { return ModRing(n).lee_weight(r); }

SquareTable::SquareTable(std::uint32_t n) : n_(n) {
  check_modulus(n);
  squares_.assign(n, 0);
  nonzero_.assign(n, 0);
  for (std::uint64_t x = 0; x < n; ++x) {
    auto s = x * x % n;
    squares_[s] = 1;
    if (x != 0)
      nonzero_[s] = 1;
  }
}

std::vector<std::uint32_t> SquareTable::squares() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < n_; ++s)
    if (squares_[s])
      out.push_back(s);
  return out;
}

std::vector<std::uint32_t> SquareTable::nonzero_squares() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < n_; ++s)
    if (nonzero_[s])
      out.push_back(s);
  return out;
}

SquareTable squares(std::uint32_t n) { return SquareTable(n); }

Factorization factorize(std::uint64_t n) {
  if (n == 0)
    throw invalid_input("cannot factorize 0");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    std::uint32_t r = 0;
    while (n % p == 0) {
      n /= p;
      ++r;
    }
    f.emplace_back(static_cast<std::uint32_t>(p), r);
  }
  if (n > 1)
    f.emplace_back(static_cast<std::uint32_t>(n), 1);
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

Residue omega(std::uint32_t p) {
  check_odd_prime(p);
  if (p % 4 != 1)
    throw not_applicable("omega(" + std::to_string(p) + ") needs p = 1 (mod 4)");
  for (std::uint64_t w = 1; 2 * w < p; ++w)
    if (w * w % p == p - 1)
      return {static_cast<std::uint32_t>(w)};
  throw error("no square root of -1 mod " + std::to_string(p));
}

Residue alpha(std::uint32_t p) {
  check_odd_prime(p);
  SquareTable sq(p);
  for (std::uint32_t a = 2; a < p; ++a)
    if (!sq.is_square(a))
      return {a};
  throw error("no quadratic non-residue mod " + std::to_string(p));
}

std::optional<Residue> sqrt_mod(Residue s, std::uint32_t p) {
  check_odd_prime(p);
  auto target = s.value % p;
  for (std::uint64_t y = 0; y < p; ++y)
    if (y * y % p == target)
      return Residue{static_cast<std::uint32_t>(y)};
  return std::nullopt;
}

Residue inverse_mod(Residue a, std::uint32_t n) {
  check_modulus(n);
  std::int64_t r0 = n, r1 = a.value % n, t0 = 0, t1 = 1;
  while (r1 != 0) {
    auto q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1)
    throw invalid_input(std::to_string(a.value) + " is not a unit mod " + std::to_string(n));
  return reduce(t0, n);
}

} // namespace ringpoints

namespace ringpoints {

std::uint32_t det_mod(std::vector<std::int64_t> a, int order, std::uint32_t n) {
  check_modulus(n);
  if (a.size() != static_cast<std::size_t>(order) * order)
    throw invalid_input("matrix size does not match its order");
  const auto nn = static_cast<std::int64_t>(n);
  for (auto& x : a) {
    x %= nn;
    if (x < 0)
      x += nn;
  }
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i) * order + j]; };
  bool negate = false;
  std::int64_t det = 1 % nn;
  for (int col = 0; col < order; ++col) {
    // Euclid on the column: leave a single nonzero entry at the pivot row.
    for (;;) {
      int best = -1;
      for (int i = col; i < order; ++i)
        if (at(i, col) != 0 && (best < 0 || at(i, col) < at(best, col)))
          best = i;
      if (best < 0)
        return 0;
      if (best != col) {
        for (int j = 0; j < order; ++j)
          std::swap(at(best, j), at(col, j));
        negate = !negate;
      }
      bool done = true;
      for (int i = col + 1; i < order; ++i) {
        if (at(i, col) == 0)
          continue;
        auto q = at(i, col) / at(col, col);
        for (int j = col; j < order; ++j) {
          auto v = (at(i, j) - q * at(col, j)) % nn;
          at(i, j) = v < 0 ? v + nn : v;
        }
        if (at(i, col) != 0)
          done = false;
      }
      if (done)
        break;
    }
    det = det * at(col, col) % nn;
  }
  if (negate && det != 0)
    det = nn - det;
  return static_cast<std::uint32_t>(det);
}

} // namespace ringpoints
