#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ringpoints {

/// Largest modulus the library accepts. Products of two residues and
/// sums of up to eight squares stay far below 2^63.
inline constexpr std::uint32_t max_modulus = 1u << 16;
/// Largest supported dimension m of Z_n^m.
inline constexpr int max_dimension = 8;

/// An element of Z_n. The modulus is carried by context.
struct Residue {
  std::uint32_t value = 0;

  friend constexpr bool operator==(Residue, Residue) = default;
  friend constexpr auto operator<=>(Residue, Residue) = default;
};

/// Z_n with the canonical projection (reduce) and lift.
class ModRing {
public:
  explicit ModRing(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }

  Residue reduce(std::int64_t x) const;
  static std::int64_t lift(Residue r) { return r.value; }

  Residue add(Residue a, Residue b) const;
  Residue sub(Residue a, Residue b) const;
  Residue mul(Residue a, Residue b) const;
  Residue neg(Residue a) const;

  /// min(r, n - r), the circular distance of r to zero.
  std::uint32_t lee_weight(Residue r) const;

private:
  std::uint32_t n_;
};

/// Canonical map Z -> Z_n. Throws invalid_input for n == 0.
Residue reduce(std::int64_t x, std::uint32_t n);
/// Canonical representative in [0, n-1].
inline std::int64_t lift(Residue r) { return r.value; }
/// Lee weight of r in Z_n.
std::uint32_t lee_weight(Residue r, std::uint32_t n);

/// The squares of Z_n, as constant-time membership tables.
class SquareTable {
public:
  explicit SquareTable(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }
  /// s in {x^2 : x in Z_n}
  bool is_square(std::uint64_t s) const { return squares_[s % n_] != 0; }
  /// s in {r^2 : r in Z_n, r != 0}; may contain 0 for non-squarefree n.
  bool is_nonzero_square(std::uint64_t s) const { return nonzero_[s % n_] != 0; }

  std::vector<std::uint32_t> squares() const;
  std::vector<std::uint32_t> nonzero_squares() const;

private:
  std::uint32_t n_;
  std::vector<std::uint8_t> squares_;
  std::vector<std::uint8_t> nonzero_;
};

SquareTable squares(std::uint32_t n);

/// Prime factorization as (p, r) pairs with p strictly increasing.
using Factorization = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// The unique w < p/2 with w^2 = -1 (mod p), for primes p = 1 (mod 4).
Residue omega(std::uint32_t p);
/// Smallest quadratic non-residue of an odd prime p.
Residue alpha(std::uint32_t p);
/// Smallest y with y^2 = s (mod p), or nothing if s is a non-residue.
std::optional<Residue> sqrt_mod(Residue s, std::uint32_t p);
/// Multiplicative inverse mod n; throws invalid_input if a is not a unit.
Residue inverse_mod(Residue a, std::uint32_t n);

} // namespace ringpoints

namespace ringpoints {

/// Determinant of a row-major order x order integer matrix, reduced mod n.
/// Uses unimodular (Euclidean) row operations only, so it is exact over Z_n
/// for composite n as well.
std::uint32_t det_mod(std::vector<std::int64_t> matrix, int order, std::uint32_t n);

} // namespace ringpoints
