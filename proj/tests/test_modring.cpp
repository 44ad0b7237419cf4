#include <doctest.h>

#include <set>

#include "seed.hpp"
#include "ringpoints/errors.hpp"
#include "ringpoints/modring.hpp"

using namespace ringpoints;

namespace {

std::set<std::uint32_t> brute_squares(std::uint32_t n, bool nonzero) {
  std::set<std::uint32_t> s;
  for (std::uint64_t x = nonzero ? 1 : 0; x < n; ++x)
    s.insert(static_cast<std::uint32_t>(x * x % n));
  return s;
}

bool brute_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

TEST_SUITE("modring") {

TEST_CASE("reduce and lift") {
  CHECK(reduce(14, 12).value == 2);
  CHECK(reduce(-1, 7).value == 6);
  CHECK(reduce(5, 1).value == 0);
  CHECK_THROWS_AS(reduce(3, 0), invalid_input);
  CHECK(lift(reduce(14, 12)) == 2);
  CHECK(lift(reduce(0, 5)) == 0);
  CHECK(lift(reduce(-3, 8)) == 5);
  for (std::int64_t x = -50; x <= 50; ++x)
    for (std::uint32_t n = 1; n <= 13; ++n) {
      auto r = reduce(x, n);
      CHECK(reduce(lift(r), n) == r);
      CHECK((x - lift(r)) % static_cast<std::int64_t>(n) == 0);
    }
}

TEST_CASE("ring operations") {
  ModRing z(12);
  CHECK(z.add(Residue{7}, Residue{8}).value == 3);
  CHECK(z.sub(Residue{3}, Residue{8}).value == 7);
  CHECK(z.mul(Residue{5}, Residue{7}).value == 11);
  CHECK(z.neg(Residue{0}).value == 0);
  CHECK(z.neg(Residue{5}).value == 7);
}

TEST_CASE("lee weight") {
  CHECK(lee_weight(Residue{7}, 12) == 5);
  CHECK(lee_weight(Residue{5}, 12) == 5);
  CHECK(lee_weight(Residue{0}, 7) == 0);
  for (std::uint32_t n = 1; n <= 40; ++n)
    for (std::uint32_t r = 0; r < n; ++r) {
      auto w = lee_weight(Residue{r}, n);
      CHECK(w == lee_weight(Residue{(n - r) % n}, n));
      CHECK(w <= n / 2);
    }
}

TEST_CASE("square tables") {
  auto s8 = squares(8);
  CHECK(s8.squares() == std::vector<std::uint32_t>{0, 1, 4});
  CHECK(s8.nonzero_squares() == std::vector<std::uint32_t>{0, 1, 4});
  auto s5 = squares(5);
  CHECK(s5.squares() == std::vector<std::uint32_t>{0, 1, 4});
  CHECK(s5.nonzero_squares() == std::vector<std::uint32_t>{1, 4});
  CHECK(squares(2).squares() == std::vector<std::uint32_t>{0, 1});
  CHECK(squares(1).squares() == std::vector<std::uint32_t>{0});
  for (std::uint32_t n = 1; n <= 500; ++n) {
    auto t = squares(n);
    auto all = brute_squares(n, false);
    auto nz = brute_squares(n, true);
    // by n - x instead of x
    std::set<std::uint32_t> mirrored;
    for (std::uint64_t x = 1; x <= n; ++x)
      mirrored.insert(static_cast<std::uint32_t>((n - x) * (n - x) % n));
    CHECK(all == mirrored);
    auto got = t.squares();
    CHECK(std::set<std::uint32_t>(got.begin(), got.end()) == all);
    auto got_nz = t.nonzero_squares();
    CHECK(std::set<std::uint32_t>(got_nz.begin(), got_nz.end()) == nz);
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(307) == Factorization{{307, 1}});
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t prod = 1;
    std::uint32_t last = 0;
    for (auto [p, r] : factorize(n)) {
      CHECK(brute_prime(p));
      CHECK(p > last);
      CHECK(r >= 1);
      last = p;
      prod *= ipow(p, r);
    }
    CHECK(prod == n);
    CHECK(is_prime(n) == brute_prime(n));
  }
}

TEST_CASE("omega") {
  CHECK(omega(5).value == 2);
  CHECK(omega(13).value == 5);
  CHECK_THROWS_AS(omega(7), not_applicable);
  CHECK_THROWS_AS(omega(15), invalid_input);
  for (std::uint32_t p = 5; p <= 1000; ++p) {
    if (!brute_prime(p) || p % 4 != 1)
      continue;
    auto w = omega(p).value;
    CHECK(std::uint64_t{w} * w % p == p - 1);
    CHECK(2 * w < p);
  }
}

TEST_CASE("alpha") {
  CHECK(alpha(3).value == 2);
  CHECK(alpha(7).value == 3);
  CHECK(alpha(5).value == 2);
  CHECK_THROWS_AS(alpha(2), invalid_input);
  CHECK_THROWS_AS(alpha(9), invalid_input);
  for (std::uint32_t p = 3; p <= 400; ++p) {
    if (!brute_prime(p))
      continue;
    auto sq = brute_squares(p, false);
    auto a = alpha(p).value;
    CHECK(!sq.count(a));
    for (std::uint32_t b = 1; b < a; ++b)
      CHECK(sq.count(b));
  }
}

TEST_CASE("sqrt_mod") {
  CHECK(sqrt_mod(Residue{4}, 7)->value == 2);
  CHECK(!sqrt_mod(Residue{3}, 5));
  CHECK(sqrt_mod(Residue{0}, 11)->value == 0);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u})
    for (std::uint32_t s = 0; s < p; ++s) {
      auto r = sqrt_mod(Residue{s}, p);
      CHECK(bool(r) == (brute_squares(p, false).count(s) > 0));
      if (r)
        CHECK(std::uint64_t{r->value} * r->value % p == s);
    }
}

TEST_CASE("inverse and gcd") {
  CHECK(inverse_mod(Residue{5}, 12).value == 5);
  CHECK_THROWS_AS(inverse_mod(Residue{4}, 12), invalid_input);
  CHECK(gcd(12, 18) == 6);
  CHECK(ipow(3, 4) == 81);
}

TEST_CASE("det_mod against Leibniz expansion") {
  // Leibniz formula over the integers, reduced at the end.
  auto leibniz = [](const std::vector<std::int64_t>& a, int k, std::uint32_t n) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      perm[i] = i;
    std::int64_t sum = 0;
    do {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          inversions += perm[i] > perm[j];
      std::int64_t term = inversions % 2 ? -1 : 1;
      for (int i = 0; i < k; ++i)
        term = term * a[static_cast<std::size_t>(i) * k + perm[i]] % static_cast<std::int64_t>(n);
      sum = (sum + term) % static_cast<std::int64_t>(n);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<std::uint32_t>((sum % static_cast<std::int64_t>(n) + n) % n);
  };
  std::uint64_t state = test_seed(12345);
  auto next = [&] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::int64_t>(state >> 40);
  };
  for (int trial = 0; trial < 400; ++trial) {
    int k = 1 + trial % 5;
    std::uint32_t n = 2 + static_cast<std::uint32_t>(next() % 60);
    std::vector<std::int64_t> a(static_cast<std::size_t>(k) * k);
    for (auto& x : a)
      x = next() % 200 - 100;
    CHECK(det_mod(a, k, n) == leibniz(a, k, n));
  }
}

} // TEST_SUITE
