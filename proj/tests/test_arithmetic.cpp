#include <doctest.h>

#include <random>

#include "floorsum/arithmetic.hpp"

using namespace floorsum;

namespace {

bool prime_by_trial_division(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("sieve basics") {
  const LiouvilleSieve one = build_liouville_sieve(1);
  CHECK(one.limit() == 1);
  CHECK(one.lambda(1) == 1);
  CHECK(one.omega(1) == 0);

  const LiouvilleSieve sieve = build_liouville_sieve(100);
  CHECK(sieve.lambda(12) == -1);
  CHECK(sieve.omega(12) == 3);
  CHECK(sieve.lambda(10) == 1);
  CHECK(sieve.lambda(9) == 1);
  CHECK(sieve.lambda(8) == -1);
  CHECK(sieve.summatory(0) == 0);
  CHECK(sieve.summatory(1) == 1);
  // 1 -1 -1 +1 -1 +1 -1 -1 +1 +1
  CHECK(sieve.summatory(10) == 0);
}

TEST_CASE("sieve errors") {
  CHECK_THROWS_AS((void)build_liouville_sieve(0), DomainError);
  CHECK_THROWS_AS((void)build_liouville_sieve(1001, 1000), CapacityError);
  CHECK_NOTHROW((void)build_liouville_sieve(1000, 1000));
}

TEST_CASE("lambda is -1 on primes and completely multiplicative") {
  constexpr std::uint64_t limit = 200'000;
  const LiouvilleSieve sieve(limit);
  for (std::uint64_t q = 2; q <= 5000; ++q) {
    if (prime_by_trial_division(q)) {
      REQUIRE(sieve.lambda(q) == -1);
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t a = rng() % 2000 + 1;
    const std::uint64_t b = rng() % (limit / a) + 1;
    CAPTURE(a);
    CAPTURE(b);
    REQUIRE(sieve.lambda(a * b) == sieve.lambda(a) * sieve.lambda(b));
  }
}

TEST_CASE("sieve agrees with trial-division big_omega") {
  constexpr std::uint64_t limit = 1'000'000;
  const LiouvilleSieve sieve(limit);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = rng() % limit + 1;
    const unsigned omega = big_omega(n);
    REQUIRE(sieve.omega(n) == omega);
    REQUIRE(sieve.lambda(n) == ((omega % 2 == 0) ? 1 : -1));
  }
}

TEST_CASE("big_omega") {
  CHECK(big_omega(1) == 0);
  CHECK(big_omega(12) == 3);
  CHECK(big_omega(97) == 1);
  CHECK(big_omega(1024) == 10);
  CHECK(big_omega(2 * 3 * 5 * 7 * 11 * 13) == 6);
  CHECK(big_omega(999'999'999'989ULL) == 1);
  CHECK_THROWS_AS((void)big_omega(0), DomainError);
}

TEST_CASE("is_prime spot values") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(561));  // 3 * 11 * 17
  CHECK_FALSE(is_prime(41041));
  CHECK(is_prime(99'991));
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
  CHECK(is_prime(18'446'744'073'709'551'557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18'446'744'073'709'551'615ULL));
}

TEST_CASE("is_prime rejects strong pseudoprimes to small bases") {
  CHECK_FALSE(is_prime(3'215'031'751ULL));          // spsp(2,3,5,7)
  CHECK_FALSE(is_prime(2'152'302'898'747ULL));      // spsp(2..11)
  CHECK_FALSE(is_prime(3'474'749'660'383ULL));      // spsp(2..13)
  CHECK_FALSE(is_prime(341'550'071'728'321ULL));    // spsp(2..17)
  CHECK_FALSE(is_prime(3'825'123'056'546'413'051ULL));  // spsp(2..23)
  CHECK_FALSE(is_prime(4'294'967'297ULL));          // 641 * 6700417
  CHECK_FALSE(is_prime(1'000'000'007ULL * 998'244'353ULL));
}

TEST_CASE("is_prime agrees with trial division up to 1e5") {
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    REQUIRE(is_prime(n) == prime_by_trial_division(n));
  }
  // Just above the trial-division cutoff, where Miller-Rabin takes over.
  for (std::uint64_t n = 100'000'000 - 2000; n <= 100'000'000 + 2000; ++n) {
    REQUIRE(is_prime(n) == prime_by_trial_division(n));
  }
}

TEST_CASE("liouville_inversion_check small k") {
  const auto rows = liouville_inversion_check(16);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0] == LiouvilleRow{1, 1, 1, true});
  // 10 - 5 - 3 + 2 - 2 + 1 - 1 - 1 + 1 + 1
  CHECK(rows[9] == LiouvilleRow{10, 3, 3, true});
  CHECK(rows[15] == LiouvilleRow{16, 4, 4, true});
}

TEST_CASE("block summation equals direct summation") {
  const LiouvilleSieve sieve(3000);
  for (std::uint64_t k = 1; k <= 3000; ++k) {
    std::int64_t direct = 0;
    for (std::uint64_t d = 1; d <= k; ++d) {
      direct += sieve.lambda(d) * static_cast<std::int64_t>(k / d);
    }
    REQUIRE(liouville_divisor_sum(sieve, k) == direct);
  }
}

TEST_CASE("liouville_inversion_check propagates capacity errors") {
  CHECK_THROWS_AS((void)liouville_inversion_check(5000, 100), CapacityError);
}
