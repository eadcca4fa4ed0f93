#include <doctest.h>

#include "commgraph/numtheory.hpp"
#include "support.hpp"

using namespace commgraph;

namespace {

bool trial_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("numtheory") {

TEST_CASE("is_prime examples")
{
    CHECK_FALSE(nt::is_prime(0));
    CHECK_FALSE(nt::is_prime(1));
    CHECK(nt::is_prime(2));
    CHECK(nt::is_prime(3221));
    CHECK_FALSE(nt::is_prime(161051));
    CHECK(nt::is_prime(18446744073709551557ull));
    CHECK_FALSE(nt::is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("property: is_prime agrees with trial division")
{
    for (std::uint64_t n = 0; n < 20000; ++n) CHECK(nt::is_prime(n) == trial_prime(n));
    for (int i = 0; i < 1000; ++i) {
        const auto n = testsupport::uniform(1, 1ull << 34);
        CHECK(nt::is_prime(n) == trial_prime(n));
    }
}

TEST_CASE("factorize examples")
{
    using F = std::vector<std::pair<std::uint64_t, unsigned>>;
    CHECK(nt::factorize(1).empty());
    CHECK(nt::factorize(161050) == F{{2, 1}, {5, 2}, {3221, 1}});
    CHECK(nt::factorize(16105) == F{{5, 1}, {3221, 1}});
    CHECK(nt::prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("property: factorize multiplies back with prime factors")
{
    for (int i = 0; i < 1000; ++i) {
        const auto n = testsupport::uniform(2, 1ull << 36);
        std::uint64_t prod = 1;
        std::uint64_t last = 0;
        for (auto [p, e] : nt::factorize(n)) {
            CHECK(p > last);
            CHECK(trial_prime(p));
            last = p;
            for (unsigned j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("least_prime_factor")
{
    // (11^5 - 1) / (10 * 5) = 3221; repunit-style cofactors use step 2r.
    CHECK(nt::least_prime_factor(BigInt(3221), 10) == 3221);
    CHECK(nt::least_prime_factor(BigInt(31 * 11), 1) == 11);
    // 2^64 + 1 = 274177 * 67280421310721
    const BigInt f6 = (BigInt(1) << 64) + 1;
    CHECK(nt::least_prime_factor(f6, 1) == 274177);
    CHECK(nt::big_pow(11, 20) == BigInt("672749994932560009201"));
    CHECK(nt::is_probable_prime(BigInt("67280421310721")));
    CHECK_FALSE(nt::is_probable_prime(f6));
    CHECK(nt::gcd(161050, 16105) == 16105);
}

TEST_CASE("property: least_prime_factor matches trial division")
{
    for (int i = 0; i < 1000; ++i) {
        const auto n = testsupport::uniform(2, 1ull << 30);
        std::uint64_t d = 2;
        while (n % d != 0) d = d * d > n ? n : d + 1;
        CHECK(nt::least_prime_factor(BigInt(n), 1) == d);
    }
}

}  // TEST_SUITE
