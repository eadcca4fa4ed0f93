#include "commgraph/numtheory.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>

namespace commgraph::nt {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

BigInt big_gcd(BigInt a, BigInt b)
{
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
BigInt pollard_brent(const BigInt& n)
{
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(0x5eed);
    for (;;) {
        BigInt y = BigInt(rng()) % n;
        BigInt c = BigInt(rng()) % (n - 1) + 1;
        const std::uint64_t m = 128;
        BigInt g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = std::min<BigInt>(BigInt(m), r - k);
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    BigInt diff = x > y ? x - y : y - x;
                    q = q * diff % n;
                }
                g = big_gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                BigInt diff = x > ys ? x - ys : ys - x;
                g = big_gcd(diff, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

BigInt smallest_factor_rho(const BigInt& n)
{
    if (is_probable_prime(n)) return n;
    BigInt d = pollard_brent(n);
    BigInt a = smallest_factor_rho(d);
    BigInt b = smallest_factor_rho(n / d);
    return std::min(a, b);
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt big_pow(std::uint64_t base, unsigned exponent)
{
    return boost::multiprecision::pow(BigInt(base), exponent);
}

bool is_probable_prime(const BigInt& n)
{
    if (n < 2) return false;
    if (n < BigInt(std::numeric_limits<std::uint64_t>::max()))
        return is_prime(static_cast<std::uint64_t>(n));
    std::mt19937 rng(12345);
    return boost::multiprecision::miller_rabin_test(n, 40, rng);
}

BigInt least_prime_factor(const BigInt& n, std::uint64_t step)
{
    if (n < 2) return n;
    if (step == 0) step = 1;
    // With step > 1 every prime factor of n is assumed to be 1 mod step, so
    // only that residue class needs trial division.
    constexpr std::uint64_t kTrialCandidates = 2'000'000;
    std::uint64_t candidate = step == 1 ? 2 : step + 1;
    for (std::uint64_t i = 0; i < kTrialCandidates; ++i) {
        BigInt c(candidate);
        if (c * c > n) return n;
        if (n % c == 0) return c;
        candidate += (step == 1) ? (candidate == 2 ? 1 : 2) : step;
    }
    return smallest_factor_rho(n);
}

}  // namespace commgraph::nt
