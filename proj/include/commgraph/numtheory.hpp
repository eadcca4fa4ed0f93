#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace commgraph {

using BigInt = boost::multiprecision::cpp_int;

namespace nt {

/// Deterministic for the whole 64-bit range (Miller-Rabin with fixed bases).
bool is_prime(std::uint64_t n);

/// Trial-division factorization, ascending primes with multiplicities.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

BigInt big_pow(std::uint64_t base, unsigned exponent);

bool is_probable_prime(const BigInt& n);

/// Least prime factor of n > 1. Trial division by candidates congruent to 1
/// modulo `step` (pass step = 1 for no congruence restriction; n must then
/// have no prime factors below `step`'s residue class assumption), then
/// Pollard-Brent on the cofactor.
BigInt least_prime_factor(const BigInt& n, std::uint64_t step = 1);

}  // namespace nt
}  // namespace commgraph
