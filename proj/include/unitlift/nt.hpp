#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace unitlift {

// Unbounded exact integer, used for cardinalities, lifting exponents and
// binomial coefficients. Element coordinates stay in int64_t; descriptor
// construction bounds every modulus so that coordinate products never
// overflow (see ring.hpp).
using Count = boost::multiprecision::cpp_int;

namespace nt {

// Floor-mod into [0, m).
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

// Extended gcd: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

// Inverse of a modulo m, or -1 when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// a^e mod m for m < 2^31, e >= 0.
std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t m);

bool is_prime(std::int64_t n);  // trial division

struct PrimePower {
    std::int64_t p;
    int e;
};

// Prime factorization by trial division, ascending primes.
std::vector<PrimePower> factorize(std::int64_t n);

// Largest e with p^e | n (n > 0).
int valuation(std::int64_t n, std::int64_t p);

// Exact binomial coefficient.
Count binomial(std::uint64_t n, std::uint64_t k);

// Exact power with non-negative exponent.
Count pow_count(const Count& base, std::uint64_t e);

}  // namespace nt
}  // namespace unitlift
