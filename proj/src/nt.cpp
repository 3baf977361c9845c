#include "unitlift/nt.hpp"

#include "unitlift/error.hpp"

namespace unitlift::nt {

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1 = 0, y1 = 0;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    a = mod_floor(a, m);
    std::int64_t x = 0, y = 0;
    std::int64_t g = egcd(a, m, x, y);
    if (g != 1) return -1;
    return mod_floor(x, m);
}

std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t m) {
    a = mod_floor(a, m);
    std::int64_t result = 1 % m;
    while (e > 0) {
        if (e & 1) result = (result * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return result;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) throw ValidationError("factorize: argument must be positive");
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n == 0) throw ValidationError("valuation: n must be nonzero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Count binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Count c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c *= static_cast<std::uint64_t>(n - k + i);
        c /= i;
    }
    return c;
}

Count pow_count(const Count& base, std::uint64_t e) {
    Count result = 1;
    Count b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace unitlift::nt
