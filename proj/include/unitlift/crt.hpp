#pragma once

#include <cstdint>
#include <vector>

#include "unitlift/ring.hpp"

namespace unitlift {

// Chinese-remainder data for a composite modulus m = prod p_i^{r_i}:
// m_i = m / p_i^{r_i} and s_i with s_i * m_i = 1 mod p_i^{r_i}. The
// reconstruction coefficient of slot i is c_i = s_i * m_i mod m.
struct CrtBasis {
    struct Factor {
        std::int64_t p;
        int r;
        std::int64_t pr;    // p^r
        std::int64_t mi;    // m / p^r
        std::int64_t si;    // inverse of mi mod p^r
        std::int64_t coef;  // si * mi mod m
    };

    std::int64_t m = 0;
    std::vector<Factor> factors;

    static CrtBasis from_modulus(std::int64_t m);
    std::size_t arity() const { return factors.size(); }
    std::int64_t radical() const;  // p_1 * ... * p_j
    int max_exponent() const;
};

// Componentwise reduction of a scalar in Z_m: component i is x mod p_i^{r_i}.
std::vector<RingElement> crt_split(const RingElement& x, const CrtBasis& basis);

// Reconstruction sum c_1*x_1 + ... + c_j*x_j reduced mod m; inverse of crt_split.
RingElement crt_combine(const std::vector<RingElement>& components, const CrtBasis& basis);

// The same maps applied coordinatewise to any element whose leaf ring is
// Z_m (matrices, group-ring elements, ...). Component i lives over the
// descriptor with leaf modulus p_i^{r_i}.
std::vector<RingElement> crt_split_element(const RingElement& x, const CrtBasis& basis);
RingElement crt_combine_element(const std::vector<RingElement>& components, const CrtBasis& basis,
                                const RingPtr& target);

}  // namespace unitlift
