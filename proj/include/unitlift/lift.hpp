#pragma once

#include <vector>

#include "unitlift/chain.hpp"
#include "unitlift/ring.hpp"

namespace unitlift {

// One level of the homomorphism tower recorded while lifting: the residue
// of (xg)^{s_1...s_i} in R/N_{i+1}, which must equal 1 there.
struct TraceLevel {
    std::size_t level = 0;       // i, 1-based
    Count cumulative_exponent;   // s_1 * ... * s_i
    RingElement residue;         // over R/N_{i+1}
};

// A unit x of R with its computed inverse and the data that produced it:
// the quotient inverse g (x*g = 1 mod N_1), the exponent S = prod s_i,
// the product xg, the power (xg)^{S-1}, and the per-level residues.
// Always satisfies x * inverse = inverse * x = 1 exactly.
struct UnitCertificate {
    RingElement x;
    RingElement inverse;
    RingElement quotient_inverse;  // g, materialized in R
    Count exponent_S;
    RingElement xg;
    RingElement power;  // (xg)^{S-1}
    std::vector<TraceLevel> trace;
};

// True iff the residue of x in R/N_1 is invertible there. The chain must
// validate; the quotient unit test dispatches on the quotient shape
// (gcd, Gaussian norm, determinant, field inversion, or enumeration).
bool is_unit_via_quotient(const RingElement& x, const CncChain& chain);

// Lifts the quotient inverse g of x along the chain:
//   inverse = g * (xg)^(S-1),  S = s_1 s_2 ... s_{k-1},
// computed by square-and-multiply. Throws ValidationError when g is not
// a quotient inverse of x mod N_1; the final postcondition x*inverse = 1
// is asserted and can only fail for a chain that slipped past validation.
UnitCertificate lift_inverse(const RingElement& x, const RingElement& g, const CncChain& chain);

// Commutative power form g^S * x^(S-1); equals lift_inverse's result.
RingElement lift_inverse_commutative(const RingElement& x, const RingElement& g,
                                     const CncChain& chain);

// Inverse through the alternating binomial sum
//   e1 = g * sum_{i=0}^{2n} C(2n+1, i) (xg)^{2n-i} (-1)^i
// where 2n+1 is an odd nilpotency bound of xg - 1, found by repeated
// multiplication (capped). Serves as an independent route against
// lift_inverse.
RingElement binomial_inverse(const RingElement& x, const RingElement& g, const PowerIdeal& N,
                             int nilpotency_bound = 64);

// For n with n^t = 0 and a prime p >= t in a commutative ring, returns
//   r = k_1 + k_2 n + ... + k_{t-1} n^{t-2},  k_i = C(p, i) / p,
// and asserts (1+n)^p = 1 + p n r exactly.
RingElement power_reduction_witness(const RingElement& n_elt, std::int64_t p, int t);

// All units in the coset lift of a unit residue u of R/N_1: one
// certificate per element of lift(u) + N_1, all sharing the same g.
std::vector<UnitCertificate> unit_class(const RingElement& quotient_unit, const CncChain& chain,
                                        std::size_t cap = 100000);

}  // namespace unitlift
