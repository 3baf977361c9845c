#pragma once

#include <vector>

#include "unitlift/crt.hpp"
#include "unitlift/group.hpp"
#include "unitlift/lift.hpp"
#include "unitlift/ring.hpp"

namespace unitlift {

// Convolution product in R[G]; same as mul(), exposed under the
// group-ring name.
RingElement group_ring_mul(const RingElement& x, const RingElement& y);

// Coefficient of group element g (an element of the base ring).
RingElement group_ring_coefficient(const RingElement& x, int g);
RingElement group_ring_from_coefficients(const RingPtr& group_ring,
                                         const std::vector<RingElement>& coeffs);

// Unit lifting in R[G] along the promoted chain {NG, N^2 G, ..., N^k G}
// built from a base ideal N = <a> of nilpotency index k, with
// characteristic s inherited unchanged. x*g must be 1 mod NG.
UnitCertificate lift_inverse_group_ring(const RingElement& x, const RingElement& g,
                                        const PowerIdeal& base_ideal, int k, std::int64_t s);

// Unit description of R[G] for a chain ring R with maximal ideal <p> of
// index k and residue field F: every unit is a lift of a unit of F[G],
// coset by coset, with inverse g (xg)^{p^{k-1}-1}. Counts follow
// |(RG)*| = |(FG)*| |<p>|^{|G|}.
struct ChainRingUnits {
    Count quotient_unit_count;  // |(FG)*|
    Count ideal_size;           // |<p>G| = |<p>|^{|G|}
    Count total;                // product of the two
    std::vector<UnitCertificate> certificates;  // filled when materialized
};
ChainRingUnits chain_ring_units(const RingPtr& base, const GroupPtr& G,
                                std::size_t cap = 100000, bool materialize = true);

// Unit of Z_m[G] assembled from component units over the residue fields:
//   f = c_1 f_1 + ... + c_j f_j,   c_i = s_i m_i mod m,
// inverted componentwise, f^{-1} = sum c_i g_i^{a_i} f_i^{a_i - 1} with
// a_i = p_i^{r_i - 1}. Requires an abelian G.
UnitCertificate invert_zmg_crt(const std::vector<RingElement>& f_components,
                               const std::vector<RingElement>& g_components,
                               const CrtBasis& basis, const GroupPtr& G);

// Same unit, inverted through the radical route: w = sum t_i c_i g_i over
// Z_P[G] (P = p_1...p_j, t_i c_i = 1 mod p_i) lifts the inverse of f mod P,
// and f^{-1} = w^{P^{k-1}} f^{P^{k-1}-1} with k = max r_i. Produces the
// same certificate as invert_zmg_crt; the two formulas are cross-asserted.
UnitCertificate invert_zmg_radical(const std::vector<RingElement>& f_components,
                                   const std::vector<RingElement>& g_components, std::int64_t m,
                                   const GroupPtr& G);

// Convenience wrapper: inverts a given unit of Z_m[G] by decomposing it
// with crt_split and running the componentwise route.
UnitCertificate invert_zmg_unit(const RingElement& f, std::size_t cap = 100000);

// |R[G]*| = |N_1|^{|G|} |(R/N_1)[G]*| with the quotient side enumerated.
Count count_group_ring_units(const RingPtr& base, const PowerIdeal& base_n1, const GroupPtr& G,
                             std::size_t cap = 100000);

// |Z_m[G]*| = (m / p_1...p_j)^{|G|} prod_i |Z_{p_i}[G]*|.
Count count_zmg_units(const CrtBasis& basis, const GroupPtr& G, std::size_t cap = 100000);

// Equivalent radical form (m / P)^{|G|} |Z_P[G]*|.
Count count_zmg_units_radical(const CrtBasis& basis, const GroupPtr& G,
                              std::size_t cap = 100000);

}  // namespace unitlift
