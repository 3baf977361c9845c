#pragma once

#include <optional>
#include <vector>

#include "unitlift/crt.hpp"
#include "unitlift/lift.hpp"
#include "unitlift/ring.hpp"

namespace unitlift {

// Entry (i, j) of a matrix-ring element as a base-ring element.
RingElement matrix_entry(const RingElement& f, int i, int j);
RingElement matrix_from_entries(const RingPtr& matrix_ring,
                                const std::vector<std::vector<RingElement>>& entries);

// Determinant over a commutative base: cofactor expansion for n <= 4,
// fraction-free integer elimination (reduced mod m) for larger n over a
// Z_m base.
RingElement mat_det(const RingElement& f);

// Transpose of the cofactor matrix; f * adj(f) = det(f) * I. n <= 12.
RingElement mat_adjugate(const RingElement& f);

// Gauss-Jordan with unit pivots; entries are inverted through the
// descriptor dispatch, so this covers fields and local base rings.
// Returns nullopt when no unit pivot can be found in some column (which
// for a local base means the matrix is singular).
std::optional<RingElement> gauss_jordan_inverse(const RingElement& f);

// Inverse over Z_p (p prime) by Gauss-Jordan, cross-checked against the
// adjugate formula det(f)^{-1} adj(f) for n <= 3. Throws NotAUnitError
// when singular.
RingElement invert_mod_prime(const RingElement& f);

// The three-step inversion over Z_{p^k}: (1) unit test via det(f mod p)
// in Z_p, (2) invert f mod p, (3) lift along the <p>-power chain, so
// inverse = g (fg)^{p^{k-1}-1}.
UnitCertificate invert_matrix_prime_power(const RingElement& f);

// Componentwise prime-power inversion glued by the CRT reconstruction
// f^{-1} = c_1 f_1^{-1} + ... + c_j f_j^{-1} over Z_m.
struct CrtMatrixInverse {
    RingElement inverse;
    CrtBasis basis;
    std::vector<UnitCertificate> components;
};
CrtMatrixInverse invert_matrix_crt(const RingElement& f, const CrtBasis& basis);

// |M_n(R)*| = |M_n(R/N_1)*| * |N_1|^{n^2}, with the quotient side from
// the |GL_n(F_q)| product formula when R/N_1 is a field, otherwise by
// exhaustive enumeration under the cap.
Count count_matrix_units(const RingPtr& matrix_ring, const CncChain& base_chain,
                         std::size_t cap = 100000);

// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
Count general_linear_group_order(const Count& q, int n);

// Size of the residue field R/<p> when the descriptor is a chain ring we
// support (Z_{p^k}, Galois, Gaussian with p = 3 mod 4); nullopt otherwise.
std::optional<Count> residue_field_size(const RingPtr& ring);

// Cardinality of the ring when it is a field (Z_p, F_{p^r}, Z_p[i] for
// p = 3 mod 4); nullopt otherwise.
std::optional<Count> field_size(const RingPtr& ring);

}  // namespace unitlift
