#pragma once

#include <optional>

#include "unitlift/ring.hpp"

namespace unitlift {

// Direct inversion inside a (typically small quotient) ring, dispatching
// on the descriptor: extended gcd for Z_m, the conjugate-over-norm rule
// for Z_{p^k}[i], polynomial extended gcd for Galois fields (lifted
// internally for k > 1), Gauss-Jordan / adjugate for matrices, and capped
// brute-force search for group rings. Returns nullopt when the element is
// not a unit.
std::optional<RingElement> try_inverse_in(const RingElement& x, std::size_t cap = 100000);

// Unit test using the same dispatch without materializing the inverse
// where a cheaper criterion exists (gcd, norm, determinant).
bool is_unit_in(const RingElement& x, std::size_t cap = 100000);

}  // namespace unitlift
