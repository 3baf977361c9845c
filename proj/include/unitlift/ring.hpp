#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "unitlift/group.hpp"
#include "unitlift/nt.hpp"

namespace unitlift {

enum class RingKind { ZMod, Gaussian, Galois, Matrix, GroupRing };

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

// A finite ring built from one of five shapes:
//   ZMod      Z_m
//   Gaussian  Z_{p^k}[i], p an odd prime
//   Galois    Z_{p^k}[x]/(q(x)), q monic of degree r, irreducible mod p
//   Matrix    n x n matrices over a base ring
//   GroupRing R[G] over a Cayley-table group
//
// Every element is stored as a flat vector of canonical residues; all
// leaf coordinates share one modulus (m or p^k). Moduli are bounded by
// 2^31 at construction so that int64 coordinate products are exact.
class RingDescriptor {
public:
    static RingPtr zmod(std::int64_t m);
    static RingPtr gaussian(std::int64_t p, int k);
    static RingPtr galois(std::int64_t p, int k, std::vector<std::int64_t> q);
    static RingPtr matrix(int n, RingPtr base);
    static RingPtr group_ring(GroupPtr group, RingPtr base);

    RingKind kind() const { return kind_; }
    std::int64_t leaf_modulus() const { return leaf_modulus_; }
    std::size_t coord_count() const { return coord_count_; }
    bool commutative() const { return commutative_; }
    int composite_depth() const { return depth_; }
    Count size() const;  // leaf_modulus ^ coord_count

    // kind-specific accessors (throw on mismatch)
    std::int64_t zmod_modulus() const;
    std::int64_t prime() const;           // Gaussian / Galois p
    int prime_exponent() const;           // Gaussian / Galois k
    const std::vector<std::int64_t>& modulus_poly() const;  // Galois q, ascending
    int extension_degree() const;         // Galois r = deg q
    int matrix_dim() const;
    const RingPtr& base() const;          // Matrix / GroupRing
    const GroupPtr& group() const;

    bool same_as(const RingDescriptor& other) const;
    std::string to_string() const;

    // Rebuilds this descriptor with the leaf modulus replaced by d, which
    // must divide the current one (and be a power of p for Gaussian or
    // Galois leaves). d == current modulus returns an identical ring.
    RingPtr with_leaf_modulus(std::int64_t d) const;

private:
    RingDescriptor() = default;

    RingKind kind_ = RingKind::ZMod;
    std::int64_t m_ = 0;  // ZMod
    std::int64_t p_ = 0;  // Gaussian / Galois
    int k_ = 0;
    std::vector<std::int64_t> q_;  // Galois, ascending degree, monic
    int n_ = 0;                    // Matrix
    RingPtr base_;
    GroupPtr group_;

    std::int64_t leaf_modulus_ = 0;
    std::size_t coord_count_ = 0;
    bool commutative_ = true;
    int depth_ = 0;
};

// Canonical element of a described ring: flat coordinate vector, every
// entry in [0, leaf_modulus).
struct RingElement {
    RingPtr ring;
    std::vector<std::int64_t> coords;

    bool operator==(const RingElement& other) const {
        return ring && other.ring && ring->same_as(*other.ring) && coords == other.coords;
    }
    bool operator!=(const RingElement& other) const { return !(*this == other); }
};

RingElement ring_zero(const RingPtr& ring);
RingElement ring_one(const RingPtr& ring);
RingElement from_scalar(const RingPtr& ring, std::int64_t c);  // c * 1

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement scalar_mul(const Count& c, const RingElement& a);
RingElement pow_element(const RingElement& a, const Count& e);  // e >= 0

bool is_zero(const RingElement& a);
bool is_one(const RingElement& a);

enum class ArithOp { Add, Sub, Mul };
RingElement element_arithmetic(const RingElement& a, const RingElement& b, ArithOp op);

std::string element_to_string(const RingElement& a);

// Principal power ideal <g>^e of a ring, with g a scalar taken in the
// leaf ring and promoted structurally: over matrix rings it denotes
// M_n(<g>^e), over group rings (<g>^e)G. As a set this is exactly the
// elements whose leaf coordinates are all divisible by
// leaf_divisor() = gcd(g^e, leaf_modulus).
struct PowerIdeal {
    RingPtr ring;
    std::int64_t generator = 0;  // canonical in [0, leaf_modulus)
    int exponent = 1;

    PowerIdeal() = default;
    PowerIdeal(RingPtr r, std::int64_t gen, int e);

    std::int64_t leaf_divisor() const;
    bool contains(const RingElement& x) const;
    bool is_zero_ideal() const { return leaf_divisor() == ring->leaf_modulus(); }
    bool is_whole_ring() const { return leaf_divisor() == 1; }
    Count size() const;  // (leaf_modulus / leaf_divisor) ^ coord_count
};

// True when the scalar g is nilpotent in the leaf ring; if so and
// index_out is non-null, stores the nilpotency index.
bool scalar_nilpotent(const RingPtr& ring, std::int64_t g, int* index_out = nullptr);

// Quotient ring R/N as a descriptor (same structure, leaf modulus
// reduced to the ideal's leaf divisor). The zero ideal returns R itself.
RingPtr quotient_descriptor(const PowerIdeal& ideal);

// Canonical image of x in R/N.
RingElement residue_map(const RingElement& x, const PowerIdeal& ideal);

// Reinterpret an element of a quotient ring as an element of the full
// ring, keeping coordinates verbatim (the all-zeros-extension lift).
RingElement lift_zero_extend(const RingElement& x, const RingPtr& target);

// All elements of the ideal in canonical lexicographic order. Throws
// ResourceError when the ideal has more than cap elements.
std::vector<RingElement> ideal_members(const PowerIdeal& ideal, std::size_t cap);

}  // namespace unitlift
