#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unitlift/chain.hpp"
#include "unitlift/ring.hpp"

namespace unitlift {
namespace oracle {

constexpr std::size_t kDefaultCap = 100000;

// Exhaustive view of a ring: elements in canonical lexicographic
// coordinate order. Deliberately naive; this module is the ground truth
// the lifting engine is tested against and must not take algebraic
// shortcuts.
class EnumerableRing {
public:
    explicit EnumerableRing(RingPtr ring, std::size_t cap = kDefaultCap);

    const RingPtr& ring() const { return ring_; }
    std::size_t size() const { return size_; }
    RingElement element_at(std::size_t index) const;
    std::size_t index_of(const RingElement& x) const;

private:
    RingPtr ring_;
    std::size_t size_;
};

// Every (unit, inverse) pair found by scanning all ordered products for
// x*y = y*x = 1, in canonical element order. Asserts that no element has
// two distinct inverses.
std::vector<std::pair<RingElement, RingElement>> enumerate_units(const EnumerableRing& ring);

// The unique two-sided inverse of x, or nullopt. Uniqueness is asserted
// during the scan.
std::optional<RingElement> brute_inverse(const RingElement& x, std::size_t cap = kDefaultCap);

// Exhaustive unit count (same scan as enumerate_units, count only).
Count count_units_by_search(const RingPtr& ring, std::size_t cap = kDefaultCap);

// Minimal t with N^t contained in next (products of t ideal members, as
// sets) and minimal s >= 1 with s*N contained in next, both by exhaustive
// membership.
std::pair<std::int64_t, std::int64_t> infer_indices(const PowerIdeal& N, const PowerIdeal& next,
                                                    std::size_t cap = kDefaultCap);

struct CardinalityCheck {
    std::string label;
    Count lhs;
    Count rhs;
    bool ok = false;
};

struct CardinalityReport {
    std::vector<CardinalityCheck> checks;
    bool pass() const;
    std::string summary() const;
};

// Verifies |R*| = |(R/N_1)*| |N_1| and the levelwise telescoping
// |(R/N_{i+1})*| = |(R/N_i)*| |N_i/N_{i+1}| by enumeration.
CardinalityReport verify_cardinality(const CncChain& chain, std::size_t cap = kDefaultCap);

struct GaussianCountProbe {
    std::int64_t p = 0;
    int k = 0;
    Count enumerated;       // exhaustive unit count of Z_{p^k}[i]
    Count formula_pk;       // (p^2 - 1) p^k
    Count formula_general;  // (p^2 - 1) p^{2(k-1)} = |(Z_p[i])*| |<p>|
    bool pk_matches = false;
    bool general_matches = false;
};

// Decides empirically which closed form matches |Z_{p^k}[i]*|.
GaussianCountProbe probe_gaussian_unit_count(std::int64_t p, int k,
                                             std::size_t cap = kDefaultCap * 10);

}  // namespace oracle
}  // namespace unitlift
