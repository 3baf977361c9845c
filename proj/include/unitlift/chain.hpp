#pragma once

#include <string>
#include <vector>

#include "unitlift/ring.hpp"

namespace unitlift {

// An ideal chain N_1 >= N_2 >= ... >= N_k = {0} together with per-step
// nilpotency indices t_i (N_i^{t_i} <= N_{i+1}) and characteristics s_i
// (s_i N_i <= N_{i+1}, every prime factor of s_i at least t_i).
struct CncChain {
    RingPtr ring;
    std::vector<PowerIdeal> ideals;  // N_1 .. N_k
    std::vector<std::int64_t> t;     // size k-1
    std::vector<std::int64_t> s;     // size k-1

    std::size_t length() const { return ideals.size(); }
};

struct ConditionResult {
    bool ok = true;
    std::string detail;
};

struct ValidationReport {
    ConditionResult shape;           // sizes, shared ring, N_k = 0, N_1 proper
    ConditionResult chain;           // N_{i+1} contained in N_i
    ConditionResult nilpotency;      // N_i^{t_i} contained in N_{i+1}, t_i >= 2
    ConditionResult characteristic;  // s_i N_i contained in N_{i+1}
    ConditionResult prime_factors;   // prime factors of s_i >= t_i

    bool pass() const {
        return shape.ok && chain.ok && nilpotency.ok && characteristic.ok && prime_factors.ok;
    }
    std::string summary() const;
};

// The power chain {<a>, <a>^2, ..., <a>^k} with t_i = 2 and s_i = s.
// Requires a^k = 0 and a^{k-1} != 0 in the leaf ring.
CncChain make_power_chain(const RingPtr& ring, std::int64_t a, int k, std::int64_t s);

// Same, with the generator given as a scalar element of the ring.
CncChain make_power_chain(const RingElement& a, int k, std::int64_t s);

// Checks every CNC condition structurally via leaf-divisor arithmetic
// (exact for power ideals). Failures are reported, never thrown.
ValidationReport validate_cnc(const CncChain& chain);

// The composite exponent S = s_1 s_2 ... s_{k-1} (empty product = 1).
Count lifting_exponent(const CncChain& chain);

// The default chain for a descriptor: the <rad(m)>-power chain of the
// leaf modulus, which degenerates to the <p>-power chain when the leaf
// modulus is a prime power.
CncChain canonical_chain(const RingPtr& ring);

}  // namespace unitlift
