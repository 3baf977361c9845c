#include "unitlift/chain.hpp"

#include <numeric>
#include <sstream>

#include "unitlift/error.hpp"

namespace unitlift {

using nt::mod_floor;

std::string ValidationReport::summary() const {
    std::ostringstream os;
    auto line = [&](const char* name, const ConditionResult& c) {
        os << name << ": " << (c.ok ? "pass" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    };
    line("shape", shape);
    line("chain condition", chain);
    line("nilpotency condition", nilpotency);
    line("characteristic condition", characteristic);
    line("prime-factor rule", prime_factors);
    return os.str();
}

CncChain make_power_chain(const RingPtr& ring, std::int64_t a, int k, std::int64_t s) {
    if (k < 1) throw ValidationError("make_power_chain: k must be >= 1");
    if (s < 1) throw ValidationError("make_power_chain: s must be >= 1");
    const std::int64_t m = ring->leaf_modulus();
    a = mod_floor(a, m);
    int idx = 0;
    if (!scalar_nilpotent(ring, a, &idx))
        throw ValidationError("make_power_chain: generator is not nilpotent");
    if (idx != k)
        throw ValidationError("make_power_chain: generator has nilpotency index " +
                              std::to_string(idx) + ", not " + std::to_string(k));
    CncChain chain;
    chain.ring = ring;
    for (int e = 1; e <= k; ++e) chain.ideals.emplace_back(ring, a, e);
    chain.t.assign(static_cast<std::size_t>(k) - 1, 2);
    chain.s.assign(static_cast<std::size_t>(k) - 1, s);
    return chain;
}

CncChain make_power_chain(const RingElement& a, int k, std::int64_t s) {
    // The generator must be a scalar multiple of 1.
    const std::int64_t m = a.ring->leaf_modulus();
    RingElement one = ring_one(a.ring);
    std::int64_t c = -1;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (one.coords[i] == 1) {
            if (c < 0)
                c = a.coords[i];
            else if (c != a.coords[i])
                throw UnsupportedError("make_power_chain: generator must be scalar");
        } else if (a.coords[i] != 0) {
            throw UnsupportedError("make_power_chain: generator must be scalar");
        }
    }
    if (c < 0) throw InternalError("make_power_chain: ring has no unit coordinate");
    (void)m;
    return make_power_chain(a.ring, c, k, s);
}

ValidationReport validate_cnc(const CncChain& chain) {
    ValidationReport rep;
    const std::size_t k = chain.length();
    if (!chain.ring || k == 0) {
        rep.shape = {false, "empty chain"};
        return rep;
    }
    if (chain.t.size() != k - 1 || chain.s.size() != k - 1) {
        rep.shape = {false, "t/s lists must have k-1 entries"};
        return rep;
    }
    for (const auto& ideal : chain.ideals) {
        if (!ideal.ring->same_as(*chain.ring)) {
            rep.shape = {false, "ideals live in different rings"};
            return rep;
        }
    }
    const std::int64_t m = chain.ring->leaf_modulus();
    std::vector<std::int64_t> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = chain.ideals[i].leaf_divisor();
    if (d[k - 1] != m)
        rep.shape = {false, "last ideal is not the zero ideal"};
    else if (d[0] == 1)
        rep.shape = {false, "N_1 is the whole ring"};

    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (d[i + 1] % d[i] != 0) {
            rep.chain = {false, "N_" + std::to_string(i + 2) + " is not contained in N_" +
                                    std::to_string(i + 1)};
            break;
        }
    }

    for (std::size_t i = 0; i + 1 < k; ++i) {
        const std::int64_t ti = chain.t[i];
        if (ti < 2) {
            rep.nilpotency = {false, "t_" + std::to_string(i + 1) + " < 2"};
            break;
        }
        // N_i^{t_i} = <d_i^{t_i}>; containment in <d_{i+1}> needs
        // d_{i+1} | gcd(d_i^{t_i}, m).
        std::int64_t pw = nt::pow_mod(d[i] % m, static_cast<std::uint64_t>(ti), m);
        std::int64_t dv = pw == 0 ? m : std::gcd(pw, m);
        if (dv % d[i + 1] != 0) {
            rep.nilpotency = {false, "N_" + std::to_string(i + 1) + "^" + std::to_string(ti) +
                                         " is not contained in N_" + std::to_string(i + 2)};
            break;
        }
    }

    for (std::size_t i = 0; i + 1 < k; ++i) {
        const std::int64_t si = chain.s[i];
        if (si < 1) {
            rep.characteristic = {false, "s_" + std::to_string(i + 1) + " < 1"};
            break;
        }
        std::int64_t prod = mod_floor(si % m * (d[i] % m), m);
        std::int64_t dv = prod == 0 ? m : std::gcd(prod, m);
        if (dv % d[i + 1] != 0) {
            rep.characteristic = {false, "s_" + std::to_string(i + 1) + "*N_" +
                                             std::to_string(i + 1) + " is not contained in N_" +
                                             std::to_string(i + 2)};
            break;
        }
    }

    // Every prime factor of s_i must be >= t_i; s_i = 1 is vacuous.
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (chain.s[i] == 1) continue;
        for (const auto& pp : nt::factorize(chain.s[i])) {
            if (pp.p < chain.t[i]) {
                rep.prime_factors = {false, "s_" + std::to_string(i + 1) + " has prime factor " +
                                               std::to_string(pp.p) + " < t_" +
                                               std::to_string(i + 1)};
                break;
            }
        }
        if (!rep.prime_factors.ok) break;
    }
    return rep;
}

Count lifting_exponent(const CncChain& chain) {
    Count S = 1;
    for (std::int64_t si : chain.s) S *= si;
    return S;
}

CncChain canonical_chain(const RingPtr& ring) {
    const std::int64_t m = ring->leaf_modulus();
    auto factors = nt::factorize(m);
    std::int64_t rad = 1;
    int k = 1;
    for (const auto& f : factors) {
        rad *= f.p;
        k = std::max(k, f.e);
    }
    return make_power_chain(ring, rad, k, rad);
}

}  // namespace unitlift
