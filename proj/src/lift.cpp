#include "unitlift/lift.hpp"

#include "unitlift/error.hpp"
#include "unitlift/inversion.hpp"

namespace unitlift {

namespace {

void require_validated(const CncChain& chain, const char* op) {
    ValidationReport rep = validate_cnc(chain);
    if (!rep.pass())
        throw ValidationError(std::string(op) + ": chain fails CNC validation\n" + rep.summary());
}

}  // namespace

bool is_unit_via_quotient(const RingElement& x, const CncChain& chain) {
    require_validated(chain, "is_unit_via_quotient");
    RingElement xbar = residue_map(x, chain.ideals.front());
    return is_unit_in(xbar);
}

UnitCertificate lift_inverse(const RingElement& x, const RingElement& g, const CncChain& chain) {
    require_validated(chain, "lift_inverse");
    if (!x.ring->same_as(*chain.ring) || !g.ring->same_as(*chain.ring))
        throw ShapeError("lift_inverse: element does not live in the chain's ring");
    const PowerIdeal& N1 = chain.ideals.front();
    RingElement xg = mul(x, g);
    if (!is_one(residue_map(xg, N1)))
        throw ValidationError("lift_inverse: g is not a quotient inverse of x mod N_1");

    UnitCertificate cert;
    cert.x = x;
    cert.quotient_inverse = g;
    cert.exponent_S = lifting_exponent(chain);
    cert.xg = xg;
    cert.power = pow_element(xg, cert.exponent_S - 1);
    cert.inverse = mul(g, cert.power);

    if (!is_one(mul(x, cert.inverse)) || !is_one(mul(cert.inverse, x)))
        throw InternalError("lift_inverse: postcondition x*inverse = inverse*x = 1 failed");

    Count cumulative = 1;
    for (std::size_t i = 0; i + 1 < chain.length(); ++i) {
        cumulative *= chain.s[i];
        TraceLevel lvl;
        lvl.level = i + 1;
        lvl.cumulative_exponent = cumulative;
        lvl.residue = residue_map(pow_element(xg, cumulative), chain.ideals[i + 1]);
        if (!is_one(lvl.residue))
            throw InternalError("lift_inverse: (xg)^(s_1...s_i) != 1 mod N_" +
                                std::to_string(i + 2));
        cert.trace.push_back(std::move(lvl));
    }
    return cert;
}

RingElement lift_inverse_commutative(const RingElement& x, const RingElement& g,
                                     const CncChain& chain) {
    if (!x.ring->commutative())
        throw UnsupportedError("lift_inverse_commutative: ring is not commutative");
    require_validated(chain, "lift_inverse_commutative");
    RingElement xg = mul(x, g);
    if (!is_one(residue_map(xg, chain.ideals.front())))
        throw ValidationError("lift_inverse_commutative: g is not a quotient inverse of x");
    Count S = lifting_exponent(chain);
    RingElement inv = mul(pow_element(g, S), pow_element(x, S - 1));
    if (!is_one(mul(x, inv)))
        throw InternalError("lift_inverse_commutative: postcondition failed");
    return inv;
}

RingElement binomial_inverse(const RingElement& x, const RingElement& g, const PowerIdeal& N,
                             int nilpotency_bound) {
    if (!x.ring->same_as(*N.ring) || !g.ring->same_as(*N.ring))
        throw ShapeError("binomial_inverse: wrong ring");
    RingElement xg = mul(x, g);
    RingElement w = sub(xg, ring_one(x.ring));
    if (!N.contains(w))
        throw ValidationError("binomial_inverse: xg - 1 does not lie in N");

    int j = 0;
    RingElement wp = w;  // w^e
    for (int e = 1; j == 0 && e <= nilpotency_bound; ++e) {
        if (is_zero(wp))
            j = e;
        else
            wp = mul(wp, w);
    }
    if (j == 0)
        throw ValidationError("binomial_inverse: xg - 1 not nilpotent within the bound");
    const int odd = (j % 2 == 1) ? j : j + 1;  // 2n+1
    const int n2 = odd - 1;                    // 2n

    // powers (xg)^0 .. (xg)^{2n}
    std::vector<RingElement> pows;
    pows.reserve(static_cast<std::size_t>(n2) + 1);
    pows.push_back(ring_one(x.ring));
    for (int e = 1; e <= n2; ++e) pows.push_back(mul(pows.back(), xg));

    RingElement sum = ring_zero(x.ring);
    for (int i = 0; i <= n2; ++i) {
        RingElement term = scalar_mul(nt::binomial(static_cast<std::uint64_t>(odd),
                                                   static_cast<std::uint64_t>(i)),
                                      pows[static_cast<std::size_t>(n2 - i)]);
        sum = (i % 2 == 0) ? add(sum, term) : sub(sum, term);
    }
    RingElement e1 = mul(g, sum);
    if (!is_one(mul(x, e1)) || !is_one(mul(e1, x)))
        throw InternalError("binomial_inverse: postcondition x*e1 = e1*x = 1 failed");
    return e1;
}

RingElement power_reduction_witness(const RingElement& n_elt, std::int64_t p, int t) {
    if (!n_elt.ring->commutative())
        throw UnsupportedError("power_reduction_witness: ring is not commutative");
    if (!nt::is_prime(p)) throw ValidationError("power_reduction_witness: p must be prime");
    if (p < t) throw ValidationError("power_reduction_witness: requires p >= t");
    if (t < 1 || !is_zero(pow_element(n_elt, t)))
        throw ValidationError("power_reduction_witness: n^t != 0");

    RingElement r = ring_zero(n_elt.ring);
    RingElement npow = ring_one(n_elt.ring);  // n^{i-1}
    for (int i = 1; i <= t - 1; ++i) {
        Count ki = nt::binomial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(i));
        if (ki % p != 0) throw InternalError("power_reduction_witness: p does not divide C(p,i)");
        ki /= p;
        r = add(r, scalar_mul(ki, npow));
        npow = mul(npow, n_elt);
    }

    RingElement lhs = pow_element(add(ring_one(n_elt.ring), n_elt), p);
    RingElement rhs = add(ring_one(n_elt.ring), scalar_mul(p, mul(n_elt, r)));
    if (lhs != rhs)
        throw InternalError("power_reduction_witness: (1+n)^p != 1 + p*n*r");
    return r;
}

std::vector<UnitCertificate> unit_class(const RingElement& quotient_unit, const CncChain& chain,
                                        std::size_t cap) {
    ValidationReport rep = validate_cnc(chain);
    if (!rep.pass()) throw ValidationError("unit_class: chain fails CNC validation");
    const PowerIdeal& N1 = chain.ideals.front();
    RingPtr quotient = quotient_descriptor(N1);
    if (!quotient_unit.ring->same_as(*quotient))
        throw ShapeError("unit_class: residue does not live in R/N_1");
    auto gbar = try_inverse_in(quotient_unit, cap);
    if (!gbar) throw NotAUnitError("unit_class: residue is not a unit of R/N_1");
    RingElement g = lift_zero_extend(*gbar, chain.ring);
    RingElement f = lift_zero_extend(quotient_unit, chain.ring);

    std::vector<UnitCertificate> out;
    for (const RingElement& n : ideal_members(N1, cap))
        out.push_back(lift_inverse(add(f, n), g, chain));
    return out;
}

}  // namespace unitlift
