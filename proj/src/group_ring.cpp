#include "unitlift/group_ring.hpp"

#include <algorithm>

#include "unitlift/error.hpp"
#include "unitlift/inversion.hpp"
#include "unitlift/oracle.hpp"

namespace unitlift {

namespace {

void require_group_ring(const RingElement& x, const char* op) {
    if (x.ring->kind() != RingKind::GroupRing)
        throw ShapeError(std::string(op) + ": element is not a group-ring element");
}

struct ChainRingShape {
    std::int64_t p;
    int k;
};

// Accepts Z_{p^k}, Galois rings and Gaussian rings with p = 3 mod 4 as
// chain rings with maximal ideal <p>.
ChainRingShape chain_ring_shape(const RingPtr& base) {
    switch (base->kind()) {
        case RingKind::ZMod: {
            auto factors = nt::factorize(base->zmod_modulus());
            if (factors.size() != 1)
                throw UnsupportedError("chain ring expected: Z_m with composite m is not local");
            return {factors[0].p, factors[0].e};
        }
        case RingKind::Gaussian:
            if (base->prime() % 4 != 3)
                throw UnsupportedError(
                    "Z_{p^k}[i] is a chain ring only for p = 3 mod 4; use the CRT route");
            return {base->prime(), base->prime_exponent()};
        case RingKind::Galois:
            return {base->prime(), base->prime_exponent()};
        default:
            throw UnsupportedError("base is not a supported chain ring");
    }
}

// Shared assembly for the two Z_m[G] inversion theorems.
struct ZmgAssembly {
    RingPtr rg;        // Z_m[G]
    RingElement f;     // sum c_i f_i, the CRT representative
    RingElement w;     // lift of (f mod P)^{-1}
    CncChain chain;    // <P>-power chain over Z_m[G]
    Count S;           // P^{k-1}
    std::vector<RingElement> full_components;  // f mod p_i^{r_i}, over Z_{p_i^{r_i}}[G]
};

ZmgAssembly assemble_zmg(const std::vector<RingElement>& f_components,
                         const std::vector<RingElement>& g_components, const CrtBasis& basis,
                         const GroupPtr& G) {
    if (!G->is_abelian()) throw UnsupportedError("Z_m[G] routes require an abelian group");
    if (f_components.size() != basis.arity() || g_components.size() != basis.arity())
        throw ShapeError("component count does not match the CRT basis");
    for (std::size_t i = 0; i < basis.arity(); ++i) {
        const auto& fc = f_components[i];
        const auto& gc = g_components[i];
        if (fc.ring->kind() != RingKind::GroupRing || gc.ring->kind() != RingKind::GroupRing ||
            !fc.ring->group()->same_as(*G) || !gc.ring->group()->same_as(*G))
            throw ShapeError("components must be group-ring elements over the given group");
        if (fc.ring->leaf_modulus() != basis.factors[i].p ||
            gc.ring->leaf_modulus() != basis.factors[i].p)
            throw ShapeError("component " + std::to_string(i) + " must live over Z_" +
                             std::to_string(basis.factors[i].p));
        if (!is_one(mul(fc, gc)))
            throw ValidationError("component " + std::to_string(i) +
                                  ": g_i is not the inverse of f_i over Z_p[G]");
    }

    ZmgAssembly a;
    a.rg = RingDescriptor::group_ring(G, RingDescriptor::zmod(basis.m));
    const std::int64_t P = basis.radical();
    const int k = basis.max_exponent();

    // f = sum (s_i m_i mod m) f_i, coefficients lifted verbatim
    a.f = ring_zero(a.rg);
    for (std::size_t i = 0; i < basis.arity(); ++i) {
        RingElement lifted = lift_zero_extend(f_components[i], a.rg);
        a.f = add(a.f, scalar_mul(basis.factors[i].coef, lifted));
    }
    a.full_components.reserve(basis.arity());
    for (std::size_t i = 0; i < basis.arity(); ++i) {
        RingPtr comp_ring = a.rg->with_leaf_modulus(basis.factors[i].pr);
        RingElement h{comp_ring, a.f.coords};
        for (auto& c : h.coords) c %= basis.factors[i].pr;
        a.full_components.push_back(std::move(h));
    }

    // w = sum (t_i c_i mod P) g_i over Z_P[G], zero-extended to Z_m[G]
    RingPtr rg_p = a.rg->with_leaf_modulus(P);
    RingElement w_p = ring_zero(rg_p);
    for (std::size_t i = 0; i < basis.arity(); ++i) {
        const std::int64_t ci = P / basis.factors[i].p;
        const std::int64_t ti = nt::mod_inverse(ci % basis.factors[i].p, basis.factors[i].p);
        if (ti < 0) throw InternalError("assemble_zmg: c_i not invertible mod p_i");
        RingElement lifted = lift_zero_extend(g_components[i], rg_p);
        w_p = add(w_p, scalar_mul(ti % P * (ci % P) % P, lifted));
    }
    a.w = lift_zero_extend(w_p, a.rg);

    a.chain = make_power_chain(a.rg, P, k, P);
    a.S = nt::pow_count(Count(P), static_cast<std::uint64_t>(k - 1));
    return a;
}

}  // namespace

RingElement group_ring_mul(const RingElement& x, const RingElement& y) {
    require_group_ring(x, "group_ring_mul");
    return mul(x, y);
}

RingElement group_ring_coefficient(const RingElement& x, int g) {
    require_group_ring(x, "group_ring_coefficient");
    const RingPtr base = x.ring->base();
    const std::size_t L = base->coord_count();
    if (g < 0 || g >= x.ring->group()->order())
        throw ShapeError("group_ring_coefficient: index out of range");
    return {base,
            {x.coords.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(g) * L),
             x.coords.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(g + 1) * L)}};
}

RingElement group_ring_from_coefficients(const RingPtr& group_ring,
                                         const std::vector<RingElement>& coeffs) {
    if (group_ring->kind() != RingKind::GroupRing)
        throw ShapeError("group_ring_from_coefficients: not a group ring");
    const int order = group_ring->group()->order();
    if (coeffs.size() != static_cast<std::size_t>(order))
        throw ShapeError("group_ring_from_coefficients: coefficient count != |G|");
    RingElement out = ring_zero(group_ring);
    const std::size_t L = group_ring->base()->coord_count();
    for (int g = 0; g < order; ++g) {
        if (!coeffs[static_cast<std::size_t>(g)].ring->same_as(*group_ring->base()))
            throw ShapeError("group_ring_from_coefficients: coefficient ring mismatch");
        std::copy(coeffs[static_cast<std::size_t>(g)].coords.begin(),
                  coeffs[static_cast<std::size_t>(g)].coords.end(),
                  out.coords.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(g) * L));
    }
    return out;
}

UnitCertificate lift_inverse_group_ring(const RingElement& x, const RingElement& g,
                                        const PowerIdeal& base_ideal, int k, std::int64_t s) {
    require_group_ring(x, "lift_inverse_group_ring");
    if (!x.ring->base()->same_as(*base_ideal.ring))
        throw ShapeError("lift_inverse_group_ring: ideal is not over the coefficient ring");
    if (base_ideal.exponent != 1)
        throw UnsupportedError("lift_inverse_group_ring: base ideal must be <a>^1");
    CncChain chain = make_power_chain(x.ring, base_ideal.generator, k, s);
    return lift_inverse(x, g, chain);
}

ChainRingUnits chain_ring_units(const RingPtr& base, const GroupPtr& G, std::size_t cap,
                                bool materialize) {
    if (!G->is_abelian()) throw UnsupportedError("chain_ring_units: group must be abelian");
    ChainRingShape shape = chain_ring_shape(base);

    RingPtr rg = RingDescriptor::group_ring(G, base);
    PowerIdeal maximal(base, shape.p, 1);
    RingPtr field = quotient_descriptor(maximal);
    RingPtr fg = RingDescriptor::group_ring(G, field);

    oracle::EnumerableRing fg_enum(fg, cap);
    auto quotient_units = oracle::enumerate_units(fg_enum);

    ChainRingUnits out;
    out.quotient_unit_count = static_cast<std::int64_t>(quotient_units.size());
    out.ideal_size = PowerIdeal(rg, shape.p, 1).size();
    out.total = out.quotient_unit_count * out.ideal_size;

    if (!materialize) return out;
    if (out.total > cap)
        throw ResourceError("chain_ring_units: " + out.total.str() +
                            " units exceed the materialization cap");
    if (shape.k == 1) {
        // R is already the residue field: certificates are direct
        for (const auto& [fbar, gbar] : quotient_units) {
            CncChain chain = make_power_chain(rg, shape.p, 1, shape.p);
            out.certificates.push_back(
                lift_inverse(lift_zero_extend(fbar, rg), lift_zero_extend(gbar, rg), chain));
        }
        return out;
    }
    CncChain chain = make_power_chain(rg, shape.p, shape.k, shape.p);
    auto members = ideal_members(chain.ideals.front(), cap);
    for (const auto& [fbar, gbar] : quotient_units) {
        RingElement f0 = lift_zero_extend(fbar, rg);
        RingElement g = lift_zero_extend(gbar, rg);
        for (const auto& n : members)
            out.certificates.push_back(lift_inverse(add(f0, n), g, chain));
    }
    return out;
}

namespace {

UnitCertificate finish_zmg(const ZmgAssembly& a, const CrtBasis& basis, bool radical_formula) {
    UnitCertificate cert = lift_inverse(a.f, a.w, a.chain);

    if (radical_formula) {
        RingElement inv = mul(pow_element(a.w, a.S), pow_element(a.f, a.S - 1));
        if (inv != cert.inverse)
            throw InternalError("invert_zmg_radical: w^S f^{S-1} disagrees with the lift");
    } else {
        std::vector<RingElement> component_inverses;
        for (std::size_t i = 0; i < basis.arity(); ++i) {
            const auto& factor = basis.factors[i];
            const RingElement& h = a.full_components[i];
            Count alpha = nt::pow_count(Count(factor.p), static_cast<std::uint64_t>(factor.r - 1));
            RingElement gi{h.ring, a.w.coords};
            for (auto& c : gi.coords) c %= factor.pr;
            RingElement hinv = mul(pow_element(gi, alpha), pow_element(h, alpha - 1));
            if (!is_one(mul(h, hinv)))
                throw InternalError("invert_zmg_crt: component inverse failed mod " +
                                    std::to_string(factor.pr));
            component_inverses.push_back(std::move(hinv));
        }
        RingElement inv = crt_combine_element(component_inverses, basis, a.rg);
        if (inv != cert.inverse)
            throw InternalError("invert_zmg_crt: CRT reconstruction disagrees with the lift");
    }
    return cert;
}

}  // namespace

UnitCertificate invert_zmg_crt(const std::vector<RingElement>& f_components,
                               const std::vector<RingElement>& g_components,
                               const CrtBasis& basis, const GroupPtr& G) {
    ZmgAssembly a = assemble_zmg(f_components, g_components, basis, G);
    return finish_zmg(a, basis, /*radical_formula=*/false);
}

UnitCertificate invert_zmg_radical(const std::vector<RingElement>& f_components,
                                   const std::vector<RingElement>& g_components, std::int64_t m,
                                   const GroupPtr& G) {
    CrtBasis basis = CrtBasis::from_modulus(m);
    ZmgAssembly a = assemble_zmg(f_components, g_components, basis, G);
    return finish_zmg(a, basis, /*radical_formula=*/true);
}

UnitCertificate invert_zmg_unit(const RingElement& f, std::size_t cap) {
    require_group_ring(f, "invert_zmg_unit");
    const RingPtr base = f.ring->base();
    if (base->kind() != RingKind::ZMod)
        throw UnsupportedError("invert_zmg_unit: coefficients must be Z_m");
    const GroupPtr G = f.ring->group();
    if (!G->is_abelian()) throw UnsupportedError("invert_zmg_unit: group must be abelian");
    CrtBasis basis = CrtBasis::from_modulus(base->zmod_modulus());

    // residue-field components f mod p_i with brute quotient inverses
    std::vector<RingElement> fbars, gbars;
    for (const auto& factor : basis.factors) {
        PowerIdeal ideal(f.ring, factor.p, 1);
        RingPtr rg_p = f.ring->with_leaf_modulus(factor.p);
        RingElement fbar{rg_p, f.coords};
        for (auto& c : fbar.coords) c %= factor.p;
        auto gbar = try_inverse_in(fbar, cap);
        if (!gbar)
            throw NotAUnitError("invert_zmg_unit: not a unit mod " + std::to_string(factor.p));
        fbars.push_back(std::move(fbar));
        gbars.push_back(std::move(*gbar));
    }
    ZmgAssembly a = assemble_zmg(fbars, gbars, basis, G);
    // the assembled CRT representative must reproduce the input
    if (a.f != f) {
        // f and the representative share all residues mod p_i; rebuild the
        // assembly around f itself so the certificate inverts the input.
        a.f = f;
        a.full_components = crt_split_element(f, basis);
    }
    return finish_zmg(a, basis, /*radical_formula=*/false);
}

Count count_group_ring_units(const RingPtr& base, const PowerIdeal& base_n1, const GroupPtr& G,
                             std::size_t cap) {
    if (!base->same_as(*base_n1.ring))
        throw ShapeError("count_group_ring_units: ideal is not over the base ring");
    RingPtr quotient = quotient_descriptor(base_n1);
    RingPtr qg = RingDescriptor::group_ring(G, quotient);
    Count quotient_units = oracle::count_units_by_search(qg, cap);
    return nt::pow_count(base_n1.size(), static_cast<std::uint64_t>(G->order())) * quotient_units;
}

Count count_zmg_units(const CrtBasis& basis, const GroupPtr& G, std::size_t cap) {
    Count total = nt::pow_count(Count(basis.m / basis.radical()),
                                static_cast<std::uint64_t>(G->order()));
    for (const auto& factor : basis.factors) {
        RingPtr rg_p = RingDescriptor::group_ring(G, RingDescriptor::zmod(factor.p));
        total *= oracle::count_units_by_search(rg_p, cap);
    }
    return total;
}

Count count_zmg_units_radical(const CrtBasis& basis, const GroupPtr& G, std::size_t cap) {
    Count scale = nt::pow_count(Count(basis.m / basis.radical()),
                                static_cast<std::uint64_t>(G->order()));
    RingPtr rg_p = RingDescriptor::group_ring(G, RingDescriptor::zmod(basis.radical()));
    return scale * oracle::count_units_by_search(rg_p, cap);
}

}  // namespace unitlift
