#include "unitlift/crt.hpp"

#include "unitlift/error.hpp"

namespace unitlift {

using nt::mod_floor;

CrtBasis CrtBasis::from_modulus(std::int64_t m) {
    if (m < 2) throw ValidationError("crt: modulus must be >= 2");
    CrtBasis basis;
    basis.m = m;
    for (const auto& pp : nt::factorize(m)) {
        Factor f;
        f.p = pp.p;
        f.r = pp.e;
        f.pr = 1;
        for (int i = 0; i < pp.e; ++i) f.pr *= pp.p;
        f.mi = m / f.pr;
        f.si = nt::mod_inverse(f.mi % f.pr, f.pr);
        if (f.si < 0) throw InternalError("crt: m_i not invertible mod p^r");
        f.coef = (f.si % m) * (f.mi % m) % m;
        basis.factors.push_back(f);
    }
    std::int64_t sum = 0;
    for (const auto& f : basis.factors) sum = (sum + f.coef) % m;
    if (sum != 1 % m) throw InternalError("crt: reconstruction coefficients do not sum to 1");
    return basis;
}

std::int64_t CrtBasis::radical() const {
    std::int64_t r = 1;
    for (const auto& f : factors) r *= f.p;
    return r;
}

int CrtBasis::max_exponent() const {
    int k = 1;
    for (const auto& f : factors) k = std::max(k, f.r);
    return k;
}

namespace {

void require_zmod_leaf(const RingElement& x, const CrtBasis& basis, const char* op) {
    RingPtr leaf = x.ring;
    while (leaf->kind() == RingKind::Matrix || leaf->kind() == RingKind::GroupRing)
        leaf = leaf->base();
    if (leaf->kind() != RingKind::ZMod)
        throw ShapeError(std::string(op) + ": leaf ring must be Z_m");
    if (x.ring->leaf_modulus() != basis.m)
        throw ShapeError(std::string(op) + ": basis modulus does not match the ring");
}

}  // namespace

std::vector<RingElement> crt_split_element(const RingElement& x, const CrtBasis& basis) {
    require_zmod_leaf(x, basis, "crt_split");
    std::vector<RingElement> out;
    out.reserve(basis.arity());
    for (const auto& f : basis.factors) {
        RingPtr comp_ring = x.ring->with_leaf_modulus(f.pr);
        RingElement c{comp_ring, std::vector<std::int64_t>(x.coords.size())};
        for (std::size_t i = 0; i < x.coords.size(); ++i) c.coords[i] = x.coords[i] % f.pr;
        out.push_back(std::move(c));
    }
    return out;
}

RingElement crt_combine_element(const std::vector<RingElement>& components, const CrtBasis& basis,
                                const RingPtr& target) {
    if (components.size() != basis.arity())
        throw ShapeError("crt_combine: component count does not match the basis");
    if (target->leaf_modulus() != basis.m)
        throw ShapeError("crt_combine: basis modulus does not match the target ring");
    const std::int64_t m = basis.m;
    RingElement out = ring_zero(target);
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        const auto& f = basis.factors[i];
        if (c.ring->leaf_modulus() != f.pr)
            throw ShapeError("crt_combine: component modulus mismatch");
        if (c.coords.size() != out.coords.size())
            throw ShapeError("crt_combine: component shape mismatch");
        for (std::size_t j = 0; j < out.coords.size(); ++j)
            out.coords[j] = (out.coords[j] + f.coef * c.coords[j]) % m;
    }
    return out;
}

std::vector<RingElement> crt_split(const RingElement& x, const CrtBasis& basis) {
    if (x.ring->kind() != RingKind::ZMod) throw ShapeError("crt_split: element must be over Z_m");
    return crt_split_element(x, basis);
}

RingElement crt_combine(const std::vector<RingElement>& components, const CrtBasis& basis) {
    return crt_combine_element(components, basis, RingDescriptor::zmod(basis.m));
}

}  // namespace unitlift
