#include "unitlift/inversion.hpp"

#include <numeric>

#include "unitlift/error.hpp"
#include "unitlift/lift.hpp"
#include "unitlift/matrix.hpp"
#include "unitlift/oracle.hpp"

namespace unitlift {

namespace {

using nt::mod_floor;

// Polynomial extended gcd over Z_p: returns u with u*x = 1 mod q when x
// is invertible in Z_p[t]/(q).
std::optional<std::vector<std::int64_t>> galois_field_inverse(
    const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& q, std::int64_t p) {
    auto trim = [](std::vector<std::int64_t> v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
        return v;
    };
    auto deg = [](const std::vector<std::int64_t>& v) { return static_cast<int>(v.size()) - 1; };
    auto is_zero_poly = [](const std::vector<std::int64_t>& v) {
        return v.size() == 1 && v[0] == 0;
    };

    // invariant: r0 = s0 * x (mod q), r1 = s1 * x (mod q)
    std::vector<std::int64_t> r0 = q, r1 = trim(x);
    std::vector<std::int64_t> s0 = {0}, s1 = {1};
    auto submul = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                      std::int64_t c, int shift) {
        // a - c * t^shift * b
        std::vector<std::int64_t> out = a;
        if (out.size() < b.size() + static_cast<std::size_t>(shift))
            out.resize(b.size() + static_cast<std::size_t>(shift), 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            out[i + static_cast<std::size_t>(shift)] =
                mod_floor(out[i + static_cast<std::size_t>(shift)] - c * b[i] % p, p);
        return trim(out);
    };
    while (!is_zero_poly(r1)) {
        if (deg(r1) == 0) {
            std::int64_t c = nt::mod_inverse(r1[0], p);
            std::vector<std::int64_t> inv(s1.size());
            for (std::size_t i = 0; i < s1.size(); ++i) inv[i] = (c * s1[i]) % p;
            return trim(inv);
        }
        if (deg(r0) < deg(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        std::int64_t lead_inv = nt::mod_inverse(r1.back(), p);
        std::int64_t c = (r0.back() * lead_inv) % p;
        int shift = deg(r0) - deg(r1);
        r0 = submul(r0, r1, c, shift);
        s0 = submul(s0, s1, c, shift);
        if (deg(r0) < deg(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    return std::nullopt;  // gcd has positive degree
}

std::optional<RingElement> gaussian_inverse(const RingElement& x) {
    const std::int64_t m = x.ring->leaf_modulus();
    std::int64_t a = x.coords[0], b = x.coords[1];
    std::int64_t norm = (a * a % m + b * b % m) % m;
    std::int64_t ninv = nt::mod_inverse(norm, m);
    if (ninv < 0) return std::nullopt;
    RingElement out{x.ring, {a * ninv % m, mod_floor(-(b * ninv % m), m)}};
    return out;
}

std::optional<RingElement> galois_inverse(const RingElement& x, std::size_t cap) {
    const std::int64_t p = x.ring->prime();
    const int k = x.ring->prime_exponent();
    if (k == 1) {
        std::vector<std::int64_t> qbar = x.ring->modulus_poly();
        for (auto& c : qbar) c = mod_floor(c, p);
        auto inv = galois_field_inverse(x.coords, qbar, p);
        if (!inv) return std::nullopt;
        if (inv->size() > x.coords.size())
            throw InternalError("galois_inverse: cofactor degree exceeds the extension degree");
        RingElement out = ring_zero(x.ring);
        for (std::size_t i = 0; i < inv->size(); ++i) out.coords[i] = (*inv)[i];
        return out;
    }
    // invert mod p, then lift along the <p>-power chain
    CncChain chain = make_power_chain(x.ring, p, k, p);
    RingElement xbar = residue_map(x, chain.ideals.front());
    auto gbar = galois_inverse(xbar, cap);
    if (!gbar) return std::nullopt;
    return lift_inverse(x, lift_zero_extend(*gbar, x.ring), chain).inverse;
}

std::optional<RingElement> matrix_inverse(const RingElement& x, std::size_t cap) {
    const RingPtr base = x.ring->base();
    if (base->commutative()) {
        RingElement d = mat_det(x);
        if (!is_unit_in(d, cap)) return std::nullopt;
        if (auto gj = gauss_jordan_inverse(x)) return gj;
        // invertible but without unit pivots (possible over non-local
        // bases): fall back to det^{-1} * adj for small n
        if (x.ring->matrix_dim() <= 4) {
            auto dinv = try_inverse_in(d, cap);
            if (!dinv) return std::nullopt;
            RingElement adj = mat_adjugate(x);
            const int n = x.ring->matrix_dim();
            std::vector<std::vector<RingElement>> rows(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    rows[static_cast<std::size_t>(i)].push_back(mul(*dinv, matrix_entry(adj, i, j)));
            return matrix_from_entries(x.ring, rows);
        }
        throw UnsupportedError("matrix inverse: no unit pivot and n > 4 over a non-local base");
    }
    return oracle::brute_inverse(x, cap);
}

}  // namespace

std::optional<RingElement> try_inverse_in(const RingElement& x, std::size_t cap) {
    switch (x.ring->kind()) {
        case RingKind::ZMod: {
            std::int64_t inv = nt::mod_inverse(x.coords[0], x.ring->zmod_modulus());
            if (inv < 0) return std::nullopt;
            return RingElement{x.ring, {inv}};
        }
        case RingKind::Gaussian:
            return gaussian_inverse(x);
        case RingKind::Galois:
            return galois_inverse(x, cap);
        case RingKind::Matrix:
            return matrix_inverse(x, cap);
        case RingKind::GroupRing:
            return oracle::brute_inverse(x, cap);
    }
    throw InternalError("try_inverse_in: unhandled kind");
}

bool is_unit_in(const RingElement& x, std::size_t cap) {
    switch (x.ring->kind()) {
        case RingKind::ZMod:
            return std::gcd(x.coords[0], x.ring->zmod_modulus()) == 1;
        case RingKind::Gaussian: {
            const std::int64_t m = x.ring->leaf_modulus();
            std::int64_t norm = (x.coords[0] * x.coords[0] % m + x.coords[1] * x.coords[1] % m) % m;
            return std::gcd(norm, m) == 1;
        }
        case RingKind::Galois: {
            // unit iff nonzero in the residue field
            const std::int64_t p = x.ring->prime();
            for (std::int64_t c : x.coords)
                if (c % p != 0) return true;
            return false;
        }
        case RingKind::Matrix: {
            const RingPtr base = x.ring->base();
            if (base->commutative()) return is_unit_in(mat_det(x), cap);
            return oracle::brute_inverse(x, cap).has_value();
        }
        case RingKind::GroupRing:
            return oracle::brute_inverse(x, cap).has_value();
    }
    throw InternalError("is_unit_in: unhandled kind");
}

}  // namespace unitlift
