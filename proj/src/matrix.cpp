#include "unitlift/matrix.hpp"

#include <algorithm>

#include "unitlift/error.hpp"
#include "unitlift/inversion.hpp"
#include "unitlift/oracle.hpp"

namespace unitlift {

namespace {

void require_matrix(const RingElement& f, const char* op) {
    if (f.ring->kind() != RingKind::Matrix)
        throw ShapeError(std::string(op) + ": element is not a matrix");
}

std::size_t entry_width(const RingElement& f) {
    return f.ring->base()->coord_count();
}

// Determinant of a square matrix of exact integers by fraction-free
// (Bareiss) elimination with row pivoting.
Count integer_determinant(std::vector<std::vector<Count>> a) {
    const std::size_t n = a.size();
    Count divisor = 1;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Count v = a[i][j] * a[col][col] - a[i][col] * a[col][j];
                a[i][j] = v / divisor;  // exact by the Bareiss identity
            }
            a[i][col] = 0;
        }
        divisor = a[col][col];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

RingElement det_cofactor(const RingElement& f) {
    const int n = f.ring->matrix_dim();
    const RingPtr base = f.ring->base();
    if (n == 1) return matrix_entry(f, 0, 0);
    RingElement acc = ring_zero(base);
    for (int j = 0; j < n; ++j) {
        RingElement entry = matrix_entry(f, 0, j);
        if (is_zero(entry)) continue;
        // minor with row 0 and column j removed
        std::vector<std::vector<RingElement>> rows;
        rows.reserve(static_cast<std::size_t>(n) - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<RingElement> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(matrix_entry(f, i, c));
            rows.push_back(std::move(row));
        }
        RingPtr minor_ring = RingDescriptor::matrix(n - 1, base);
        RingElement term = mul(entry, det_cofactor(matrix_from_entries(minor_ring, rows)));
        acc = (j % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

}  // namespace

RingElement matrix_entry(const RingElement& f, int i, int j) {
    require_matrix(f, "matrix_entry");
    const int n = f.ring->matrix_dim();
    if (i < 0 || j < 0 || i >= n || j >= n) throw ShapeError("matrix_entry: index out of range");
    const std::size_t L = entry_width(f);
    const std::size_t off = (static_cast<std::size_t>(i) * n + j) * L;
    return {f.ring->base(),
            {f.coords.begin() + static_cast<std::ptrdiff_t>(off),
             f.coords.begin() + static_cast<std::ptrdiff_t>(off + L)}};
}

RingElement matrix_from_entries(const RingPtr& matrix_ring,
                                const std::vector<std::vector<RingElement>>& entries) {
    const int n = matrix_ring->matrix_dim();
    if (entries.size() != static_cast<std::size_t>(n))
        throw ShapeError("matrix_from_entries: row count mismatch");
    RingElement out = ring_zero(matrix_ring);
    const std::size_t L = matrix_ring->base()->coord_count();
    for (int i = 0; i < n; ++i) {
        if (entries[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n))
            throw ShapeError("matrix_from_entries: column count mismatch");
        for (int j = 0; j < n; ++j) {
            const RingElement& e = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!e.ring->same_as(*matrix_ring->base()))
                throw ShapeError("matrix_from_entries: entry ring mismatch");
            std::copy(e.coords.begin(), e.coords.end(),
                      out.coords.begin() +
                          static_cast<std::ptrdiff_t>((static_cast<std::size_t>(i) * n + j) * L));
        }
    }
    return out;
}

RingElement mat_det(const RingElement& f) {
    require_matrix(f, "mat_det");
    const RingPtr base = f.ring->base();
    if (!base->commutative()) throw UnsupportedError("mat_det: base ring is not commutative");
    const int n = f.ring->matrix_dim();
    if (n <= 4) return det_cofactor(f);
    if (base->kind() != RingKind::ZMod)
        throw UnsupportedError("mat_det: n > 4 supported over Z_m bases only");
    const std::int64_t m = base->zmod_modulus();
    std::vector<std::vector<Count>> a(static_cast<std::size_t>(n),
                                      std::vector<Count>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                f.coords[static_cast<std::size_t>(i) * n + j];
    Count d = integer_determinant(std::move(a)) % m;
    if (d < 0) d += m;
    return from_scalar(base, static_cast<std::int64_t>(d));
}

RingElement mat_adjugate(const RingElement& f) {
    require_matrix(f, "mat_adjugate");
    const RingPtr base = f.ring->base();
    if (!base->commutative())
        throw UnsupportedError("mat_adjugate: base ring is not commutative");
    const int n = f.ring->matrix_dim();
    if (n > 12) throw ResourceError("mat_adjugate: n > 12 not supported");
    if (n == 1) {
        std::vector<std::vector<RingElement>> one = {{ring_one(base)}};
        return matrix_from_entries(f.ring, one);
    }
    RingPtr minor_ring = RingDescriptor::matrix(n - 1, base);
    std::vector<std::vector<RingElement>> adj(
        static_cast<std::size_t>(n),
        std::vector<RingElement>(static_cast<std::size_t>(n), ring_zero(base)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<RingElement>> rows;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<RingElement> row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(matrix_entry(f, r, c));
                rows.push_back(std::move(row));
            }
            RingElement cof = mat_det(matrix_from_entries(minor_ring, rows));
            if ((i + j) % 2 != 0) cof = neg(cof);
            adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(cof);
        }
    return matrix_from_entries(f.ring, adj);
}

std::optional<RingElement> gauss_jordan_inverse(const RingElement& f) {
    require_matrix(f, "gauss_jordan_inverse");
    const int n = f.ring->matrix_dim();
    const RingPtr base = f.ring->base();
    std::vector<std::vector<RingElement>> a(static_cast<std::size_t>(n)),
        inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i)].push_back(matrix_entry(f, i, j));
            inv[static_cast<std::size_t>(i)].push_back(i == j ? ring_one(base) : ring_zero(base));
        }
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        std::optional<RingElement> pivot_inv;
        for (int r = col; r < n && pivot < 0; ++r) {
            pivot_inv = try_inverse_in(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
            if (pivot_inv) pivot = r;
        }
        if (pivot < 0) return std::nullopt;
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
        std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(pivot)]);
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
                mul(*pivot_inv, a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]);
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
                mul(*pivot_inv, inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            RingElement factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (is_zero(factor)) continue;
            for (int j = 0; j < n; ++j) {
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    sub(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                        mul(factor, a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]));
                inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    sub(inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                        mul(factor, inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]));
            }
        }
    }
    return matrix_from_entries(f.ring, inv);
}

RingElement invert_mod_prime(const RingElement& f) {
    require_matrix(f, "invert_mod_prime");
    const RingPtr base = f.ring->base();
    if (base->kind() != RingKind::ZMod || !nt::is_prime(base->zmod_modulus()))
        throw ValidationError("invert_mod_prime: base must be Z_p with p prime");
    auto inv = gauss_jordan_inverse(f);
    if (!inv) throw NotAUnitError("invert_mod_prime: matrix is singular mod p");
    if (f.ring->matrix_dim() <= 3) {
        RingElement d = mat_det(f);
        auto dinv = try_inverse_in(d);
        if (!dinv) throw InternalError("invert_mod_prime: det not invertible after elimination");
        RingElement by_adjugate = mul(from_scalar(f.ring, (*dinv).coords[0]), mat_adjugate(f));
        if (by_adjugate != *inv)
            throw InternalError("invert_mod_prime: adjugate cross-check failed");
    }
    return *inv;
}

UnitCertificate invert_matrix_prime_power(const RingElement& f) {
    require_matrix(f, "invert_matrix_prime_power");
    const RingPtr base = f.ring->base();
    if (base->kind() != RingKind::ZMod)
        throw ValidationError("invert_matrix_prime_power: base must be Z_{p^k}");
    auto factors = nt::factorize(base->zmod_modulus());
    if (factors.size() != 1)
        throw ValidationError("invert_matrix_prime_power: modulus is not a prime power");
    const std::int64_t p = factors[0].p;
    const int k = factors[0].e;

    CncChain chain = make_power_chain(f.ring, p, k, p);
    RingElement fbar = residue_map(f, chain.ideals.front());
    RingElement dbar = mat_det(fbar);
    if (is_zero(dbar))
        throw NotAUnitError("invert_matrix_prime_power: det(f mod p) = 0 in Z_" +
                            std::to_string(p));
    RingElement gbar = invert_mod_prime(fbar);
    RingElement g = lift_zero_extend(gbar, f.ring);
    return lift_inverse(f, g, chain);
}

CrtMatrixInverse invert_matrix_crt(const RingElement& f, const CrtBasis& basis) {
    require_matrix(f, "invert_matrix_crt");
    if (f.ring->base()->kind() != RingKind::ZMod || f.ring->leaf_modulus() != basis.m)
        throw ShapeError("invert_matrix_crt: base must be Z_m matching the basis");
    CrtMatrixInverse out;
    out.basis = basis;
    std::vector<RingElement> inverses;
    auto components = crt_split_element(f, basis);
    for (std::size_t i = 0; i < components.size(); ++i) {
        try {
            out.components.push_back(invert_matrix_prime_power(components[i]));
        } catch (const NotAUnitError&) {
            throw NotAUnitError("invert_matrix_crt: component mod " +
                                std::to_string(basis.factors[i].pr) + " is singular (p = " +
                                std::to_string(basis.factors[i].p) + ")");
        }
        inverses.push_back(out.components.back().inverse);
    }
    out.inverse = crt_combine_element(inverses, basis, f.ring);
    if (!is_one(mul(f, out.inverse)) || !is_one(mul(out.inverse, f)))
        throw InternalError("invert_matrix_crt: postcondition f*f^{-1} = I failed");
    return out;
}

Count general_linear_group_order(const Count& q, int n) {
    Count qn = nt::pow_count(q, static_cast<std::uint64_t>(n));
    Count total = 1;
    Count qi = 1;
    for (int i = 0; i < n; ++i) {
        total *= (qn - qi);
        qi *= q;
    }
    return total;
}

std::optional<Count> residue_field_size(const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::ZMod: {
            auto factors = nt::factorize(ring->zmod_modulus());
            if (factors.size() != 1) return std::nullopt;
            return Count(factors[0].p);
        }
        case RingKind::Gaussian:
            if (ring->prime() % 4 != 3) return std::nullopt;
            return Count(ring->prime()) * ring->prime();
        case RingKind::Galois:
            return nt::pow_count(Count(ring->prime()),
                                 static_cast<std::uint64_t>(ring->extension_degree()));
        default:
            return std::nullopt;
    }
}

Count count_matrix_units(const RingPtr& matrix_ring, const CncChain& base_chain,
                         std::size_t cap) {
    if (matrix_ring->kind() != RingKind::Matrix)
        throw ShapeError("count_matrix_units: not a matrix ring");
    const int n = matrix_ring->matrix_dim();
    const RingPtr base = matrix_ring->base();
    if (!base->same_as(*base_chain.ring))
        throw ShapeError("count_matrix_units: chain is not over the base ring");
    const PowerIdeal& N1 = base_chain.ideals.front();
    RingPtr quotient = quotient_descriptor(N1);

    Count quotient_units;
    if (auto q = field_size(quotient)) {
        quotient_units = general_linear_group_order(*q, n);
    } else {
        RingPtr mq = RingDescriptor::matrix(n, quotient);
        if (mq->size() > cap)
            throw UnsupportedError("count_matrix_units: quotient is not a field and too large "
                                   "to enumerate");
        quotient_units = oracle::count_units_by_search(mq, cap);
    }
    // |N_1|^{n^2} with |N_1| taken in the base ring
    return quotient_units * nt::pow_count(N1.size(), static_cast<std::uint64_t>(n) * n);
}

std::optional<Count> field_size(const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::ZMod:
            return nt::is_prime(ring->zmod_modulus()) ? std::optional<Count>(ring->zmod_modulus())
                                                      : std::nullopt;
        case RingKind::Gaussian:
            if (ring->prime_exponent() == 1 && ring->prime() % 4 == 3)
                return Count(ring->prime()) * ring->prime();
            return std::nullopt;
        case RingKind::Galois:
            if (ring->prime_exponent() == 1)
                return nt::pow_count(Count(ring->prime()),
                                     static_cast<std::uint64_t>(ring->extension_degree()));
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

}  // namespace unitlift
