#include "unitlift/ring.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "unitlift/error.hpp"

namespace unitlift {

namespace {

constexpr std::int64_t kModulusBound = std::int64_t{1} << 31;
constexpr std::size_t kCoordCap = std::size_t{1} << 20;
constexpr int kMaxMatrixDim = 64;
constexpr int kNilpotencyScanBound = 64;

using nt::mod_floor;

// ---- polynomial helpers over Z_p (ascending coefficients) ----

std::vector<std::int64_t> poly_mod_p(const std::vector<std::int64_t>& q, std::int64_t p) {
    std::vector<std::int64_t> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = mod_floor(q[i], p);
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

std::int64_t poly_eval_mod_p(const std::vector<std::int64_t>& q, std::int64_t x, std::int64_t p) {
    std::int64_t acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = (acc * x + *it) % p;
    return acc;
}

// Remainder of q by a monic divisor d over Z_p.
std::vector<std::int64_t> poly_rem_monic(std::vector<std::int64_t> q,
                                         const std::vector<std::int64_t>& d, std::int64_t p) {
    const std::size_t dd = d.size() - 1;
    while (q.size() > dd) {
        std::int64_t c = q.back();
        const std::size_t shift = q.size() - 1 - dd;
        if (c != 0) {
            for (std::size_t i = 0; i < dd; ++i)
                q[shift + i] = mod_floor(q[shift + i] - c * d[i], p);
        }
        q.pop_back();
    }
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

bool poly_is_zero(const std::vector<std::int64_t>& q) {
    return q.size() == 1 && q[0] == 0;
}

// Exhaustive irreducibility test over Z_p for deg q in [1, 4].
bool poly_irreducible_mod_p(const std::vector<std::int64_t>& q_in, std::int64_t p) {
    auto q = poly_mod_p(q_in, p);
    const int deg = static_cast<int>(q.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    for (std::int64_t x = 0; x < p; ++x)
        if (poly_eval_mod_p(q, x, p) == 0) return false;
    if (deg < 4) return true;
    // deg 4: also rule out a monic irreducible quadratic factor
    for (std::int64_t b = 0; b < p; ++b) {
        for (std::int64_t c = 0; c < p; ++c) {
            std::vector<std::int64_t> d = {c, b, 1};
            if (poly_is_zero(poly_rem_monic(q, d, p))) return false;
        }
    }
    return true;
}

std::int64_t checked_prime_power(std::int64_t p, int k) {
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > (kModulusBound - 1) / p)
            throw ValidationError("p^k exceeds the coordinate modulus bound 2^31");
        v *= p;
    }
    return v;
}

// ---- span arithmetic kernels ----

void add_span(std::size_t n, std::int64_t m, const std::int64_t* a, const std::int64_t* b,
              std::int64_t* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] + b[i]) % m;
}

void accumulate_span(std::size_t n, std::int64_t m, std::int64_t* acc, const std::int64_t* v) {
    for (std::size_t i = 0; i < n; ++i) acc[i] = (acc[i] + v[i]) % m;
}

void mul_span(const RingDescriptor& R, const std::int64_t* a, const std::int64_t* b,
              std::int64_t* out) {
    const std::int64_t m = R.leaf_modulus();
    switch (R.kind()) {
        case RingKind::ZMod: {
            out[0] = (a[0] * b[0]) % m;
            return;
        }
        case RingKind::Gaussian: {
            std::int64_t re = mod_floor(a[0] * b[0] % m - a[1] * b[1] % m, m);
            std::int64_t im = (a[0] * b[1] + a[1] * b[0]) % m;
            out[0] = re;
            out[1] = im;
            return;
        }
        case RingKind::Galois: {
            const auto& q = R.modulus_poly();
            const int r = R.extension_degree();
            std::array<std::int64_t, 7> conv{};  // degree <= 2r-2, r <= 4
            for (int i = 0; i < r; ++i) {
                if (a[i] == 0) continue;
                for (int j = 0; j < r; ++j)
                    conv[i + j] = (conv[i + j] + a[i] * b[j]) % m;
            }
            for (int i = 2 * r - 2; i >= r; --i) {
                std::int64_t c = conv[i];
                if (c == 0) continue;
                conv[i] = 0;
                for (int j = 0; j < r; ++j)
                    conv[i - r + j] = mod_floor(conv[i - r + j] - c * q[j] % m, m);
            }
            for (int i = 0; i < r; ++i) out[i] = conv[i];
            return;
        }
        case RingKind::Matrix: {
            const auto& base = *R.base();
            const int n = R.matrix_dim();
            const std::size_t L = base.coord_count();
            if (base.kind() == RingKind::ZMod) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        std::int64_t acc = 0;
                        for (int k = 0; k < n; ++k)
                            acc = (acc + a[i * n + k] * b[k * n + j]) % m;
                        out[i * n + j] = acc;
                    }
                return;
            }
            std::vector<std::int64_t> tmp(L);
            std::fill(out, out + R.coord_count(), 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    std::int64_t* block = out + (static_cast<std::size_t>(i) * n + j) * L;
                    for (int k = 0; k < n; ++k) {
                        mul_span(base, a + (static_cast<std::size_t>(i) * n + k) * L,
                                 b + (static_cast<std::size_t>(k) * n + j) * L, tmp.data());
                        accumulate_span(L, m, block, tmp.data());
                    }
                }
            return;
        }
        case RingKind::GroupRing: {
            const auto& grp = *R.group();
            const auto& base = *R.base();
            const int order = grp.order();
            const std::size_t L = base.coord_count();
            std::fill(out, out + R.coord_count(), 0);
            if (base.kind() == RingKind::ZMod) {
                for (int g = 0; g < order; ++g) {
                    if (a[g] == 0) continue;
                    for (int h = 0; h < order; ++h) {
                        int t = grp.mul(g, h);
                        out[t] = (out[t] + a[g] * b[h]) % m;
                    }
                }
                return;
            }
            std::vector<std::int64_t> tmp(L);
            for (int g = 0; g < order; ++g)
                for (int h = 0; h < order; ++h) {
                    mul_span(base, a + static_cast<std::size_t>(g) * L,
                             b + static_cast<std::size_t>(h) * L, tmp.data());
                    accumulate_span(L, m, out + static_cast<std::size_t>(grp.mul(g, h)) * L,
                                    tmp.data());
                }
            return;
        }
    }
    throw InternalError("mul_span: unhandled ring kind");
}

void one_span(const RingDescriptor& R, std::int64_t* out) {
    std::fill(out, out + R.coord_count(), 0);
    switch (R.kind()) {
        case RingKind::ZMod:
        case RingKind::Gaussian:
        case RingKind::Galois:
            out[0] = 1 % R.leaf_modulus();
            return;
        case RingKind::Matrix: {
            const auto& base = *R.base();
            const std::size_t L = base.coord_count();
            const int n = R.matrix_dim();
            std::vector<std::int64_t> one(L);
            one_span(base, one.data());
            for (int i = 0; i < n; ++i)
                std::copy(one.begin(), one.end(),
                          out + (static_cast<std::size_t>(i) * n + i) * L);
            return;
        }
        case RingKind::GroupRing:
            one_span(*R.base(), out);
            return;
    }
}

void require_same_ring(const RingElement& a, const RingElement& b, const char* op) {
    if (!a.ring || !b.ring || !a.ring->same_as(*b.ring))
        throw ShapeError(std::string(op) + ": operands live in different rings");
    if (a.coords.size() != a.ring->coord_count() || b.coords.size() != b.ring->coord_count())
        throw ShapeError(std::string(op) + ": payload shape does not match descriptor");
}

}  // namespace

// ---- RingDescriptor ----

RingPtr RingDescriptor::zmod(std::int64_t m) {
    if (m < 2) throw ValidationError("zmod: modulus must be >= 2");
    if (m >= kModulusBound) throw ValidationError("zmod: modulus must be < 2^31");
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->kind_ = RingKind::ZMod;
    r->m_ = m;
    r->leaf_modulus_ = m;
    r->coord_count_ = 1;
    r->commutative_ = true;
    r->depth_ = 0;
    return r;
}

RingPtr RingDescriptor::gaussian(std::int64_t p, int k) {
    if (!nt::is_prime(p)) throw ValidationError("gaussian: p must be prime");
    if (p == 2) throw ValidationError("gaussian: p must be an odd prime");
    if (k < 1) throw ValidationError("gaussian: k must be >= 1");
    std::int64_t pk = checked_prime_power(p, k);
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->kind_ = RingKind::Gaussian;
    r->p_ = p;
    r->k_ = k;
    r->leaf_modulus_ = pk;
    r->coord_count_ = 2;
    r->commutative_ = true;
    r->depth_ = 0;
    return r;
}

RingPtr RingDescriptor::galois(std::int64_t p, int k, std::vector<std::int64_t> q) {
    if (!nt::is_prime(p)) throw ValidationError("galois: p must be prime");
    if (k < 1) throw ValidationError("galois: k must be >= 1");
    std::int64_t pk = checked_prime_power(p, k);
    if (q.size() < 2 || q.size() > 5)
        throw ValidationError("galois: deg q must be in [1, 4]");
    const int r_deg = static_cast<int>(q.size()) - 1;
    if (p > (r_deg == 4 ? 1200 : 1000000))
        throw ValidationError("galois: p too large for the exhaustive irreducibility check");
    for (auto& c : q) c = mod_floor(c, pk);
    if (q.back() != 1) throw ValidationError("galois: q must be monic");
    if (!poly_irreducible_mod_p(q, p))
        throw ValidationError("galois: q is reducible mod p");
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->kind_ = RingKind::Galois;
    r->p_ = p;
    r->k_ = k;
    r->q_ = std::move(q);
    r->leaf_modulus_ = pk;
    r->coord_count_ = static_cast<std::size_t>(r_deg);
    r->commutative_ = true;
    r->depth_ = 0;
    return r;
}

RingPtr RingDescriptor::matrix(int n, RingPtr base) {
    if (!base) throw ValidationError("matrix: null base ring");
    if (n < 1 || n > kMaxMatrixDim) throw ValidationError("matrix: n must be in [1, 64]");
    if (base->composite_depth() >= 2)
        throw ValidationError("matrix: descriptor nesting deeper than 2 is rejected");
    std::size_t coords = static_cast<std::size_t>(n) * n * base->coord_count();
    if (coords > kCoordCap) throw ValidationError("matrix: payload too large");
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->kind_ = RingKind::Matrix;
    r->n_ = n;
    r->base_ = std::move(base);
    r->leaf_modulus_ = r->base_->leaf_modulus();
    r->coord_count_ = coords;
    r->commutative_ = (n == 1) && r->base_->commutative();
    r->depth_ = r->base_->composite_depth() + 1;
    return r;
}

RingPtr RingDescriptor::group_ring(GroupPtr group, RingPtr base) {
    if (!group || !base) throw ValidationError("group_ring: null group or base");
    if (base->composite_depth() >= 2)
        throw ValidationError("group_ring: descriptor nesting deeper than 2 is rejected");
    std::size_t coords = static_cast<std::size_t>(group->order()) * base->coord_count();
    if (coords > kCoordCap) throw ValidationError("group_ring: payload too large");
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->kind_ = RingKind::GroupRing;
    r->group_ = std::move(group);
    r->base_ = std::move(base);
    r->leaf_modulus_ = r->base_->leaf_modulus();
    r->coord_count_ = coords;
    r->commutative_ = r->group_->is_abelian() && r->base_->commutative();
    r->depth_ = r->base_->composite_depth() + 1;
    return r;
}

Count RingDescriptor::size() const {
    return nt::pow_count(Count(leaf_modulus_), coord_count_);
}

std::int64_t RingDescriptor::zmod_modulus() const {
    if (kind_ != RingKind::ZMod) throw ShapeError("not a zmod ring");
    return m_;
}

std::int64_t RingDescriptor::prime() const {
    if (kind_ != RingKind::Gaussian && kind_ != RingKind::Galois)
        throw ShapeError("ring has no prime parameter");
    return p_;
}

int RingDescriptor::prime_exponent() const {
    if (kind_ != RingKind::Gaussian && kind_ != RingKind::Galois)
        throw ShapeError("ring has no prime-exponent parameter");
    return k_;
}

const std::vector<std::int64_t>& RingDescriptor::modulus_poly() const {
    if (kind_ != RingKind::Galois) throw ShapeError("not a Galois ring");
    return q_;
}

int RingDescriptor::extension_degree() const {
    if (kind_ != RingKind::Galois) throw ShapeError("not a Galois ring");
    return static_cast<int>(q_.size()) - 1;
}

int RingDescriptor::matrix_dim() const {
    if (kind_ != RingKind::Matrix) throw ShapeError("not a matrix ring");
    return n_;
}

const RingPtr& RingDescriptor::base() const {
    if (kind_ != RingKind::Matrix && kind_ != RingKind::GroupRing)
        throw ShapeError("ring has no base ring");
    return base_;
}

const GroupPtr& RingDescriptor::group() const {
    if (kind_ != RingKind::GroupRing) throw ShapeError("not a group ring");
    return group_;
}

bool RingDescriptor::same_as(const RingDescriptor& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case RingKind::ZMod:
            return m_ == other.m_;
        case RingKind::Gaussian:
            return p_ == other.p_ && k_ == other.k_;
        case RingKind::Galois:
            return p_ == other.p_ && k_ == other.k_ && q_ == other.q_;
        case RingKind::Matrix:
            return n_ == other.n_ && base_->same_as(*other.base_);
        case RingKind::GroupRing:
            return group_->same_as(*other.group_) && base_->same_as(*other.base_);
    }
    return false;
}

std::string RingDescriptor::to_string() const {
    switch (kind_) {
        case RingKind::ZMod:
            return "Z_" + std::to_string(m_);
        case RingKind::Gaussian:
            return "Z_" + std::to_string(leaf_modulus_) + "[i]";
        case RingKind::Galois:
            return "GR(" + std::to_string(leaf_modulus_) + "," +
                   std::to_string(extension_degree()) + ")";
        case RingKind::Matrix:
            return "M_" + std::to_string(n_) + "(" + base_->to_string() + ")";
        case RingKind::GroupRing:
            return base_->to_string() + "[" + group_->describe() + "]";
    }
    return "?";
}

RingPtr RingDescriptor::with_leaf_modulus(std::int64_t d) const {
    if (d < 2) throw UnsupportedError("quotient ring would be trivial");
    if (leaf_modulus_ % d != 0)
        throw ValidationError("with_leaf_modulus: d does not divide the leaf modulus");
    switch (kind_) {
        case RingKind::ZMod:
            return zmod(d);
        case RingKind::Gaussian: {
            int e = nt::valuation(d, p_);
            if (checked_prime_power(p_, e) != d)
                throw UnsupportedError("gaussian quotient modulus must be a power of p");
            return gaussian(p_, e);
        }
        case RingKind::Galois: {
            int e = nt::valuation(d, p_);
            if (checked_prime_power(p_, e) != d)
                throw UnsupportedError("galois quotient modulus must be a power of p");
            std::vector<std::int64_t> q = q_;
            for (auto& c : q) c = mod_floor(c, d);
            return galois(p_, e, std::move(q));
        }
        case RingKind::Matrix:
            return matrix(n_, base_->with_leaf_modulus(d));
        case RingKind::GroupRing:
            return group_ring(group_, base_->with_leaf_modulus(d));
    }
    throw InternalError("with_leaf_modulus: unhandled kind");
}

// ---- element operations ----

RingElement ring_zero(const RingPtr& ring) {
    return {ring, std::vector<std::int64_t>(ring->coord_count(), 0)};
}

RingElement ring_one(const RingPtr& ring) {
    RingElement e{ring, std::vector<std::int64_t>(ring->coord_count())};
    one_span(*ring, e.coords.data());
    return e;
}

RingElement from_scalar(const RingPtr& ring, std::int64_t c) {
    RingElement e = ring_one(ring);
    const std::int64_t m = ring->leaf_modulus();
    c = mod_floor(c, m);
    for (auto& v : e.coords) v = (v * c) % m;
    return e;
}

RingElement add(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "add");
    RingElement out{a.ring, std::vector<std::int64_t>(a.coords.size())};
    add_span(a.coords.size(), a.ring->leaf_modulus(), a.coords.data(), b.coords.data(),
             out.coords.data());
    return out;
}

RingElement sub(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "sub");
    const std::int64_t m = a.ring->leaf_modulus();
    RingElement out{a.ring, std::vector<std::int64_t>(a.coords.size())};
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords[i] = mod_floor(a.coords[i] - b.coords[i], m);
    return out;
}

RingElement neg(const RingElement& a) {
    const std::int64_t m = a.ring->leaf_modulus();
    RingElement out{a.ring, std::vector<std::int64_t>(a.coords.size())};
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords[i] = a.coords[i] == 0 ? 0 : m - a.coords[i];
    return out;
}

RingElement mul(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "mul");
    RingElement out{a.ring, std::vector<std::int64_t>(a.coords.size())};
    mul_span(*a.ring, a.coords.data(), b.coords.data(), out.coords.data());
    return out;
}

RingElement scalar_mul(const Count& c, const RingElement& a) {
    const std::int64_t m = a.ring->leaf_modulus();
    const std::int64_t cr = static_cast<std::int64_t>(((c % m) + m) % m);
    RingElement out{a.ring, std::vector<std::int64_t>(a.coords.size())};
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords[i] = (a.coords[i] * cr) % m;
    return out;
}

RingElement pow_element(const RingElement& a, const Count& e) {
    if (e < 0) throw ValidationError("pow_element: exponent must be >= 0");
    if (e == 0) return ring_one(a.ring);
    const unsigned bits = boost::multiprecision::msb(e);
    RingElement result = a;
    for (int bit = static_cast<int>(bits) - 1; bit >= 0; --bit) {
        result = mul(result, result);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit)))
            result = mul(result, a);
    }
    return result;
}

bool is_zero(const RingElement& a) {
    return std::all_of(a.coords.begin(), a.coords.end(), [](std::int64_t v) { return v == 0; });
}

bool is_one(const RingElement& a) {
    return a == ring_one(a.ring);
}

RingElement element_arithmetic(const RingElement& a, const RingElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return add(a, b);
        case ArithOp::Sub: return sub(a, b);
        case ArithOp::Mul: return mul(a, b);
    }
    throw InternalError("element_arithmetic: unhandled op");
}

std::string element_to_string(const RingElement& a) {
    const auto& R = *a.ring;
    std::ostringstream os;
    switch (R.kind()) {
        case RingKind::ZMod:
            os << a.coords[0];
            break;
        case RingKind::Gaussian:
            os << a.coords[0] << "+" << a.coords[1] << "i";
            break;
        case RingKind::Galois: {
            bool first = true;
            for (std::size_t i = 0; i < a.coords.size(); ++i) {
                if (a.coords[i] == 0 && a.coords.size() > 1) continue;
                if (!first) os << "+";
                os << a.coords[i];
                if (i == 1) os << "x";
                if (i > 1) os << "x^" << i;
                first = false;
            }
            if (first) os << "0";
            break;
        }
        case RingKind::Matrix: {
            const auto& base = *R.base();
            const std::size_t L = base.coord_count();
            const int n = R.matrix_dim();
            os << "[";
            for (int i = 0; i < n; ++i) {
                os << (i ? "; " : "");
                for (int j = 0; j < n; ++j) {
                    RingElement cell{R.base(),
                                     {a.coords.begin() + static_cast<std::ptrdiff_t>(
                                                             (static_cast<std::size_t>(i) * n + j) * L),
                                      a.coords.begin() + static_cast<std::ptrdiff_t>(
                                                             (static_cast<std::size_t>(i) * n + j + 1) * L)}};
                    os << (j ? " " : "") << element_to_string(cell);
                }
            }
            os << "]";
            break;
        }
        case RingKind::GroupRing: {
            const auto& base = *R.base();
            const std::size_t L = base.coord_count();
            bool first = true;
            for (int g = 0; g < R.group()->order(); ++g) {
                RingElement cell{R.base(),
                                 {a.coords.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(g) * L),
                                  a.coords.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(g + 1) * L)}};
                if (is_zero(cell) && R.group()->order() > 1) continue;
                if (!first) os << " + ";
                os << "(" << element_to_string(cell) << ")";
                if (g > 0) os << "*" << R.group()->element_name(g);
                first = false;
            }
            if (first) os << "0";
            break;
        }
    }
    return os.str();
}

// ---- power ideals, residues, quotients ----

PowerIdeal::PowerIdeal(RingPtr r, std::int64_t gen, int e) : ring(std::move(r)), exponent(e) {
    if (!ring) throw ValidationError("PowerIdeal: null ring");
    if (e < 1) throw ValidationError("PowerIdeal: exponent must be >= 1");
    generator = mod_floor(gen, ring->leaf_modulus());
}

std::int64_t PowerIdeal::leaf_divisor() const {
    const std::int64_t m = ring->leaf_modulus();
    std::int64_t ge = nt::pow_mod(generator, static_cast<std::uint64_t>(exponent), m);
    return ge == 0 ? m : std::gcd(ge, m);
}

bool PowerIdeal::contains(const RingElement& x) const {
    if (!x.ring->same_as(*ring)) throw ShapeError("ideal membership: wrong ring");
    const std::int64_t d = leaf_divisor();
    return std::all_of(x.coords.begin(), x.coords.end(),
                       [d](std::int64_t v) { return v % d == 0; });
}

Count PowerIdeal::size() const {
    return nt::pow_count(Count(ring->leaf_modulus() / leaf_divisor()), ring->coord_count());
}

bool scalar_nilpotent(const RingPtr& ring, std::int64_t g, int* index_out) {
    const std::int64_t m = ring->leaf_modulus();
    g = mod_floor(g, m);
    std::int64_t x = g;
    for (int j = 1; j <= kNilpotencyScanBound; ++j) {
        if (x == 0) {
            if (index_out) *index_out = j;
            return true;
        }
        x = (x * g) % m;
    }
    return false;
}

RingPtr quotient_descriptor(const PowerIdeal& ideal) {
    const std::int64_t d = ideal.leaf_divisor();
    if (d == ideal.ring->leaf_modulus()) return ideal.ring;  // R / {0} = R
    if (d == 1) throw UnsupportedError("quotient by the whole ring is not representable");
    return ideal.ring->with_leaf_modulus(d);
}

RingElement residue_map(const RingElement& x, const PowerIdeal& ideal) {
    if (!x.ring->same_as(*ideal.ring)) throw ShapeError("residue_map: wrong ring");
    RingPtr q = quotient_descriptor(ideal);
    const std::int64_t d = q->leaf_modulus();
    RingElement out{q, std::vector<std::int64_t>(x.coords.size())};
    for (std::size_t i = 0; i < x.coords.size(); ++i) out.coords[i] = x.coords[i] % d;
    return out;
}

RingElement lift_zero_extend(const RingElement& x, const RingPtr& target) {
    if (x.ring->leaf_modulus() > target->leaf_modulus() ||
        target->leaf_modulus() % x.ring->leaf_modulus() != 0 ||
        x.coords.size() != target->coord_count())
        throw ShapeError("lift_zero_extend: source is not a quotient shape of the target");
    if (!target->with_leaf_modulus(x.ring->leaf_modulus())->same_as(*x.ring) &&
        !x.ring->same_as(*target))
        throw ShapeError("lift_zero_extend: structural mismatch");
    return {target, x.coords};
}

std::vector<RingElement> ideal_members(const PowerIdeal& ideal, std::size_t cap) {
    const std::int64_t d = ideal.leaf_divisor();
    const std::int64_t radix = ideal.ring->leaf_modulus() / d;
    const std::size_t n = ideal.ring->coord_count();
    Count total = ideal.size();
    if (total > cap) throw ResourceError("ideal enumeration exceeds cap");
    std::vector<RingElement> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::int64_t> digits(n, 0);
    while (true) {
        RingElement e{ideal.ring, std::vector<std::int64_t>(n)};
        for (std::size_t i = 0; i < n; ++i) e.coords[i] = digits[i] * d;
        out.push_back(std::move(e));
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < radix) break;
            digits[pos] = 0;
            if (pos == 0) return out;
        }
        if (n == 0) return out;
    }
}

}  // namespace unitlift
