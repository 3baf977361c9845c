#include "unitlift/oracle.hpp"

#include <set>
#include <sstream>

#include "unitlift/error.hpp"

namespace unitlift::oracle {

EnumerableRing::EnumerableRing(RingPtr ring, std::size_t cap) : ring_(std::move(ring)) {
    Count total = ring_->size();
    if (total > cap)
        throw ResourceError("ring of size " + total.str() + " exceeds the enumeration cap " +
                            std::to_string(cap));
    size_ = static_cast<std::size_t>(total);
}

RingElement EnumerableRing::element_at(std::size_t index) const {
    const std::int64_t m = ring_->leaf_modulus();
    RingElement e{ring_, std::vector<std::int64_t>(ring_->coord_count())};
    for (std::size_t pos = e.coords.size(); pos-- > 0;) {
        e.coords[pos] = static_cast<std::int64_t>(index % static_cast<std::size_t>(m));
        index /= static_cast<std::size_t>(m);
    }
    return e;
}

std::size_t EnumerableRing::index_of(const RingElement& x) const {
    const std::int64_t m = ring_->leaf_modulus();
    std::size_t idx = 0;
    for (std::int64_t c : x.coords) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(c);
    return idx;
}

namespace {

// Shared scan core: visits each x in order and hands over its unique
// two-sided inverse when one exists.
template <typename Fn>
void scan_units(const EnumerableRing& ring, Fn&& on_unit) {
    const std::size_t n = ring.size();
    std::vector<RingElement> elems;
    elems.reserve(n);
    for (std::size_t i = 0; i < n; ++i) elems.push_back(ring.element_at(i));
    RingElement prod = ring_zero(ring.ring());
    for (std::size_t i = 0; i < n; ++i) {
        std::ptrdiff_t found = -1;
        for (std::size_t j = 0; j < n; ++j) {
            prod = mul(elems[i], elems[j]);
            if (!is_one(prod)) continue;
            if (!is_one(mul(elems[j], elems[i]))) continue;
            if (found >= 0)
                throw InternalError("oracle: element has two distinct inverses");
            found = static_cast<std::ptrdiff_t>(j);
        }
        if (found >= 0) on_unit(elems[i], elems[static_cast<std::size_t>(found)]);
    }
}

}  // namespace

std::vector<std::pair<RingElement, RingElement>> enumerate_units(const EnumerableRing& ring) {
    std::vector<std::pair<RingElement, RingElement>> out;
    scan_units(ring, [&](const RingElement& x, const RingElement& y) { out.emplace_back(x, y); });
    return out;
}

std::optional<RingElement> brute_inverse(const RingElement& x, std::size_t cap) {
    EnumerableRing ring(x.ring, cap);
    std::optional<RingElement> found;
    for (std::size_t j = 0; j < ring.size(); ++j) {
        RingElement y = ring.element_at(j);
        if (!is_one(mul(x, y)) || !is_one(mul(y, x))) continue;
        if (found) throw InternalError("brute_inverse: two distinct inverses found");
        found = std::move(y);
    }
    return found;
}

Count count_units_by_search(const RingPtr& ring, std::size_t cap) {
    EnumerableRing er(ring, cap);
    Count n = 0;
    scan_units(er, [&](const RingElement&, const RingElement&) { ++n; });
    return n;
}

std::pair<std::int64_t, std::int64_t> infer_indices(const PowerIdeal& N, const PowerIdeal& next,
                                                    std::size_t cap) {
    if (!N.ring->same_as(*next.ring)) throw ShapeError("infer_indices: ideals over different rings");
    std::vector<RingElement> members = ideal_members(N, cap);

    auto in_next = [&](const RingElement& e) { return next.contains(e); };

    // minimal t: products of t members all land in `next`
    std::set<std::vector<std::int64_t>> current;
    for (const auto& e : members) current.insert(e.coords);
    std::int64_t t = 1;
    const std::int64_t t_bound = 64;
    auto all_in_next = [&](const std::set<std::vector<std::int64_t>>& s) {
        for (const auto& c : s)
            if (!in_next(RingElement{N.ring, c})) return false;
        return true;
    };
    while (!all_in_next(current)) {
        if (++t > t_bound) throw ResourceError("infer_indices: nilpotency bound exceeded");
        std::set<std::vector<std::int64_t>> nextset;
        for (const auto& c : current)
            for (const auto& e : members) nextset.insert(mul(RingElement{N.ring, c}, e).coords);
        current = std::move(nextset);
    }

    // minimal s: s * member in `next` for every member
    const std::int64_t m = N.ring->leaf_modulus();
    std::int64_t s = 0;
    for (std::int64_t cand = 1; cand <= m; ++cand) {
        bool ok = true;
        for (const auto& e : members) {
            if (!in_next(scalar_mul(cand, e))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            s = cand;
            break;
        }
    }
    if (s == 0) throw InternalError("infer_indices: no characteristic below the leaf modulus");
    return {t, s};
}

bool CardinalityReport::pass() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string CardinalityReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.ok ? "pass" : "FAIL") << "  " << c.label << ": " << c.lhs.str() << " vs "
           << c.rhs.str() << "\n";
    return os.str();
}

CardinalityReport verify_cardinality(const CncChain& chain, std::size_t cap) {
    CardinalityReport rep;
    ValidationReport v = validate_cnc(chain);
    if (!v.pass()) throw ValidationError("verify_cardinality: chain fails CNC validation");

    auto units_of = [&](const RingPtr& r) { return count_units_by_search(r, cap); };

    const std::size_t k = chain.length();
    std::vector<Count> quotient_units(k + 1);
    // R/N_{k} = R (zero ideal) down to R/N_1
    for (std::size_t i = 0; i < k; ++i)
        quotient_units[i + 1] = units_of(quotient_descriptor(chain.ideals[i]));

    {
        CardinalityCheck c;
        c.label = "|R*| = |(R/N_1)*| |N_1|";
        c.lhs = quotient_units[k];  // R/N_k = R
        c.rhs = quotient_units[1] * chain.ideals.front().size();
        c.ok = c.lhs == c.rhs;
        rep.checks.push_back(c);
    }
    for (std::size_t i = 1; i < k; ++i) {
        CardinalityCheck c;
        c.label = "|(R/N_" + std::to_string(i + 1) + ")*| = |(R/N_" + std::to_string(i) +
                  ")*| |N_" + std::to_string(i) + "/N_" + std::to_string(i + 1) + "|";
        Count ratio = chain.ideals[i - 1].size() / chain.ideals[i].size();
        c.lhs = quotient_units[i + 1];
        c.rhs = quotient_units[i] * ratio;
        c.ok = c.lhs == c.rhs;
        rep.checks.push_back(c);
    }
    return rep;
}

GaussianCountProbe probe_gaussian_unit_count(std::int64_t p, int k, std::size_t cap) {
    GaussianCountProbe probe;
    probe.p = p;
    probe.k = k;
    RingPtr ring = RingDescriptor::gaussian(p, k);
    probe.enumerated = count_units_by_search(ring, cap);
    Count p2m1 = Count(p) * p - 1;
    probe.formula_pk = p2m1 * nt::pow_count(Count(p), static_cast<std::uint64_t>(k));
    probe.formula_general =
        p2m1 * nt::pow_count(Count(p), static_cast<std::uint64_t>(2 * (k - 1)));
    probe.pk_matches = probe.enumerated == probe.formula_pk;
    probe.general_matches = probe.enumerated == probe.formula_general;
    return probe;
}

}  // namespace unitlift::oracle
