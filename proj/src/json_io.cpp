#include "unitlift/json_io.hpp"

#include <limits>

#include "unitlift/error.hpp"

namespace unitlift {

namespace {

using nt::mod_floor;

std::int64_t require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ValidationError(std::string("expected an integer for ") + what);
    return j.get<std::int64_t>();
}

// nested element payload -> flat coordinates
void element_coords_from_json(const RingDescriptor& ring, const json& j,
                              std::vector<std::int64_t>& out) {
    const std::int64_t m = ring.leaf_modulus();
    switch (ring.kind()) {
        case RingKind::ZMod:
            out.push_back(mod_floor(require_int(j, "zmod element"), m));
            return;
        case RingKind::Gaussian:
        case RingKind::Galois: {
            if (!j.is_array() || j.size() != ring.coord_count())
                throw ValidationError("element payload shape does not match the descriptor");
            for (const auto& c : j) out.push_back(mod_floor(require_int(c, "coefficient"), m));
            return;
        }
        case RingKind::Matrix: {
            const int n = ring.matrix_dim();
            if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
                throw ValidationError("matrix element must have n rows");
            for (const auto& row : j) {
                if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
                    throw ValidationError("matrix element must have n columns per row");
                for (const auto& cell : row) element_coords_from_json(*ring.base(), cell, out);
            }
            return;
        }
        case RingKind::GroupRing: {
            const int order = ring.group()->order();
            if (!j.is_array() || j.size() != static_cast<std::size_t>(order))
                throw ValidationError("group-ring element must have |G| coefficients");
            for (const auto& c : j) element_coords_from_json(*ring.base(), c, out);
            return;
        }
    }
    throw InternalError("element_coords_from_json: unhandled kind");
}

json element_json_from_coords(const RingDescriptor& ring, const std::int64_t*& cursor) {
    switch (ring.kind()) {
        case RingKind::ZMod:
            return *cursor++;
        case RingKind::Gaussian:
        case RingKind::Galois: {
            json arr = json::array();
            for (std::size_t i = 0; i < ring.coord_count(); ++i) arr.push_back(*cursor++);
            return arr;
        }
        case RingKind::Matrix: {
            const int n = ring.matrix_dim();
            json rows = json::array();
            for (int i = 0; i < n; ++i) {
                json row = json::array();
                for (int j = 0; j < n; ++j)
                    row.push_back(element_json_from_coords(*ring.base(), cursor));
                rows.push_back(std::move(row));
            }
            return rows;
        }
        case RingKind::GroupRing: {
            json arr = json::array();
            for (int g = 0; g < ring.group()->order(); ++g)
                arr.push_back(element_json_from_coords(*ring.base(), cursor));
            return arr;
        }
    }
    throw InternalError("element_json_from_coords: unhandled kind");
}

}  // namespace

json descriptor_to_json(const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::ZMod:
            return {{"type", "zmod"}, {"m", ring->zmod_modulus()}};
        case RingKind::Gaussian:
            return {{"type", "gaussian"}, {"p", ring->prime()}, {"k", ring->prime_exponent()}};
        case RingKind::Galois:
            return {{"type", "galois"},
                    {"p", ring->prime()},
                    {"k", ring->prime_exponent()},
                    {"q", ring->modulus_poly()}};
        case RingKind::Matrix:
            return {{"type", "matrix"},
                    {"n", ring->matrix_dim()},
                    {"base", descriptor_to_json(ring->base())}};
        case RingKind::GroupRing:
            return {{"type", "group_ring"},
                    {"group", group_to_json(ring->group())},
                    {"base", descriptor_to_json(ring->base())}};
    }
    throw InternalError("descriptor_to_json: unhandled kind");
}

RingPtr descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ValidationError("ring descriptor must be an object with a \"type\" tag");
    const std::string type = j.at("type").get<std::string>();
    if (type == "zmod") return RingDescriptor::zmod(require_int(j.at("m"), "m"));
    if (type == "gaussian")
        return RingDescriptor::gaussian(require_int(j.at("p"), "p"),
                                        static_cast<int>(require_int(j.at("k"), "k")));
    if (type == "galois") {
        std::vector<std::int64_t> q;
        for (const auto& c : j.at("q")) q.push_back(require_int(c, "q coefficient"));
        return RingDescriptor::galois(require_int(j.at("p"), "p"),
                                      static_cast<int>(require_int(j.at("k"), "k")), std::move(q));
    }
    if (type == "matrix")
        return RingDescriptor::matrix(static_cast<int>(require_int(j.at("n"), "n")),
                                      descriptor_from_json(j.at("base")));
    if (type == "group_ring")
        return RingDescriptor::group_ring(group_from_json(j.at("group")),
                                          descriptor_from_json(j.at("base")));
    throw ValidationError("unknown ring descriptor type: " + type);
}

json group_to_json(const GroupPtr& group) {
    switch (group->group_kind()) {
        case GroupKind::Cyclic:
            return {{"type", "cyclic"}, {"n", group->parameter()}};
        case GroupKind::Symmetric:
            return {{"type", "symmetric"}, {"n", group->parameter()}};
        case GroupKind::Product: {
            json factors = json::array();
            for (const auto& f : group->factors()) factors.push_back(group_to_json(f));
            return {{"type", "product"}, {"factors", factors}};
        }
    }
    throw InternalError("group_to_json: unhandled kind");
}

GroupPtr group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ValidationError("group descriptor must be an object with a \"type\" tag");
    const std::string type = j.at("type").get<std::string>();
    if (type == "cyclic")
        return FiniteGroup::cyclic(static_cast<int>(require_int(j.at("n"), "n")));
    if (type == "symmetric")
        return FiniteGroup::symmetric(static_cast<int>(require_int(j.at("n"), "n")));
    if (type == "product") {
        const auto& factors = j.at("factors");
        if (!factors.is_array() || factors.empty())
            throw ValidationError("product group needs a non-empty factor list");
        GroupPtr acc = group_from_json(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = FiniteGroup::direct_product(acc, group_from_json(factors[i]));
        return acc;
    }
    throw ValidationError("unknown group type: " + type);
}

json element_to_json(const RingElement& x) {
    const std::int64_t* cursor = x.coords.data();
    return element_json_from_coords(*x.ring, cursor);
}

RingElement element_from_json(const RingPtr& ring, const json& j) {
    RingElement e{ring, {}};
    e.coords.reserve(ring->coord_count());
    element_coords_from_json(*ring, j, e.coords);
    return e;
}

json chain_to_json(const CncChain& chain) {
    json ideals = json::array();
    for (const auto& ideal : chain.ideals)
        ideals.push_back({{"generator", ideal.generator}, {"exponent", ideal.exponent}});
    return {{"ideals", ideals}, {"t", chain.t}, {"s", chain.s}};
}

CncChain chain_from_json(const RingPtr& ring, const json& j) {
    if (j.is_object() && j.contains("chain")) {
        const auto& c = j.at("chain");
        return make_power_chain(ring, require_int(c.at("generator"), "generator"),
                                static_cast<int>(require_int(c.at("k"), "k")),
                                require_int(c.at("s"), "s"));
    }
    if (j.is_object() && j.contains("ideals")) {
        CncChain chain;
        chain.ring = ring;
        for (const auto& ideal : j.at("ideals"))
            chain.ideals.emplace_back(ring, require_int(ideal.at("generator"), "generator"),
                                      static_cast<int>(require_int(ideal.at("exponent"),
                                                                   "exponent")));
        for (const auto& t : j.at("t")) chain.t.push_back(require_int(t, "t"));
        for (const auto& s : j.at("s")) chain.s.push_back(require_int(s, "s"));
        return chain;
    }
    throw ValidationError("chain JSON must contain \"chain\" or \"ideals\"");
}

json certificate_to_json(const UnitCertificate& cert) {
    json trace = json::array();
    for (const auto& lvl : cert.trace)
        trace.push_back({{"level", lvl.level},
                         {"cumulative_exponent", count_to_json(lvl.cumulative_exponent)},
                         {"quotient", descriptor_to_json(lvl.residue.ring)},
                         {"residue", element_to_json(lvl.residue)}});
    return {{"element", element_to_json(cert.x)},
            {"inverse", element_to_json(cert.inverse)},
            {"quotient_inverse", element_to_json(cert.quotient_inverse)},
            {"exponent_S", count_to_json(cert.exponent_S)},
            {"xg", element_to_json(cert.xg)},
            {"power", element_to_json(cert.power)},
            {"trace", trace}};
}

json count_to_json(const Count& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

}  // namespace unitlift
