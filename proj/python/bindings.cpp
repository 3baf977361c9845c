// pybind11 surface: the main operations, JSON-string in / JSON-string out,
// plus a few typed conveniences for quick use from python.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unitlift/bench.hpp"
#include "unitlift/error.hpp"
#include "unitlift/group_ring.hpp"
#include "unitlift/inversion.hpp"
#include "unitlift/json_io.hpp"
#include "unitlift/matrix.hpp"
#include "unitlift/oracle.hpp"

namespace py = pybind11;
namespace ul = unitlift;
using ul::json;

namespace {

ul::RingPtr ring_of(const std::string& ring_json) {
    return ul::descriptor_from_json(json::parse(ring_json));
}

std::string invert_json(const std::string& ring_json, const std::string& element_json,
                        const std::string& chain_json) {
    ul::RingPtr ring = ring_of(ring_json);
    ul::RingElement x = ul::element_from_json(ring, json::parse(element_json));

    ul::CncChain chain = chain_json.empty() ? ul::canonical_chain(ring)
                                            : ul::chain_from_json(ring, json::parse(chain_json));
    const bool composite = ul::nt::factorize(ring->leaf_modulus()).size() > 1;
    if (chain_json.empty() && composite && ring->kind() == ul::RingKind::Matrix &&
        ring->base()->kind() == ul::RingKind::ZMod) {
        auto inv = ul::invert_matrix_crt(x, ul::CrtBasis::from_modulus(ring->leaf_modulus()));
        json out{{"inverse", ul::element_to_json(inv.inverse)}};
        return out.dump();
    }
    if (chain_json.empty() && composite && ring->kind() == ul::RingKind::GroupRing &&
        ring->base()->kind() == ul::RingKind::ZMod && ring->group()->is_abelian()) {
        ul::UnitCertificate cert = ul::invert_zmg_unit(x);
        json out{{"inverse", ul::element_to_json(cert.inverse)},
                 {"certificate", ul::certificate_to_json(cert)}};
        return out.dump();
    }
    if (!ul::is_unit_via_quotient(x, chain))
        throw ul::NotAUnitError("element is not a unit");
    ul::RingElement xbar = ul::residue_map(x, chain.ideals.front());
    auto gbar = ul::try_inverse_in(xbar);
    if (!gbar) throw ul::NotAUnitError("element is not a unit");
    ul::UnitCertificate cert = ul::lift_inverse(x, ul::lift_zero_extend(*gbar, ring), chain);
    json out{{"inverse", ul::element_to_json(cert.inverse)},
             {"certificate", ul::certificate_to_json(cert)}};
    return out.dump();
}

std::string enumerate_units_json(const std::string& ring_json, std::size_t cap) {
    ul::RingPtr ring = ring_of(ring_json);
    ul::oracle::EnumerableRing er(ring, cap);
    auto units = ul::oracle::enumerate_units(er);
    json list = json::array();
    for (const auto& [x, inv] : units)
        list.push_back({{"element", ul::element_to_json(x)}, {"inverse", ul::element_to_json(inv)}});
    return json{{"count", units.size()}, {"units", list}}.dump();
}

std::string count_units_json(const std::string& ring_json, std::size_t cap) {
    ul::RingPtr ring = ring_of(ring_json);
    ul::Count count;
    switch (ring->kind()) {
        case ul::RingKind::Matrix: {
            ul::CncChain chain = ul::canonical_chain(ring->base());
            count = ul::count_matrix_units(ring, chain, cap);
            break;
        }
        case ul::RingKind::GroupRing: {
            ul::CncChain chain = ul::canonical_chain(ring->base());
            count = ul::count_group_ring_units(ring->base(), chain.ideals.front(), ring->group(),
                                               cap);
            break;
        }
        default:
            count = ul::oracle::count_units_by_search(ring, cap);
    }
    return json{{"count", ul::count_to_json(count)}}.dump();
}

std::int64_t invert_zmod(std::int64_t m, std::int64_t x) {
    ul::RingPtr ring = ul::RingDescriptor::zmod(m);
    ul::RingElement e = ul::from_scalar(ring, x);
    ul::CncChain chain = ul::canonical_chain(ring);
    if (!ul::is_unit_via_quotient(e, chain)) throw ul::NotAUnitError("not a unit");
    ul::RingElement xbar = ul::residue_map(e, chain.ideals.front());
    auto gbar = ul::try_inverse_in(xbar);
    ul::UnitCertificate cert = ul::lift_inverse(e, ul::lift_zero_extend(*gbar, ring), chain);
    return cert.inverse.coords[0];
}

std::vector<std::vector<std::int64_t>> invert_matrix_mod(
    std::int64_t m, const std::vector<std::vector<std::int64_t>>& rows) {
    const int n = static_cast<int>(rows.size());
    ul::RingPtr ring = ul::RingDescriptor::matrix(n, ul::RingDescriptor::zmod(m));
    json payload = json::array();
    for (const auto& row : rows) payload.push_back(row);
    ul::RingElement f = ul::element_from_json(ring, payload);
    ul::RingElement inv =
        ul::nt::factorize(m).size() > 1
            ? ul::invert_matrix_crt(f, ul::CrtBasis::from_modulus(m)).inverse
            : ul::invert_matrix_prime_power(f).inverse;
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i)].push_back(
                ul::matrix_entry(inv, i, j).coords[0]);
    return out;
}

std::string bench_csv(int n, std::int64_t p, int k, int trials, std::uint64_t seed) {
    ul::bench::BenchSuite suite{n, p, k, trials, seed};
    ul::bench::BenchReport report = ul::bench::bench_inversion(suite);
    if (!report.all_methods_agree)
        throw ul::InternalError("bench: inversion methods disagree");
    return report.to_csv();
}

std::string verify_json(const std::string& ring_json, std::size_t cap) {
    ul::RingPtr ring = ring_of(ring_json);
    ul::CncChain chain = ul::canonical_chain(ring);
    ul::oracle::CardinalityReport rep = ul::oracle::verify_cardinality(chain, cap);
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"identity", c.label},
                          {"lhs", ul::count_to_json(c.lhs)},
                          {"rhs", ul::count_to_json(c.rhs)},
                          {"ok", c.ok}});
    return json{{"pass", rep.pass()}, {"checks", checks}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact unit construction in finite rings";

    py::register_exception<ul::NotAUnitError>(m, "NotAUnitError", PyExc_ValueError);
    py::register_exception<ul::ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<ul::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ul::UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
    py::register_exception<ul::ShapeError>(m, "ShapeError", PyExc_ValueError);

    m.def("invert", &invert_json, py::arg("ring"), py::arg("element"), py::arg("chain") = "",
          "invert an element; JSON strings in, JSON certificate out");
    m.def("enumerate_units", &enumerate_units_json, py::arg("ring"), py::arg("cap") = 100000);
    m.def("count_units", &count_units_json, py::arg("ring"), py::arg("cap") = 100000);
    m.def("verify", &verify_json, py::arg("ring"), py::arg("cap") = 100000,
          "cardinality identities for the canonical chain");
    m.def("invert_zmod", &invert_zmod, py::arg("m"), py::arg("x"),
          "inverse of x mod m through the lifting chain");
    m.def("invert_matrix_mod", &invert_matrix_mod, py::arg("m"), py::arg("rows"),
          "matrix inverse over Z_m");
    m.def("bench_csv", &bench_csv, py::arg("n") = 3, py::arg("p") = 3, py::arg("k") = 3,
          py::arg("trials") = 100, py::arg("seed") = 1);
}
