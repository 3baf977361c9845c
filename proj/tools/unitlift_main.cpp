// unitlift command line: exact unit construction and verification in
// finite rings.
//
// Exit codes: 0 success, 2 element is not a unit, 3 invalid descriptor,
// element or chain, 4 resource cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "unitlift/bench.hpp"
#include "unitlift/error.hpp"
#include "unitlift/group_ring.hpp"
#include "unitlift/inversion.hpp"
#include "unitlift/json_io.hpp"
#include "unitlift/matrix.hpp"
#include "unitlift/oracle.hpp"

namespace ul = unitlift;
using ul::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotAUnit = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitResource = 4;

std::size_t enumeration_cap() {
    if (const char* env = std::getenv("UNITLIFT_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw ul::ValidationError("UNITLIFT_CAP must be a positive integer");
    }
    return ul::oracle::kDefaultCap;
}

// Option values may be inline JSON or a path to a JSON file.
json parse_json_arg(const std::string& arg, const char* what) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[' && std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ul::ValidationError(std::string("invalid JSON for ") + what + ": " + e.what());
    }
}

struct InvertOutcome {
    json output;
};

// Inversion with automatic routing: prime-power leaves go through the
// canonical <p>-power chain; composite moduli route matrices and abelian
// group rings through CRT and everything else through the <rad(m)>-power
// chain.
InvertOutcome run_invert(const ul::RingPtr& ring, const ul::RingElement& x,
                         const std::optional<json>& chain_json, std::size_t cap) {
    InvertOutcome out;
    out.output["ring"] = ul::descriptor_to_json(ring);
    out.output["element"] = ul::element_to_json(x);

    if (chain_json) {
        ul::CncChain chain = ul::chain_from_json(ring, *chain_json);
        ul::ValidationReport rep = ul::validate_cnc(chain);
        if (!rep.pass()) throw ul::ValidationError("chain fails validation\n" + rep.summary());
        if (!ul::is_unit_via_quotient(x, chain))
            throw ul::NotAUnitError("element is not a unit (quotient residue not invertible)");
        ul::RingElement xbar = ul::residue_map(x, chain.ideals.front());
        auto gbar = ul::try_inverse_in(xbar, cap);
        if (!gbar) throw ul::NotAUnitError("element is not a unit");
        ul::UnitCertificate cert =
            ul::lift_inverse(x, ul::lift_zero_extend(*gbar, ring), chain);
        out.output["route"] = "chain";
        out.output["chain"] = ul::chain_to_json(chain);
        out.output["inverse"] = ul::element_to_json(cert.inverse);
        out.output["certificate"] = ul::certificate_to_json(cert);
        return out;
    }

    const std::int64_t m = ring->leaf_modulus();
    const bool prime_power_leaf = ul::nt::factorize(m).size() == 1;

    if (!prime_power_leaf && ring->kind() == ul::RingKind::Matrix &&
        ring->base()->kind() == ul::RingKind::ZMod) {
        ul::CrtBasis basis = ul::CrtBasis::from_modulus(m);
        ul::CrtMatrixInverse inv = ul::invert_matrix_crt(x, basis);
        out.output["route"] = "matrix-crt";
        out.output["inverse"] = ul::element_to_json(inv.inverse);
        json comps = json::array();
        for (std::size_t i = 0; i < inv.components.size(); ++i)
            comps.push_back({{"modulus", basis.factors[i].pr},
                             {"certificate", ul::certificate_to_json(inv.components[i])}});
        out.output["components"] = comps;
        return out;
    }
    if (!prime_power_leaf && ring->kind() == ul::RingKind::GroupRing &&
        ring->base()->kind() == ul::RingKind::ZMod && ring->group()->is_abelian()) {
        ul::UnitCertificate cert = ul::invert_zmg_unit(x, cap);
        out.output["route"] = "group-ring-crt";
        out.output["inverse"] = ul::element_to_json(cert.inverse);
        out.output["certificate"] = ul::certificate_to_json(cert);
        return out;
    }

    ul::CncChain chain = ul::canonical_chain(ring);
    if (!ul::is_unit_via_quotient(x, chain))
        throw ul::NotAUnitError("element is not a unit (quotient residue not invertible)");
    ul::RingElement xbar = ul::residue_map(x, chain.ideals.front());
    auto gbar = ul::try_inverse_in(xbar, cap);
    if (!gbar) throw ul::NotAUnitError("element is not a unit");
    ul::UnitCertificate cert = ul::lift_inverse(x, ul::lift_zero_extend(*gbar, ring), chain);
    out.output["route"] = prime_power_leaf ? "prime-power-chain" : "radical-chain";
    out.output["chain"] = ul::chain_to_json(chain);
    out.output["inverse"] = ul::element_to_json(cert.inverse);
    out.output["certificate"] = ul::certificate_to_json(cert);
    return out;
}

json run_count(const ul::RingPtr& ring, std::size_t cap) {
    json breakdown;
    ul::Count count;
    switch (ring->kind()) {
        case ul::RingKind::ZMod: {
            // phi(m) from the factorization
            count = 1;
            for (const auto& f : ul::nt::factorize(ring->zmod_modulus())) {
                ul::Count pe = ul::nt::pow_count(ul::Count(f.p), static_cast<std::uint64_t>(f.e));
                count *= pe - pe / f.p;
            }
            breakdown["formula"] = "phi(m)";
            break;
        }
        case ul::RingKind::Gaussian: {
            const std::int64_t p = ring->prime();
            const int k = ring->prime_exponent();
            ul::RingPtr quotient = ul::RingDescriptor::gaussian(p, 1);
            ul::Count quotient_units =
                (p % 4 == 3) ? ul::Count(p) * p - 1
                             : ul::oracle::count_units_by_search(quotient, cap);
            ul::Count ideal = ul::nt::pow_count(ul::Count(p), 2 * static_cast<std::uint64_t>(k - 1));
            count = quotient_units * ideal;
            breakdown["quotient_units"] = ul::count_to_json(quotient_units);
            breakdown["ideal_size"] = ul::count_to_json(ideal);
            breakdown["formula"] = "|Z_p[i]*| * p^(2(k-1))";
            break;
        }
        case ul::RingKind::Galois: {
            const std::int64_t p = ring->prime();
            const int k = ring->prime_exponent();
            const int r = ring->extension_degree();
            ul::Count q = ul::nt::pow_count(ul::Count(p), static_cast<std::uint64_t>(r));
            ul::Count ideal = ul::nt::pow_count(
                ul::Count(p), static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(k - 1));
            count = (q - 1) * ideal;
            breakdown["residue_field"] = ul::count_to_json(q);
            breakdown["formula"] = "(p^r - 1) * p^(r(k-1))";
            break;
        }
        case ul::RingKind::Matrix: {
            const ul::RingPtr base = ring->base();
            const int n = ring->matrix_dim();
            if (base->kind() == ul::RingKind::ZMod &&
                ul::nt::factorize(base->zmod_modulus()).size() > 1) {
                count = 1;
                json parts = json::array();
                for (const auto& f : ul::nt::factorize(base->zmod_modulus())) {
                    ul::Count gl = ul::general_linear_group_order(ul::Count(f.p), n);
                    ul::Count ideal = ul::nt::pow_count(
                        ul::Count(f.p), static_cast<std::uint64_t>(f.e - 1) *
                                            static_cast<std::uint64_t>(n) * n);
                    count *= gl * ideal;
                    parts.push_back({{"p", f.p}, {"gl", ul::count_to_json(gl)}});
                }
                breakdown["per_prime"] = parts;
                breakdown["formula"] = "prod_i |GL_n(F_p_i)| p_i^((r_i-1)n^2)";
            } else {
                ul::CncChain chain = ul::canonical_chain(base);
                count = ul::count_matrix_units(ring, chain, cap);
                breakdown["formula"] = "|GL_n(R/N_1)| |N_1|^(n^2)";
            }
            break;
        }
        case ul::RingKind::GroupRing: {
            const ul::RingPtr base = ring->base();
            if (base->kind() == ul::RingKind::ZMod &&
                ul::nt::factorize(base->zmod_modulus()).size() > 1) {
                if (!ring->group()->is_abelian())
                    throw ul::UnsupportedError("count: composite-modulus group rings need an "
                                               "abelian group");
                ul::CrtBasis basis = ul::CrtBasis::from_modulus(base->zmod_modulus());
                count = ul::count_zmg_units(basis, ring->group(), cap);
                breakdown["formula"] = "(m/rad(m))^|G| prod_i |Z_p_i[G]*|";
            } else {
                ul::CncChain chain = ul::canonical_chain(base);
                count = ul::count_group_ring_units(base, chain.ideals.front(), ring->group(), cap);
                breakdown["formula"] = "|N_1|^|G| |(R/N_1)[G]*|";
            }
            break;
        }
    }
    json out;
    out["ring"] = ul::descriptor_to_json(ring);
    out["count"] = ul::count_to_json(count);
    out["breakdown"] = breakdown;
    return out;
}

json run_verify(const ul::RingPtr& ring, const std::optional<json>& chain_json, std::size_t cap) {
    json out;
    out["ring"] = ul::descriptor_to_json(ring);
    ul::CncChain chain =
        chain_json ? ul::chain_from_json(ring, *chain_json) : ul::canonical_chain(ring);
    ul::ValidationReport rep = ul::validate_cnc(chain);
    out["chain"] = ul::chain_to_json(chain);
    out["chain_valid"] = rep.pass();
    if (!rep.pass()) {
        out["chain_report"] = rep.summary();
        return out;
    }

    // cardinality identities
    ul::oracle::CardinalityReport card = ul::oracle::verify_cardinality(chain, cap);
    json checks = json::array();
    for (const auto& c : card.checks)
        checks.push_back({{"identity", c.label},
                          {"lhs", ul::count_to_json(c.lhs)},
                          {"rhs", ul::count_to_json(c.rhs)},
                          {"ok", c.ok}});
    out["cardinality"] = checks;

    // oracle vs engine unit sets
    ul::oracle::EnumerableRing er(ring, cap);
    auto units = ul::oracle::enumerate_units(er);
    bool engine_agrees = true;
    std::size_t engine_units = 0;
    for (std::size_t i = 0; i < er.size(); ++i) {
        ul::RingElement x = er.element_at(i);
        bool engine_unit = ul::is_unit_via_quotient(x, chain);
        if (engine_unit) ++engine_units;
    }
    if (engine_units != units.size()) engine_agrees = false;
    for (const auto& [x, inv] : units) {
        ul::RingElement xbar = ul::residue_map(x, chain.ideals.front());
        auto gbar = ul::try_inverse_in(xbar, cap);
        if (!gbar) {
            engine_agrees = false;
            break;
        }
        ul::UnitCertificate cert =
            ul::lift_inverse(x, ul::lift_zero_extend(*gbar, ring), chain);
        if (cert.inverse != inv) {
            engine_agrees = false;
            break;
        }
    }
    out["oracle_units"] = units.size();
    out["engine_units"] = engine_units;
    out["engine_matches_oracle"] = engine_agrees;

    // closed-form resolution for Gaussian rings
    if (ring->kind() == ul::RingKind::Gaussian) {
        auto probe = ul::oracle::probe_gaussian_unit_count(ring->prime(), ring->prime_exponent(),
                                                           cap);
        out["gaussian_count_probe"] = {
            {"enumerated", ul::count_to_json(probe.enumerated)},
            {"formula_(p^2-1)p^k", ul::count_to_json(probe.formula_pk)},
            {"formula_(p^2-1)p^(2(k-1))", ul::count_to_json(probe.formula_general)},
            {"pk_matches", probe.pk_matches},
            {"general_matches", probe.general_matches}};
    }
    return out;
}

void print_verify_summary(const json& v, std::ostream& os) {
    os << "ring: " << v["ring"].dump() << "\n";
    os << "chain valid: " << (v["chain_valid"].get<bool>() ? "yes" : "NO") << "\n";
    if (!v.contains("cardinality")) return;
    for (const auto& c : v["cardinality"])
        os << (c["ok"].get<bool>() ? "pass" : "FAIL") << "  " << c["identity"].get<std::string>()
           << "  " << c["lhs"].dump() << " vs " << c["rhs"].dump() << "\n";
    os << "oracle units: " << v["oracle_units"] << ", engine matches: "
       << (v["engine_matches_oracle"].get<bool>() ? "yes" : "NO") << "\n";
    if (v.contains("gaussian_count_probe")) {
        const auto& p = v["gaussian_count_probe"];
        os << "gaussian unit count " << p["enumerated"].dump() << ": (p^2-1)p^k "
           << (p["pk_matches"].get<bool>() ? "matches" : "FAILS") << ", (p^2-1)p^(2(k-1)) "
           << (p["general_matches"].get<bool>() ? "matches" : "FAILS") << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unit construction in finite rings via nilpotent ideal chains"};
    app.require_subcommand(1);

    std::string ring_arg, element_arg, chain_arg, format = "json";
    std::size_t cap_arg = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_element) {
        cmd->add_option("--ring", ring_arg, "ring descriptor (inline JSON or file path)")
            ->required();
        if (needs_element)
            cmd->add_option("--element", element_arg, "element payload (inline JSON or file path)")
                ->required();
        cmd->add_option("--chain", chain_arg, "chain override (inline JSON or file path)");
        cmd->add_option("--format", format, "output format: json|text");
        cmd->add_option("--cap", cap_arg, "enumeration cap override");
    };

    auto* invert = app.add_subcommand("invert", "invert an element, emitting a certificate");
    add_common(invert, true);
    auto* lift_trace =
        app.add_subcommand("lift-trace", "per-level residues of the lifting tower");
    add_common(lift_trace, true);
    auto* enumerate = app.add_subcommand("enumerate", "brute-force unit enumeration");
    add_common(enumerate, false);
    auto* count = app.add_subcommand("count", "unit count with formula breakdown");
    add_common(count, false);
    auto* verify = app.add_subcommand("verify", "oracle identities report");
    add_common(verify, false);

    auto* bench = app.add_subcommand("bench", "matrix inversion kernel benchmark");
    ul::bench::BenchSuite suite;
    std::string bench_format = "csv";
    bench->add_option("--n", suite.n, "matrix dimension");
    bench->add_option("--p", suite.p, "prime");
    bench->add_option("--k", suite.k, "prime exponent");
    bench->add_option("--trials", suite.trials, "number of trials");
    bench->add_option("--seed", suite.seed, "PRNG seed");
    bench->add_option("--format", bench_format, "output format: csv|md|json");

    CLI11_PARSE(app, argc, argv);

    try {
        std::size_t cap = cap_arg > 0 ? cap_arg : enumeration_cap();

        if (bench->parsed()) {
            ul::bench::BenchReport report = ul::bench::bench_inversion(suite);
            if (bench_format == "md") {
                std::cout << report.to_markdown();
            } else if (bench_format == "json") {
                json out;
                out["agree"] = report.all_methods_agree;
                out["csv"] = report.to_csv();
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << report.to_csv();
            }
            if (!report.all_methods_agree) {
                std::cerr << "error: inversion methods disagree\n";
                return 1;
            }
            return kExitOk;
        }

        ul::RingPtr ring = ul::descriptor_from_json(parse_json_arg(ring_arg, "--ring"));
        std::optional<json> chain_json;
        if (!chain_arg.empty()) chain_json = parse_json_arg(chain_arg, "--chain");

        if (invert->parsed() || lift_trace->parsed()) {
            ul::RingElement x =
                ul::element_from_json(ring, parse_json_arg(element_arg, "--element"));
            InvertOutcome outcome = run_invert(ring, x, chain_json, cap);
            if (lift_trace->parsed()) {
                json trace = json::array();
                if (outcome.output.contains("certificate"))
                    trace = outcome.output["certificate"]["trace"];
                std::cout << json{{"trace", trace}}.dump(2) << "\n";
            } else if (format == "text") {
                std::cout << "inverse: " << outcome.output["inverse"].dump() << "\n";
            } else {
                std::cout << outcome.output.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (enumerate->parsed()) {
            ul::oracle::EnumerableRing er(ring, cap);
            auto units = ul::oracle::enumerate_units(er);
            json list = json::array();
            for (const auto& [x, inv] : units)
                list.push_back(
                    {{"element", ul::element_to_json(x)}, {"inverse", ul::element_to_json(inv)}});
            json out{{"ring", ul::descriptor_to_json(ring)},
                     {"count", units.size()},
                     {"units", list}};
            if (format == "text") {
                std::cout << units.size() << " units\n";
                for (const auto& [x, inv] : units)
                    std::cout << ul::element_to_string(x) << "  inverse "
                              << ul::element_to_string(inv) << "\n";
            } else {
                std::cout << out.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (count->parsed()) {
            json out = run_count(ring, cap);
            if (format == "text")
                std::cout << out["count"].dump() << "\n";
            else
                std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            json out = run_verify(ring, chain_json, cap);
            std::cout << out.dump(2) << "\n";
            print_verify_summary(out, std::cerr);
            bool ok = out["chain_valid"].get<bool>() &&
                      (!out.contains("engine_matches_oracle") ||
                       out["engine_matches_oracle"].get<bool>());
            return ok ? kExitOk : 1;
        }
    } catch (const ul::NotAUnitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotAUnit;
    } catch (const ul::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ul::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ul::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ul::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
