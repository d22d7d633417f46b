#pragma once

// Subcommand bodies for zqr_cli. Each returns a Report; run() wires them to CLI11 and
// maps failures onto exit codes.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "zqr/zqr.hpp"

namespace zqr::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapExceeded = 3 };

struct Options {
    std::uint32_t q = 4;
    std::string aut = "0,3";
    std::string lambda = "1";
    std::size_t alpha = 0;
    std::string g_alpha = "1";
    std::size_t beta = 0;
    std::string h_beta;
    std::string map = "double";
    std::string span = "spanning";
    std::string manifest;
    std::vector<std::size_t> degrees;
    std::optional<std::uint64_t> max_enum;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 1;
    std::string format = "text";
};

struct Report {
    std::vector<std::string> lines;
    nlohmann::json data = nlohmann::json::object();
    int status = kOk;

    void print(std::ostream& out, bool json) const {
        if (json) {
            nlohmann::json j = data;
            j["status"] = status;
            out << j.dump(2) << "\n";
        } else {
            for (auto& l : lines) out << l << "\n";
        }
    }
};

inline Automorphism parse_aut(const Ring& ring, const std::string& text) {
    auto parts = detail::split(text, ',');
    if (parts.size() != 2) throw Error(ErrorKind::ParseError, "--aut expects k,d, got '" + text + "'");
    return make_automorphism(ring, static_cast<Zq>(detail::parse_int(parts[0], text)), static_cast<Zq>(detail::parse_int(parts[1], text)));
}

inline std::uint64_t cap_or(const Options& o, std::uint64_t fallback) { return o.max_enum.value_or(fallback); }

inline Report cmd_aut(const Options& o) {
    const Ring ring(o.q);
    Report r;
    auto all = all_automorphisms(ring);
    r.lines.push_back(std::to_string(all.size()) + " automorphisms of Z" + std::to_string(o.q) + "+uZ" + std::to_string(o.q));
    r.data["q"] = o.q;
    r.data["automorphisms"] = nlohmann::json::array();
    for (auto& t : all) {
        r.lines.push_back("  k=" + std::to_string(t.k()) + " d=" + std::to_string(t.d()) + " order=" + std::to_string(t.order()) +
                          (t.is_identity() ? " (identity)" : ""));
        r.data["automorphisms"].push_back({{"k", t.k()}, {"d", t.d()}, {"order", t.order()}});
    }
    return r;
}

inline Report cmd_divisors(const Options& o) {
    const Ring ring(o.q);
    const auto theta = parse_aut(ring, o.aut);
    const RingElem lam = parse_ring_elem(ring, o.lambda);
    if (o.beta == 0) throw Error(ErrorKind::ParseError, "--beta is required");
    std::vector<std::size_t> degrees = o.degrees;
    if (degrees.empty())
        for (std::size_t d = 1; d <= o.beta; ++d) degrees.push_back(d);
    Report r;
    r.data["beta"] = o.beta;
    r.data["divisors"] = nlohmann::json::array();
    std::size_t total = 0;
    for (auto deg : degrees) {
        auto pairs = right_divisor_pairs(o.beta, lam, deg, theta, cap_or(o, kDefaultDivisorCap), o.threads);
        total += pairs.size();
        r.lines.push_back("degree " + std::to_string(deg) + ": " + std::to_string(pairs.size()) + " monic right divisors");
        for (auto& p : pairs) {
            r.lines.push_back("  h=" + format_r_poly(p.h) + "  g=" + format_r_poly(p.g));
            r.data["divisors"].push_back({{"degree", deg}, {"h", format_r_poly(p.h)}, {"g", format_r_poly(p.g)}});
        }
    }
    r.data["count"] = total;
    return r;
}

inline Report cmd_build(const Options& o) {
    const Ring ring(o.q);
    const auto theta = parse_aut(ring, o.aut);
    const RingElem lam = parse_ring_elem(ring, o.lambda);
    if (o.beta == 0 || o.h_beta.empty()) throw Error(ErrorKind::ParseError, "build needs --beta and --h-beta");
    const auto variant = parse_gray_variant(o.map);
    const auto rule = parse_span_rule(o.span);
    const auto h = parse_r_poly(theta, o.h_beta);
    const auto parity = generator_from_parity(h, o.beta, lam);
    const auto spec = make_mixed_spec(o.alpha, o.beta, lam, parse_zq_poly(ring, o.g_alpha), parity.g);
    const auto code = build_table_code(spec, *h.degree(), rule);
    const auto params = gray_parameters(code, variant, cap_or(o, kDefaultCodewordCap), o.threads);
    Report r;
    r.lines.push_back(params.to_string());
    r.lines.push_back("g_beta=" + format_r_poly(parity.g) + " side=" + std::string(to_string(parity.side)) +
                      " map=" + std::string(to_string(variant)) + " span=" + std::string(to_string(rule)));
    r.data = {{"n", params.n},
              {"k1", params.type.k1()},
              {"k2", params.type.k2()},
              {"d", params.d_lee},
              {"parameters", params.to_string()},
              {"g_beta", format_r_poly(parity.g)},
              {"side", to_string(parity.side)},
              {"map", to_string(variant)},
              {"span", to_string(rule)}};
    return r;
}

inline Report cmd_table1(const Options& o) {
    const std::string text = o.manifest.empty() ? std::string(kTable1Manifest) : read_manifest_file(o.manifest);
    Report r;
    r.data["rows"] = nlohmann::json::array();
    std::size_t pass = 0, total = 0;
    for (const auto& row : parse_manifest(text)) {
        auto res = reproduce_row(row, o.threads, cap_or(o, kDefaultCodewordCap));
        ++total;
        pass += res.pass;
        std::string got = res.params ? res.params->to_string() : "-";
        r.lines.push_back("line " + std::to_string(row.line) + ": expected " + res.expected_string() + " got " + got + " " +
                          (res.pass ? "PASS" : "FAIL") + (res.pass || res.params ? "" : " (" + res.message + ")"));
        r.data["rows"].push_back({{"line", row.line},
                                  {"expected", res.expected_string()},
                                  {"got", got},
                                  {"pass", res.pass},
                                  {"variant", res.variant ? std::string(to_string(*res.variant)) : ""},
                                  {"message", res.message}});
    }
    r.lines.push_back(std::to_string(pass) + "/" + std::to_string(total) + " PASS");
    r.data["passed"] = pass;
    r.data["total"] = total;
    r.status = pass == total ? kOk : kCheckFailed;
    return r;
}

/// Brute-force dual of the code with parity check --h-beta (and --g-alpha when --alpha > 0).
/// The inverse-constacyclic closure is checked when m | beta and theta fixes lambda.
inline Report cmd_dual(const Options& o) {
    const Ring ring(o.q);
    const auto theta = parse_aut(ring, o.aut);
    const RingElem lam = parse_ring_elem(ring, o.lambda);
    if (o.beta == 0 || o.h_beta.empty()) throw Error(ErrorKind::ParseError, "dual needs --beta and --h-beta");
    const auto g = generator_from_parity(parse_r_poly(theta, o.h_beta), o.beta, lam).g;
    const auto lam_inv = *ring.inverse(lam);
    const bool law_applies = o.beta % theta.order() == 0 && theta.apply(lam) == lam;
    const std::uint64_t cap = cap_or(o, kDefaultDualCap);
    Report r;
    std::size_t code_size = 0, dual_size = 0;
    bool closed = true;
    if (o.alpha == 0) {
        const auto code = build_rcode(make_rcode_spec(o.beta, lam, g), cap);
        const auto dual = brute_dual_r(code, cap);
        code_size = code.size();
        dual_size = dual.size();
        closed = is_shift_closed(dual, theta, lam_inv);
    } else {
        const auto code = build_mixed_code(make_mixed_spec(o.alpha, o.beta, lam, parse_zq_poly(ring, o.g_alpha), g));
        const auto dual = brute_dual_mixed(code, cap);
        code_size = code.size();
        dual_size = dual.size();
        closed = is_mixed_shift_closed(dual, theta, lam_inv);
    }
    r.lines.push_back("|C| = " + std::to_string(code_size) + "  |C_perp| = " + std::to_string(dual_size));
    r.lines.push_back(std::string("dual closed under the lambda^-1 shift: ") + (closed ? "yes" : "no") +
                      (law_applies ? "" : " (closure not required here)"));
    r.data = {{"code_size", code_size}, {"dual_size", dual_size}, {"closed", closed}, {"closure_required", law_applies}};
    if (law_applies && !closed) r.status = kCheckFailed;
    return r;
}

inline Report cmd_props(const Options& o) {
    Report r;
    r.data["seed"] = o.seed;
    r.data["suites"] = nlohmann::json::array();
    bool ok = true;
    for (auto& p : run_all_props(o.seed)) {
        ok &= p.ok();
        r.lines.push_back(p.name + ": " + std::to_string(p.trials) + " trials, " + std::to_string(p.failures) + " failures " +
                          (p.ok() ? "PASS" : "FAIL"));
        r.data["suites"].push_back({{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}});
    }
    r.status = ok ? kOk : kCheckFailed;
    return r;
}

inline int exit_code_for(const Error& e) {
    return e.kind() == ErrorKind::EnumerationCapExceeded ? kCapExceeded : kUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Options o;
    CLI::App app{"Skew constacyclic codes over Z_q and Z_q+uZ_q"};
    app.require_subcommand(1);

    auto ring_flags = [&](CLI::App* s) {
        s->add_option("--q", o.q, "modulus q (prime power)");
        s->add_option("--aut", o.aut, "automorphism k,d with theta(u) = k+ud");
        s->add_option("--lambda", o.lambda, "constacyclic unit, e.g. 1 or 3+2u");
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--max-enum", o.max_enum, "enumeration cap");
        s->add_option("--threads", o.threads, "worker threads");
        s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto code_flags = [&](CLI::App* s) {
        s->add_option("--alpha", o.alpha, "Z_q block length");
        s->add_option("--g-alpha", o.g_alpha, "generator of the Z_q block, ascending");
        s->add_option("--beta", o.beta, "R block length");
        s->add_option("--h-beta", o.h_beta, "parity-check polynomial of the R block, ascending");
    };

    auto* aut = app.add_subcommand("aut", "list automorphisms of Z_q+uZ_q");
    aut->add_option("--q", o.q, "modulus q");
    common(aut);

    auto* div = app.add_subcommand("divisors", "monic right divisors of x^beta - lambda");
    ring_flags(div);
    common(div);
    div->add_option("--beta", o.beta, "length")->required();
    div->add_option("--deg", o.degrees, "divisor degrees (default 1..beta)");

    auto* build = app.add_subcommand("build", "build a mixed code and print its Gray image parameters");
    ring_flags(build);
    common(build);
    code_flags(build);
    build->add_option("--map", o.map, "double or triple");
    build->add_option("--span", o.span, "spanning or module");

    auto* table = app.add_subcommand("table1", "reproduce the published table of quaternary codes");
    table->add_option("--manifest", o.manifest, "manifest file (default: embedded)");
    common(table);

    auto* dual = app.add_subcommand("dual", "brute-force dual and its closure");
    ring_flags(dual);
    common(dual);
    code_flags(dual);

    auto* props = app.add_subcommand("props", "seeded invariant suites");
    props->add_option("--seed", o.seed, "seed");
    common(props);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Report r;
        if (*aut) r = cmd_aut(o);
        else if (*div) r = cmd_divisors(o);
        else if (*build) r = cmd_build(o);
        else if (*table) r = cmd_table1(o);
        else if (*dual) r = cmd_dual(o);
        else r = cmd_props(o);
        r.print(out, o.format == "json");
        return r.status;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace zqr::cli
