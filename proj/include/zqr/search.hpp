#pragma once

// Divisor search over R[x; theta], assembly of mixed codes, Gray images and their
// [n, type, d_Lee] parameters, and reproduction of the reference table of quaternary codes.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zqr/graymaps.hpp"
#include "zqr/rings.hpp"
#include "zqr/skewpoly.hpp"
#include "zqr/zqlinalg.hpp"
#include "zqr/zqrcodes.hpp"

namespace zqr {

/// The ten codes over Z_4 found with theta(a+bu) = a+3bu, lambda = 1.
inline constexpr std::string_view kTable1Manifest = R"(# Quaternary codes from skew cyclic codes, theta = (0,3), lambda = 1.
# h_beta coefficients are ascending; g_alpha is a compact ascending digit string.
alpha=15 beta=14 g_alpha=31212201 h_beta=3+3u,2+3u,1,1+u,1 map=double n=43 k=8 d=26
alpha=15 beta=14 g_alpha=31212201 h_beta=3+3u,2+3u,1,1+u,1 map=triple n=57 k=8 d=38
alpha=15 beta=14 g_alpha=3021310231 h_beta=3+2u,3+3u,2u,1 map=double n=43 k=6 d=30
alpha=15 beta=14 g_alpha=3021310231 h_beta=1,2+3u,3,1 map=triple n=57 k=6 d=42
alpha=7 beta=14 g_alpha=3121 h_beta=3+3u,2+u,3,3+3u,1 map=double n=35 k=8 d=20
alpha=7 beta=14 g_alpha=3121 h_beta=3+3u,2+u,1+u,3+u,1 map=triple n=49 k=8 d=32
alpha=7 beta=14 g_alpha=12311 h_beta=3+3u,3u,1+2u,1 map=double n=35 k=6 d=22
alpha=7 beta=14 g_alpha=12311 h_beta=1+u,u,1+2u,1 map=double n=35 k=6 d=24
alpha=7 beta=14 g_alpha=12311 h_beta=1,3+3u,u,1 map=triple n=49 k=6 d=35
alpha=7 beta=14 g_alpha=12311 h_beta=1,1,2+u,1 map=triple n=49 k=6 d=36
)";

struct ManifestRow {
    std::size_t line = 0;
    std::uint32_t q = 4;
    Zq k = 0, d = 3;  ///< automorphism (k, d)
    std::string lambda = "1";
    std::size_t alpha = 0, beta = 0;
    std::string g_alpha, h_beta;
    std::optional<GrayVariant> map;
    std::size_t n = 0, k_expected = 0;
    std::uint64_t d_expected = 0;
};

inline std::vector<ManifestRow> parse_manifest(std::string_view text) {
    std::vector<ManifestRow> rows;
    std::size_t line_no = 0;
    for (auto line : detail::split(text, '\n')) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto kv = detail::parse_kv(line);
        auto need = [&](const char* key) -> const std::string& {
            auto it = kv.find(key);
            if (it == kv.end())
                throw Error(ErrorKind::ParseError, "manifest line " + std::to_string(line_no) + ": missing '" + key + "'");
            return it->second;
        };
        auto num = [&](const char* key) { return detail::parse_int(need(key), need(key)); };
        ManifestRow row;
        row.line = line_no;
        if (kv.count("q")) row.q = static_cast<std::uint32_t>(num("q"));
        if (kv.count("theta")) {
            auto parts = detail::split(kv["theta"], ',');
            if (parts.size() != 2) throw Error(ErrorKind::ParseError, "manifest theta must be k,d");
            row.k = static_cast<Zq>(detail::parse_int(parts[0], kv["theta"]));
            row.d = static_cast<Zq>(detail::parse_int(parts[1], kv["theta"]));
        }
        if (kv.count("lambda")) row.lambda = kv["lambda"];
        row.alpha = static_cast<std::size_t>(num("alpha"));
        row.beta = static_cast<std::size_t>(num("beta"));
        row.g_alpha = need("g_alpha");
        row.h_beta = need("h_beta");
        if (kv.count("map")) row.map = parse_gray_variant(kv["map"]);
        row.n = static_cast<std::size_t>(num("n"));
        row.k_expected = static_cast<std::size_t>(num("k"));
        row.d_expected = static_cast<std::uint64_t>(num("d"));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string read_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ManifestMissing, "cannot open manifest '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// n = alpha + 2 beta gives the double map, n = alpha + 3 beta the triple map.
inline std::optional<GrayVariant> infer_variant(std::size_t alpha, std::size_t beta, std::size_t n) {
    if (n == alpha + 2 * beta) return GrayVariant::Double;
    if (n == alpha + 3 * beta) return GrayVariant::Triple;
    return std::nullopt;
}

struct CodeParameters {
    std::size_t n = 0;
    CodeType type;
    std::uint64_t d_lee = 0;

    /// `[n,k,d]` when free, else `[n,4^k1 2^k2,d]`.
    std::string to_string() const {
        return "[" + std::to_string(n) + "," + type.to_string() + "," + std::to_string(d_lee) + "]";
    }
};

/// Gray image parameters recomputed from scratch: Howell form, type, exhaustive distance.
inline CodeParameters gray_parameters(const MixedCode& code, GrayVariant variant, std::uint64_t cap = kDefaultCodewordCap,
                                      unsigned threads = 1) {
    const GenMatrix image = code.gray_matrix(variant);
    CodeParameters out;
    out.n = image.cols;
    out.type = code_type(image);
    out.d_lee = image.rows.empty() ? 0 : min_lee_distance(image, cap, threads);
    return out;
}

enum class SpanRule {
    Spanning,  ///< R-span of x^i (g_alpha, g_beta) for i < deg h_beta
    Module,    ///< full cyclic module generated by (g_alpha, g_beta)
};

inline SpanRule parse_span_rule(std::string_view s) {
    if (s == "spanning") return SpanRule::Spanning;
    if (s == "module") return SpanRule::Module;
    throw Error(ErrorKind::ParseError, "span rule must be 'spanning' or 'module', got '" + std::string(s) + "'");
}

constexpr std::string_view to_string(SpanRule r) noexcept { return r == SpanRule::Spanning ? "spanning" : "module"; }

inline MixedCode build_table_code(const MixedCodeSpec& spec, std::size_t deg_h, SpanRule rule = SpanRule::Spanning) {
    return rule == SpanRule::Spanning ? build_spanning_code(spec, deg_h) : build_mixed_code(spec);
}

struct SearchTarget {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t d = 0;
};

struct SearchJob {
    Automorphism theta;
    std::size_t alpha = 0;
    ZqPoly g_alpha;
    std::size_t beta = 0;
    RingElem lam;
    std::vector<std::size_t> degrees;
    std::vector<GrayVariant> variants{GrayVariant::Double, GrayVariant::Triple};
    std::optional<SearchTarget> target = std::nullopt;
    SpanRule span = SpanRule::Spanning;
    std::size_t min_dimension = 1;  ///< minimum number of Howell rows of the image
    std::uint64_t divisor_cap = kDefaultDivisorCap;
    std::uint64_t codeword_cap = kDefaultCodewordCap;
    unsigned threads = 1;
};

struct FoundCode {
    SkewPoly h_beta;
    SkewPoly g_beta;
    FactorSide side = FactorSide::GH;
    GrayVariant variant = GrayVariant::Double;
    CodeParameters params;
};

/// Output order: divisor enumeration order, then variant order as given in the job.
/// A target keeps codes with matching n, free type with k1 = k, and d >= target d.
/// Degree 0 stands for the trivial factorization h = 1, whose code is zero.
inline std::vector<FoundCode> run_search(const SearchJob& job) {
    const Ring& ring = job.theta.ring();
    if (job.alpha > 0 && !zq_divides_cyclic(ring, job.g_alpha, job.alpha))
        throw Error(ErrorKind::GeneratorNotDivisor,
                    "g_alpha = " + format_zq_poly(ring, job.g_alpha) + " does not divide x^" + std::to_string(job.alpha) + " - 1");
    for (auto v : job.variants) require_variant(ring, v);

    std::vector<FoundCode> found;
    for (std::size_t deg : job.degrees) {
        auto pairs = deg == 0 ? std::vector<DivisorPair>{{SkewPoly::binomial(job.theta, job.beta, job.lam), SkewPoly::one(job.theta)}}
                              : right_divisor_pairs(job.beta, job.lam, deg, job.theta, job.divisor_cap, job.threads);
        for (auto& pair : pairs) {
            const auto spec = make_mixed_spec(job.alpha, job.beta, job.lam, job.g_alpha, pair.g);
            const MixedCode code = build_table_code(spec, deg, job.span);
            for (auto variant : job.variants) {
                const GenMatrix image = code.gray_matrix(variant);
                if (image.rows.size() < job.min_dimension) continue;
                const CodeType type = code_type(image);
                if (job.target && (image.cols != job.target->n || !type.is_free() || type.k1() != job.target->k)) continue;
                const std::uint64_t bound = job.target ? job.target->d : 0;
                CodeParameters params{image.cols, type,
                                      image.rows.empty() ? 0 : min_lee_distance(image, job.codeword_cap, job.threads, bound)};
                if (job.target && params.d_lee < job.target->d) continue;
                found.push_back({pair.h, pair.g, FactorSide::GH, variant, std::move(params)});
            }
        }
    }
    return found;
}

struct Table1Result {
    ManifestRow row;
    bool pass = false;
    std::optional<GrayVariant> variant;
    std::optional<FactorSide> side;
    std::optional<CodeParameters> params;
    std::string message;

    std::string expected_string() const {
        return "[" + std::to_string(row.n) + "," + std::to_string(row.k_expected) + "," + std::to_string(row.d_expected) + "]";
    }
};

/// Parse -> generator_from_parity -> build_table_code -> Gray image -> Howell -> type -> distance.
inline Table1Result reproduce_row(const ManifestRow& row, unsigned threads = 1, std::uint64_t cap = kDefaultCodewordCap) {
    Table1Result res;
    res.row = row;
    try {
        const Ring ring(row.q);
        const auto theta = make_automorphism(ring, row.k, row.d);
        const RingElem lam = parse_ring_elem(ring, row.lambda);
        res.variant = infer_variant(row.alpha, row.beta, row.n);
        if (!res.variant) {
            res.message = "n matches neither alpha+2beta nor alpha+3beta";
            return res;
        }
        if (row.map && *row.map != *res.variant) {
            res.message = "recorded map disagrees with the map inferred from n";
            return res;
        }
        const ZqPoly g_alpha = parse_zq_poly(ring, row.g_alpha);
        const SkewPoly h_beta = parse_r_poly(theta, row.h_beta);
        const auto parity = generator_from_parity(h_beta, row.beta, lam);
        res.side = parity.side;
        const auto spec = make_mixed_spec(row.alpha, row.beta, lam, g_alpha, parity.g);
        const MixedCode code = build_table_code(spec, *h_beta.degree());
        res.params = gray_parameters(code, *res.variant, cap, threads);
        const auto& p = *res.params;
        res.pass = p.n == row.n && p.type.is_free() && p.type.k1() == row.k_expected && p.d_lee == row.d_expected;
        if (!res.pass) res.message = "got " + p.to_string();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::EnumerationCapExceeded) throw;
        res.message = e.what();
    }
    return res;
}

inline std::vector<Table1Result> reproduce_table1(std::string_view manifest = kTable1Manifest, unsigned threads = 1,
                                                  std::uint64_t cap = kDefaultCodewordCap) {
    std::vector<Table1Result> out;
    for (const auto& row : parse_manifest(manifest)) out.push_back(reproduce_row(row, threads, cap));
    return out;
}

}  // namespace zqr
