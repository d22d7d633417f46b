#pragma once

// Skew (lam0 + u lam1)-constacyclic codes of length beta over R.

#include <string>
#include <string_view>
#include <vector>

#include "zqr/rings.hpp"
#include "zqr/skewpoly.hpp"
#include "zqr/wordset.hpp"
#include "zqr/zqlinalg.hpp"

namespace zqr {

struct RCodeSpec {
    std::size_t beta = 0;
    RingElem lam;
    SkewPoly gen;

    const Automorphism& theta() const noexcept { return gen.theta(); }
    const Ring& ring() const noexcept { return gen.ring(); }
};

/// Validates lam and that gen right-divides x^beta - lam.
inline RCodeSpec make_rcode_spec(std::size_t beta, RingElem lam, SkewPoly gen) {
    const Ring& ring = gen.ring();
    if (!ring.is_unit(lam)) throw Error(ErrorKind::InvalidLambda, "lambda " + format_ring_elem(lam) + " is not a unit");
    if (gen.is_zero() || *gen.degree() > beta)
        throw Error(ErrorKind::GeneratorNotDivisor, "generator degree must lie in [0, beta]");
    const auto div = skew_right_divide(SkewPoly::binomial(gen.theta(), beta, lam), gen);
    if (!div.rem.is_zero())
        throw Error(ErrorKind::GeneratorNotDivisor, format_r_poly(gen) + " does not right-divide x^" + std::to_string(beta) + " - lambda");
    return RCodeSpec{beta, lam, std::move(gen)};
}

/// (lam theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))
inline RWord consta_shift(const Automorphism& theta, RingElem lam, std::span<const RingElem> c) {
    const Ring& ring = theta.ring();
    const std::size_t n = c.size();
    RWord out(n);
    if (n == 0) return out;
    out[0] = ring.mul(lam, theta.apply(c[n - 1]));
    for (std::size_t i = 0; i + 1 < n; ++i) out[i + 1] = theta.apply(c[i]);
    return out;
}

inline RWord consta_shift(const RCodeSpec& spec, std::span<const RingElem> c) {
    if (c.size() != spec.beta) throw Error(ErrorKind::LengthMismatch, "word length differs from beta");
    return consta_shift(spec.theta(), spec.lam, c);
}

/// R^n -> Z_q^{2n} as (a_0, b_0, a_1, b_1, ...), a Z_q-module isomorphism.
inline ZqVector flatten(std::span<const RingElem> v) {
    ZqVector out;
    out.reserve(2 * v.size());
    for (auto x : v) {
        out.push_back(x.a);
        out.push_back(x.b);
    }
    return out;
}

inline RWord unflatten(std::span<const Zq> v) {
    RWord out(v.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = {v[2 * i], v[2 * i + 1]};
    return out;
}

inline RWord scale_word(const Ring& ring, RingElem c, std::span<const RingElem> v) {
    RWord out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(ring.mul(c, x));
    return out;
}

/// Z_q-span of {rows} and {u * rows}: the R-submodule they generate, in Howell form
/// over the flattened coordinates.
inline GenMatrix r_module_span(const Ring& ring, std::size_t length, const std::vector<RWord>& rows) {
    std::vector<ZqVector> flat;
    flat.reserve(2 * rows.size());
    for (const auto& r : rows) {
        flat.push_back(flatten(r));
        flat.push_back(flatten(scale_word(ring, ring.u(), r)));
    }
    return howell_form(make_matrix(ring.q(), 2 * length, std::move(flat)));
}

struct RCode {
    RCodeSpec spec;
    GenMatrix basis;  ///< Howell form of the flattened code
    WordSet<RWord> words;

    std::size_t size() const noexcept { return words.size(); }
};

inline WordSet<RWord> materialize_r(const GenMatrix& basis, std::uint64_t cap) {
    std::vector<RWord> words;
    for_each_codeword(basis, [&](const ZqVector& w) { words.push_back(unflatten(w)); }, cap);
    return WordSet<RWord>(std::move(words));
}

/// Span of {g, x*g, ..., x^{beta - deg g - 1} * g}, materialized.
inline RCode build_rcode(const RCodeSpec& spec, std::uint64_t cap = kDefaultCodewordCap) {
    const Ring& ring = spec.ring();
    const std::size_t deg = *spec.gen.degree();
    std::vector<RWord> rows;
    if (deg < spec.beta) {
        RWord row = spec.gen.coeffs();
        row.resize(spec.beta);
        for (std::size_t i = 0; i < spec.beta - deg; ++i) {
            rows.push_back(row);
            row = consta_shift(spec, row);
        }
    }
    GenMatrix basis = r_module_span(ring, spec.beta, rows);
    auto words = materialize_r(basis, cap);
    return RCode{spec, std::move(basis), std::move(words)};
}

/// Tor(C) = {b : ub in C}
inline WordSet<ZqVector> torsion(const WordSet<RWord>& code) {
    std::vector<ZqVector> out;
    for (const auto& w : code) {
        if (std::any_of(w.begin(), w.end(), [](RingElem x) { return x.a != 0; })) continue;
        ZqVector b;
        for (auto x : w) b.push_back(x.b);
        out.push_back(std::move(b));
    }
    return WordSet<ZqVector>(std::move(out));
}

/// Res(C) = {a : a + ub in C for some b}
inline WordSet<ZqVector> residue(const WordSet<RWord>& code) {
    std::vector<ZqVector> out;
    for (const auto& w : code) {
        ZqVector a;
        for (auto x : w) a.push_back(x.a);
        out.push_back(std::move(a));
    }
    return WordSet<ZqVector>(std::move(out));
}

inline WordSet<ZqVector> torsion(const RCode& code) { return torsion(code.words); }
inline WordSet<ZqVector> residue(const RCode& code) { return residue(code.words); }

inline bool is_shift_closed(const WordSet<RWord>& words, const Automorphism& theta, RingElem lam) {
    for (const auto& w : words)
        if (!words.contains(consta_shift(theta, lam, w))) return false;
    return true;
}

/// Every w in R^n with sum_j c_j w_j = 0 for all c in the code. The pairing is
/// Z_q-bilinear, so testing against a Z_q basis of the code is exhaustive.
inline WordSet<RWord> brute_dual_r(const Ring& ring, std::size_t length, const GenMatrix& basis,
                                   std::uint64_t cap = kDefaultDualCap) {
    const std::uint64_t per = std::uint64_t{ring.q()} * ring.q();
    check_cap(checked_pow(per, length), cap, "dual scan");
    std::vector<RWord> gens;
    for (const auto& row : basis.rows) gens.push_back(unflatten(row));

    std::vector<RWord> out;
    RWord w(length);
    const std::uint64_t total = checked_pow(per, length);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = length; i-- > 0;) {
            const auto digit = rest % per;
            rest /= per;
            w[i] = {static_cast<Zq>(digit / ring.q()), static_cast<Zq>(digit % ring.q())};
        }
        bool orthogonal = true;
        for (const auto& g : gens)
            if (r_inner_product(ring, g, w) != RingElem{}) {
                orthogonal = false;
                break;
            }
        if (orthogonal) out.push_back(w);
    }
    return WordSet<RWord>(std::move(out));
}

inline WordSet<RWord> brute_dual_r(const RCode& code, std::uint64_t cap = kDefaultDualCap) {
    return brute_dual_r(code.spec.ring(), code.spec.beta, code.basis, cap);
}

/// `beta=14 lambda=1+0u theta=0,3 gen=<poly>`
inline RCodeSpec parse_rcode_spec(const Ring& ring, std::string_view text) {
    auto kv = detail::parse_kv(text);
    for (const char* key : {"beta", "lambda", "theta", "gen"})
        if (!kv.count(key)) throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    auto kd = detail::split(kv["theta"], ',');
    if (kd.size() != 2) throw Error(ErrorKind::ParseError, "theta must be k,d");
    const auto theta = make_automorphism(ring, detail::parse_int(kd[0], kv["theta"]), detail::parse_int(kd[1], kv["theta"]));
    const auto beta = detail::parse_int(kv["beta"], kv["beta"]);
    if (beta < 1) throw Error(ErrorKind::ParseError, "beta must be positive");
    return make_rcode_spec(static_cast<std::size_t>(beta), parse_ring_elem(ring, kv["lambda"]), parse_r_poly(theta, kv["gen"]));
}

inline std::string format_rcode_spec(const RCodeSpec& spec) {
    return "beta=" + std::to_string(spec.beta) + " lambda=" + format_ring_elem(spec.lam) + " theta=" +
           std::to_string(spec.theta().k()) + "," + std::to_string(spec.theta().d()) + " gen=" + format_r_poly(spec.gen);
}

}  // namespace zqr
