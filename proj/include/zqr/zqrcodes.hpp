#pragma once

// Z_qR-linear skew constacyclic codes in Z_q^alpha R^beta and double skew
// constacyclic codes in Z_q^alpha R^beta x Z_q^alpha' R^beta'.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zqr/graymaps.hpp"
#include "zqr/rcodes.hpp"
#include "zqr/rings.hpp"
#include "zqr/skewpoly.hpp"
#include "zqr/wordset.hpp"
#include "zqr/zqlinalg.hpp"
#include "zqr/zqpoly.hpp"

namespace zqr {

struct MixedCodeSpec {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    RingElem lam;
    ZqPoly g_alpha;
    SkewPoly g_beta;

    const Automorphism& theta() const noexcept { return g_beta.theta(); }
    const Ring& ring() const noexcept { return g_beta.ring(); }
};

/// Checks g_alpha | x^alpha - 1 over Z_q and g_beta right-divides x^beta - lam.
inline MixedCodeSpec make_mixed_spec(std::size_t alpha, std::size_t beta, RingElem lam, ZqPoly g_alpha, SkewPoly g_beta) {
    const Ring& ring = g_beta.ring();
    if (alpha > 0 && (g_alpha.is_zero() || !zq_divides_cyclic(ring, g_alpha, alpha)))
        throw Error(ErrorKind::GeneratorNotDivisor,
                    "g_alpha = " + format_zq_poly(ring, g_alpha) + " does not divide x^" + std::to_string(alpha) + " - 1");
    if (beta > 0) make_rcode_spec(beta, lam, g_beta);
    return MixedCodeSpec{alpha, beta, lam, std::move(g_alpha), std::move(g_beta)};
}

/// (e_{a-1}, e_0, ..., e_{a-2} | lam theta(r_{b-1}), theta(r_0), ..., theta(r_{b-2}))
inline MixedWord mixed_shift(const Automorphism& theta, RingElem lam, const MixedWord& w) {
    MixedWord out;
    const std::size_t a = w.zq.size();
    out.zq.resize(a);
    for (std::size_t i = 0; i < a; ++i) out.zq[(i + 1) % a] = w.zq[i];
    out.r = consta_shift(theta, lam, w.r);
    return out;
}

inline MixedWord mixed_shift(const MixedCodeSpec& spec, const MixedWord& w) {
    if (w.zq.size() != spec.alpha || w.r.size() != spec.beta)
        throw Error(ErrorKind::LengthMismatch, "word not in the (alpha, beta) ambient");
    return mixed_shift(spec.theta(), spec.lam, w);
}

/// h (f, g) = (eta(h) f mod x^alpha - 1, h * g mod x^beta - lam)
inline MixedWord poly_scalar_action(const SkewPoly& h, const ZqPoly& f, const SkewPoly& g, std::size_t alpha,
                                    std::size_t beta, RingElem lam) {
    const Ring& ring = h.ring();
    MixedWord out;
    out.zq = zq_wrap(ring, zq_mul(ring, h.eta(), f), alpha);
    out.r = reduce_mod_binomial(skew_mul(h, g), beta, lam);
    return out;
}

/// The same action on a word given in coordinates.
inline MixedWord poly_scalar_action(const SkewPoly& h, const MixedWord& w, RingElem lam) {
    return poly_scalar_action(h, ZqPoly(w.zq), SkewPoly(h.theta(), w.r), w.zq.size(), w.r.size(), lam);
}

/// (e, r) -> (e_0..e_{a-1}, a_0, b_0, a_1, b_1, ...)
inline ZqVector flatten(const MixedWord& w) {
    ZqVector out = w.zq;
    const ZqVector tail = flatten(std::span<const RingElem>(w.r));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

inline MixedWord unflatten_mixed(std::span<const Zq> v, std::size_t alpha) {
    MixedWord w;
    w.zq.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(alpha));
    w.r = unflatten(v.subspan(alpha));
    return w;
}

/// Howell form of the R-submodule generated by `rows` (Z_q-span of rows and u * rows).
inline GenMatrix mixed_module_span(const Ring& ring, std::size_t alpha, std::size_t beta, const std::vector<MixedWord>& rows) {
    std::vector<ZqVector> flat;
    flat.reserve(2 * rows.size());
    for (const auto& r : rows) {
        flat.push_back(flatten(r));
        flat.push_back(flatten(star_mul(ring, ring.u(), r)));
    }
    return howell_form(make_matrix(ring.q(), alpha + 2 * beta, std::move(flat)));
}

struct MixedCode {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    Automorphism theta;
    RingElem lam;
    GenMatrix basis;  ///< Howell form over the flattened coordinates
    std::optional<MixedCodeSpec> spec;

    const Ring& ring() const noexcept { return theta.ring(); }

    /// Z_q type of the code; equals the type of any injective Z_q-linear Gray image.
    CodeType type() const { return code_type(basis); }
    std::uint64_t size() const { return type().codeword_count(); }

    std::vector<MixedWord> basis_words() const {
        std::vector<MixedWord> out;
        for (const auto& row : basis.rows) out.push_back(unflatten_mixed(row, alpha));
        return out;
    }

    WordSet<MixedWord> words(std::uint64_t cap = kDefaultCodewordCap) const {
        std::vector<MixedWord> out;
        for_each_codeword(basis, [&](const ZqVector& w) { out.push_back(unflatten_mixed(w, alpha)); }, cap);
        return WordSet<MixedWord>(std::move(out));
    }

    /// Generator matrix of the Gray image, in Howell form.
    GenMatrix gray_matrix(GrayVariant variant) const {
        require_variant(ring(), variant);
        std::vector<ZqVector> rows;
        for (const auto& w : basis_words()) rows.push_back(gray_phi(ring(), w, variant));
        return howell_form(make_matrix(ring().q(), gray_length(alpha, beta, variant), std::move(rows)));
    }
};

/// m * lcm of the nonzero block lengths.
inline std::size_t shift_period(const Automorphism& theta, std::initializer_list<std::size_t> lengths) {
    std::size_t l = 1;
    for (auto n : lengths)
        if (n > 0) l = std::lcm(l, n);
    return theta.order() * l;
}

namespace detail {

inline constexpr std::size_t kMaxOrbit = std::size_t{1} << 20;

/// Shift orbit of `start`, covering at least `bound` steps and a full cycle.
template <class Word, class Shift>
std::vector<Word> shift_orbit(const Word& start, std::size_t bound, Shift&& shift) {
    std::vector<Word> rows;
    Word cur = start;
    bool closed = false;
    for (std::size_t i = 0; i < bound || !closed; ++i) {
        if (i >= kMaxOrbit) throw Error(ErrorKind::EnumerationCapExceeded, "shift orbit longer than 2^20");
        rows.push_back(cur);
        cur = shift(cur);
        if (cur == start) closed = true;
    }
    return rows;
}

}  // namespace detail

/// Rows {x^i g, (u x^i) g} over at least m * lcm(alpha, beta) * bound_multiplier shifts
/// and one full shift cycle of g, deduplicated, and their span.
inline MixedCode build_mixed_code(const MixedCodeSpec& spec, std::size_t bound_multiplier = 1) {
    const Ring& ring = spec.ring();
    const Automorphism& theta = spec.theta();
    MixedWord g;
    g.zq = zq_wrap(ring, spec.g_alpha, spec.alpha);
    g.r = reduce_mod_binomial(spec.g_beta, spec.beta, spec.lam);

    const std::size_t bound = shift_period(theta, {spec.alpha, spec.beta}) * bound_multiplier;
    auto rows = detail::shift_orbit(g, bound, [&](const MixedWord& w) { return mixed_shift(theta, spec.lam, w); });
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return MixedCode{spec.alpha, spec.beta, theta, spec.lam, mixed_module_span(ring, spec.alpha, spec.beta, rows), spec};
}

/// R-span of the spanning set {g, x g, ..., x^{l-1} g} alone, without closing under the shift.
inline MixedCode build_spanning_code(const MixedCodeSpec& spec, std::size_t l) {
    const Ring& ring = spec.ring();
    const Automorphism& theta = spec.theta();
    MixedWord cur;
    cur.zq = zq_wrap(ring, spec.g_alpha, spec.alpha);
    cur.r = reduce_mod_binomial(spec.g_beta, spec.beta, spec.lam);
    std::vector<MixedWord> rows;
    for (std::size_t i = 0; i < l; ++i) {
        rows.push_back(cur);
        cur = mixed_shift(theta, spec.lam, cur);
    }
    return MixedCode{spec.alpha, spec.beta, theta, spec.lam, mixed_module_span(ring, spec.alpha, spec.beta, rows), spec};
}

enum class FactorSide {
    GH,  ///< x^beta - lam = g * h
    HG,  ///< x^beta - lam = h * g
};

constexpr std::string_view to_string(FactorSide s) noexcept { return s == FactorSide::GH ? "g*h" : "h*g"; }

struct ParityGenerator {
    SkewPoly g;
    FactorSide side;
};

/// g with x^beta - lam = g * h, falling back to h * g.
inline ParityGenerator generator_from_parity(const SkewPoly& h, std::size_t beta, RingElem lam) {
    if (!h.is_monic()) throw Error(ErrorKind::NotAParityCheck, "parity-check polynomial must be monic");
    if (*h.degree() > beta) throw Error(ErrorKind::NotAParityCheck, "parity-check degree exceeds beta");
    const SkewPoly target = SkewPoly::binomial(h.theta(), beta, lam);
    auto right = skew_right_divide(target, h);
    if (right.rem.is_zero()) return {std::move(right.quot), FactorSide::GH};
    auto left = skew_left_divide(target, h);
    if (left.rem.is_zero()) return {std::move(left.quot), FactorSide::HG};
    throw Error(ErrorKind::NotAParityCheck,
                format_r_poly(h) + " divides x^" + std::to_string(beta) + " - lambda on neither side");
}

/// Cyclic code over Z_q generated by g mod x^alpha - 1, in Howell form.
inline GenMatrix build_cyclic_zq(const Ring& ring, std::size_t alpha, const ZqPoly& g) {
    std::vector<ZqVector> rows;
    ZqVector row = zq_wrap(ring, g, alpha);
    for (std::size_t i = 0; i < alpha; ++i) {
        rows.push_back(row);
        std::rotate(row.rbegin(), row.rbegin() + 1, row.rend());
    }
    return howell_form(make_matrix(ring.q(), alpha, std::move(rows)));
}

/// C_alpha x C_beta from Howell bases of the components (C_beta over flattened coordinates).
inline MixedCode separable_product(const Automorphism& theta, RingElem lam, std::size_t alpha, const GenMatrix& c_alpha,
                                   std::size_t beta, const GenMatrix& c_beta) {
    const Ring& ring = theta.ring();
    std::vector<ZqVector> rows;
    for (const auto& r : c_alpha.rows) {
        ZqVector v = r;
        v.resize(alpha + 2 * beta, 0);
        rows.push_back(std::move(v));
    }
    for (const auto& r : c_beta.rows) {
        ZqVector v(alpha, 0);
        v.insert(v.end(), r.begin(), r.end());
        rows.push_back(std::move(v));
    }
    return MixedCode{alpha, beta, theta, lam, howell_form(make_matrix(ring.q(), alpha + 2 * beta, std::move(rows))), std::nullopt};
}

inline bool is_mixed_shift_closed(const WordSet<MixedWord>& words, const Automorphism& theta, RingElem lam) {
    for (const auto& w : words)
        if (!words.contains(mixed_shift(theta, lam, w))) return false;
    return true;
}

/// Every w with <v, w> = 0 in R for all v in the code (both the unit and u parts).
inline WordSet<MixedWord> brute_dual_mixed(const Ring& ring, std::size_t alpha, std::size_t beta, const GenMatrix& basis,
                                           std::uint64_t cap = kDefaultDualCap) {
    const std::size_t flat_len = alpha + 2 * beta;
    const std::uint64_t total = checked_pow(ring.q(), flat_len);
    check_cap(total, cap, "mixed dual scan");
    std::vector<MixedWord> gens;
    for (const auto& row : basis.rows) gens.push_back(unflatten_mixed(row, alpha));

    std::vector<MixedWord> out;
    ZqVector flat(flat_len);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = flat_len; i-- > 0;) {
            flat[i] = static_cast<Zq>(rest % ring.q());
            rest /= ring.q();
        }
        const MixedWord w = unflatten_mixed(flat, alpha);
        bool orthogonal = true;
        for (const auto& g : gens)
            if (mixed_inner_product(ring, g, w) != RingElem{}) {
                orthogonal = false;
                break;
            }
        if (orthogonal) out.push_back(w);
    }
    return WordSet<MixedWord>(std::move(out));
}

inline WordSet<MixedWord> brute_dual_mixed(const MixedCode& code, std::uint64_t cap = kDefaultDualCap) {
    return brute_dual_mixed(code.ring(), code.alpha, code.beta, code.basis, cap);
}

// ---------------------------------------------------------------------------
// Double skew constacyclic codes

struct DoubleWord {
    MixedWord first;
    MixedWord second;

    friend bool operator==(const DoubleWord&, const DoubleWord&) = default;
    friend auto operator<=>(const DoubleWord&, const DoubleWord&) = default;
};

struct DoubleSpec {
    std::size_t alpha = 0, beta = 0, alpha2 = 0, beta2 = 0;
    RingElem lam;
    Automorphism theta;
    ZqPoly g_alpha;
    SkewPoly g_beta;
    ZqPoly g_alpha2;
    SkewPoly g_beta2;

    const Ring& ring() const noexcept { return theta.ring(); }
    std::size_t flat_length() const noexcept { return alpha + 2 * beta + alpha2 + 2 * beta2; }
};

inline DoubleWord double_shift(const DoubleSpec& spec, const DoubleWord& w) {
    return {mixed_shift(spec.theta, spec.lam, w.first), mixed_shift(spec.theta, spec.lam, w.second)};
}

inline ZqVector flatten(const DoubleWord& w) {
    ZqVector out = flatten(w.first);
    const ZqVector tail = flatten(w.second);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

inline DoubleWord unflatten_double(const DoubleSpec& spec, std::span<const Zq> v) {
    const std::size_t n1 = spec.alpha + 2 * spec.beta;
    return {unflatten_mixed(v.first(n1), spec.alpha), unflatten_mixed(v.subspan(n1), spec.alpha2)};
}

/// Module span of the 4-tuple generator under h (f, g, f', g') = (eta(h) f, h*g, eta(h) f', h*g').
inline WordSet<DoubleWord> build_double_code(const DoubleSpec& spec, std::uint64_t cap = kDefaultCodewordCap) {
    const Ring& ring = spec.ring();
    DoubleWord g{{zq_wrap(ring, spec.g_alpha, spec.alpha), reduce_mod_binomial(spec.g_beta, spec.beta, spec.lam)},
                 {zq_wrap(ring, spec.g_alpha2, spec.alpha2), reduce_mod_binomial(spec.g_beta2, spec.beta2, spec.lam)}};
    const std::size_t bound = shift_period(spec.theta, {spec.alpha, spec.beta, spec.alpha2, spec.beta2});
    std::vector<ZqVector> flat;
    for (const auto& w : detail::shift_orbit(g, bound, [&](const DoubleWord& x) { return double_shift(spec, x); })) {
        flat.push_back(flatten(w));
        flat.push_back(flatten(DoubleWord{star_mul(ring, ring.u(), w.first), star_mul(ring, ring.u(), w.second)}));
    }
    const GenMatrix basis = howell_form(make_matrix(ring.q(), spec.flat_length(), std::move(flat)));
    std::vector<DoubleWord> words;
    for_each_codeword(basis, [&](const ZqVector& w) { words.push_back(unflatten_double(spec, w)); }, cap);
    return WordSet<DoubleWord>(std::move(words));
}

inline bool is_double_shift_closed(const WordSet<DoubleWord>& words, const DoubleSpec& spec) {
    for (const auto& w : words)
        if (!words.contains(double_shift(spec, w))) return false;
    return true;
}

}  // namespace zqr
