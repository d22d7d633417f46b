#pragma once

// Gray maps from R^beta and Z_q^alpha R^beta into Z_q vectors, Lee weight, and
// quasi-twisted closure predicates over explicit codeword sets.

#include <span>
#include <string_view>

#include "zqr/rings.hpp"
#include "zqr/wordset.hpp"

namespace zqr {

enum class GrayVariant {
    Double,  ///< a+ub -> (b, a+b), blocked as (b_0..b_{n-1}, a_0+b_0..a_{n-1}+b_{n-1})
    Triple,  ///< a+ub -> (b, 2a+3b, a+3b) over Z_4, blocked the same way
};

constexpr std::string_view to_string(GrayVariant v) noexcept { return v == GrayVariant::Double ? "double" : "triple"; }

inline GrayVariant parse_gray_variant(std::string_view s) {
    if (s == "double") return GrayVariant::Double;
    if (s == "triple") return GrayVariant::Triple;
    throw Error(ErrorKind::UnsupportedVariant, "unknown Gray map '" + std::string(s) + "'");
}

constexpr std::size_t gray_multiplier(GrayVariant v) noexcept { return v == GrayVariant::Double ? 2 : 3; }

inline std::size_t gray_length(std::size_t alpha, std::size_t beta, GrayVariant v) noexcept {
    return alpha + gray_multiplier(v) * beta;
}

inline void require_variant(const Ring& ring, GrayVariant v) {
    if (v == GrayVariant::Triple && ring.q() != 4)
        throw Error(ErrorKind::UnsupportedVariant, "the triple Gray map is defined over Z_4 only");
}

/// (r_0..r_{n-1}) -> (b_0..b_{n-1}, a_0+b_0..a_{n-1}+b_{n-1})
inline ZqVector gray_psi(const Ring& ring, std::span<const RingElem> v) {
    ZqVector out(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].b;
        out[v.size() + i] = ring.zadd(v[i].a, v[i].b);
    }
    return out;
}

inline ZqVector gray_triple(const Ring& ring, std::span<const RingElem> v) {
    require_variant(ring, GrayVariant::Triple);
    const std::size_t n = v.size();
    ZqVector out(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t a = v[i].a, b = v[i].b;
        out[i] = static_cast<Zq>(b);
        out[n + i] = ring.reduce(2 * a + 3 * b);
        out[2 * n + i] = ring.reduce(a + 3 * b);
    }
    return out;
}

inline ZqVector gray_r(const Ring& ring, std::span<const RingElem> v, GrayVariant variant) {
    return variant == GrayVariant::Double ? gray_psi(ring, v) : gray_triple(ring, v);
}

/// Identity on the Z_q block, Psi or the triple map on the R block.
inline ZqVector gray_phi(const Ring& ring, const MixedWord& w, GrayVariant variant) {
    require_variant(ring, variant);
    ZqVector out = w.zq;
    const ZqVector tail = gray_r(ring, w.r, variant);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

/// sum min(x_i, q - x_i)
inline std::uint64_t lee_weight(std::uint32_t q, std::span<const Zq> v) noexcept {
    std::uint64_t w = 0;
    for (auto x : v) w += std::min<std::uint32_t>(x, q - x);
    return w;
}

inline std::uint64_t lee_weight(const Ring& ring, std::span<const Zq> v) noexcept { return lee_weight(ring.q(), v); }

inline std::uint64_t lee_distance(const Ring& ring, std::span<const Zq> x, std::span<const Zq> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "Lee distance of unequal lengths");
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Zq d = ring.zsub(x[i], y[i]);
        w += std::min<std::uint32_t>(d, ring.q() - d);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Quasi-twisted shifts

/// Moves the last block of `index_l` entries to the front, scaled by lam.
inline ZqVector qt_shift(const Ring& ring, std::span<const Zq> c, Zq lam, std::size_t index_l) {
    if (index_l == 0 || c.size() % index_l != 0)
        throw Error(ErrorKind::LengthNotDivisible, "length " + std::to_string(c.size()) + " not divisible by index");
    const std::size_t n = c.size();
    ZqVector out(n);
    for (std::size_t j = 0; j < index_l; ++j) out[j] = ring.zmul(lam, c[n - index_l + j]);
    for (std::size_t i = 0; i + index_l < n; ++i) out[index_l + i] = c[i];
    return out;
}

/// (lam_1 c_{Nl}, lam_2 c_{Nl-1}, ..., lam_l c_{(N-1)l+1}, c_1, ..., c_{(N-1)l}) with 1-based c.
inline ZqVector generalized_qt_shift(const Ring& ring, std::span<const Zq> c, std::span<const Zq> lambdas) {
    const std::size_t l = lambdas.size();
    if (l == 0 || c.size() % l != 0)
        throw Error(ErrorKind::LengthNotDivisible, "length " + std::to_string(c.size()) + " not divisible by index");
    const std::size_t n = c.size();
    ZqVector out(n);
    for (std::size_t j = 0; j < l; ++j) out[j] = ring.zmul(lambdas[j], c[n - 1 - j]);
    for (std::size_t i = 0; i + l < n; ++i) out[l + i] = c[i];
    return out;
}

inline bool qt_closed(const Ring& ring, const WordSet<ZqVector>& code, Zq lam, std::size_t index_l) {
    for (const auto& c : code)
        if (!code.contains(qt_shift(ring, c, lam, index_l))) return false;
    return true;
}

inline bool generalized_qt_closed(const Ring& ring, const WordSet<ZqVector>& code, std::span<const Zq> lambdas) {
    for (const auto& c : code)
        if (!code.contains(generalized_qt_shift(ring, c, lambdas))) return false;
    return true;
}

/// Psi(shift(c)) written in terms of Psi(c) = (b, a+b): the block map
///   (lam1 a_{n-1} + (lam0 d + lam1 k) b_{n-1}, d b_0, ..., d b_{n-2},
///    (lam0+lam1) a_{n-1} + ((k+d) lam0 + k lam1) b_{n-1}, a_0 + (k+d) b_0, ..., a_{n-2} + (k+d) b_{n-2}).
inline ZqVector psi_block_map(const Automorphism& theta, RingElem lam, std::span<const Zq> image) {
    const Ring& ring = theta.ring();
    if (image.size() % 2 != 0) throw Error(ErrorKind::LengthNotDivisible, "Psi image has odd length");
    const std::size_t n = image.size() / 2;
    ZqVector out(2 * n);
    if (n == 0) return out;
    const std::int64_t k = theta.k(), d = theta.d(), l0 = lam.a, l1 = lam.b;
    auto b = [&](std::size_t i) -> std::int64_t { return image[i]; };
    auto a = [&](std::size_t i) -> std::int64_t { return ring.zsub(image[n + i], image[i]); };
    out[0] = ring.reduce(l1 * a(n - 1) + (l0 * d + l1 * k) * b(n - 1));
    out[n] = ring.reduce((l0 + l1) * a(n - 1) + ((k + d) * l0 + k * l1) * b(n - 1));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out[1 + i] = ring.reduce(d * b(i));
        out[n + 1 + i] = ring.reduce(a(i) + (k + d) * b(i));
    }
    return out;
}

}  // namespace zqr
