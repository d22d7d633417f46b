#pragma once

// Arithmetic in Z_q and R = Z_q + uZ_q (u^2 = 0), automorphisms of R fixing Z_q,
// and the Z_q^alpha R^beta ambient with its star action and inner product.

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zqr/error.hpp"

namespace zqr {

using Zq = std::uint32_t;
using ZqVector = std::vector<Zq>;

struct RingParams {
    std::uint32_t p = 2;
    std::uint32_t s = 2;
    std::uint32_t q = 4;

    static constexpr std::uint32_t kMaxModulus = 1u << 16;

    static RingParams from_prime_power(std::uint32_t p, std::uint32_t s) {
        if (p < 2 || s < 1) throw Error(ErrorKind::InvalidRing, "need p >= 2 and s >= 1");
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error(ErrorKind::InvalidRing, std::to_string(p) + " is not prime");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < s; ++i) {
            q *= p;
            if (q > kMaxModulus) throw Error(ErrorKind::InvalidRing, "modulus exceeds 2^16");
        }
        return RingParams{p, s, static_cast<std::uint32_t>(q)};
    }

    /// Factors q as p^s; rejects anything that is not a prime power.
    static RingParams from_modulus(std::uint32_t q) {
        if (q < 2 || q > kMaxModulus) throw Error(ErrorKind::InvalidRing, "modulus must lie in [2, 2^16]");
        std::uint32_t p = 0;
        for (std::uint32_t d = 2; d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        std::uint32_t s = 0;
        std::uint32_t rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++s;
        }
        if (rest != 1) throw Error(ErrorKind::InvalidRing, std::to_string(q) + " is not a prime power");
        return RingParams{p, s, q};
    }

    friend bool operator==(const RingParams&, const RingParams&) = default;
};

/// a + ub with a, b canonical residues in [0, q).
struct RingElem {
    Zq a = 0;
    Zq b = 0;

    friend bool operator==(const RingElem&, const RingElem&) = default;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

using RWord = std::vector<RingElem>;

/// Z_q and R arithmetic for a fixed modulus.
class Ring {
public:
    Ring() : Ring(RingParams{}) {}
    explicit Ring(RingParams params) : params_(params) {}
    explicit Ring(std::uint32_t q) : params_(RingParams::from_modulus(q)) {}

    const RingParams& params() const noexcept { return params_; }
    std::uint32_t q() const noexcept { return params_.q; }
    std::uint32_t p() const noexcept { return params_.p; }

    // --- Z_q ---
    Zq reduce(std::int64_t x) const noexcept {
        const auto m = static_cast<std::int64_t>(params_.q);
        auto r = x % m;
        return static_cast<Zq>(r < 0 ? r + m : r);
    }
    Zq zadd(Zq x, Zq y) const noexcept { return static_cast<Zq>((std::uint64_t{x} + y) % params_.q); }
    Zq zsub(Zq x, Zq y) const noexcept { return static_cast<Zq>((std::uint64_t{x} + params_.q - y) % params_.q); }
    Zq zneg(Zq x) const noexcept { return x == 0 ? 0 : params_.q - x; }
    Zq zmul(Zq x, Zq y) const noexcept { return static_cast<Zq>((std::uint64_t{x} * y) % params_.q); }
    bool zis_unit(Zq x) const noexcept { return x % params_.p != 0; }

    std::optional<Zq> zinverse(Zq x) const noexcept {
        // extended Euclid on (x, q)
        std::int64_t r0 = params_.q, r1 = x % params_.q, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const auto t = r0 / r1;
            r0 -= t * r1;
            std::swap(r0, r1);
            s0 -= t * s1;
            std::swap(s0, s1);
        }
        if (r0 != 1) return std::nullopt;
        return reduce(s0);
    }

    // --- R ---
    RingElem elem(std::int64_t a, std::int64_t b = 0) const noexcept { return {reduce(a), reduce(b)}; }
    RingElem zero() const noexcept { return {}; }
    RingElem one() const noexcept { return {1 % params_.q, 0}; }
    RingElem u() const noexcept { return {0, 1 % params_.q}; }

    RingElem add(RingElem x, RingElem y) const noexcept { return {zadd(x.a, y.a), zadd(x.b, y.b)}; }
    RingElem sub(RingElem x, RingElem y) const noexcept { return {zsub(x.a, y.a), zsub(x.b, y.b)}; }
    RingElem neg(RingElem x) const noexcept { return {zneg(x.a), zneg(x.b)}; }

    /// (a+ub)(c+ud) = ac + u(ad+bc)
    RingElem mul(RingElem x, RingElem y) const noexcept {
        const std::uint64_t q = params_.q;
        return {static_cast<Zq>(std::uint64_t{x.a} * y.a % q),
                static_cast<Zq>((std::uint64_t{x.a} * y.b + std::uint64_t{x.b} * y.a) % q)};
    }

    RingElem scale(Zq c, RingElem x) const noexcept { return {zmul(c, x.a), zmul(c, x.b)}; }

    bool is_unit(RingElem x) const noexcept { return zis_unit(x.a); }

    /// (a+ub)^{-1} = a^{-1} - u b a^{-2}
    std::optional<RingElem> inverse(RingElem x) const noexcept {
        auto ai = zinverse(x.a);
        if (!ai) return std::nullopt;
        return RingElem{*ai, zneg(zmul(x.b, zmul(*ai, *ai)))};
    }

    /// The projection a+ub -> a.
    static Zq eta(RingElem x) noexcept { return x.a; }

    /// All q^2 elements in (a, b) lexicographic order.
    std::vector<RingElem> elements() const {
        std::vector<RingElem> out;
        out.reserve(std::size_t{params_.q} * params_.q);
        for (Zq a = 0; a < params_.q; ++a)
            for (Zq b = 0; b < params_.q; ++b) out.push_back({a, b});
        return out;
    }

    std::vector<RingElem> units() const {
        std::vector<RingElem> out;
        for (auto x : elements())
            if (is_unit(x)) out.push_back(x);
        return out;
    }

    friend bool operator==(const Ring& x, const Ring& y) { return x.params_ == y.params_; }

private:
    RingParams params_;
};

// ---------------------------------------------------------------------------
// Automorphisms

/// theta(u) = k + ud, theta fixes Z_q pointwise; m is the order of theta.
class Automorphism {
public:
    const Ring& ring() const noexcept { return ring_; }
    Zq k() const noexcept { return k_; }
    Zq d() const noexcept { return d_; }
    std::uint32_t order() const noexcept { return m_; }
    bool is_identity() const noexcept { return m_ == 1; }

    /// theta(a+ub) = (a+kb) + udb, applied `power` times.
    RingElem apply(RingElem x, std::uint64_t power = 1) const noexcept {
        power %= m_;
        for (std::uint64_t i = 0; i < power; ++i) x = {ring_.zadd(x.a, ring_.zmul(k_, x.b)), ring_.zmul(d_, x.b)};
        return x;
    }

    /// theta^{-1} as theta^{m-1}.
    RingElem apply_inverse(RingElem x) const noexcept { return apply(x, m_ - 1); }

    friend bool operator==(const Automorphism& x, const Automorphism& y) {
        return x.ring_ == y.ring_ && x.k_ == y.k_ && x.d_ == y.d_;
    }

private:
    Automorphism(Ring ring, Zq k, Zq d, std::uint32_t m) : ring_(ring), k_(k), d_(d), m_(m) {}
    friend Automorphism make_automorphism(const Ring&, std::int64_t, std::int64_t);

    Ring ring_;
    Zq k_;
    Zq d_;
    std::uint32_t m_;
};

inline Automorphism make_automorphism(const Ring& ring, std::int64_t k_in, std::int64_t d_in) {
    const Zq k = ring.reduce(k_in);
    const Zq d = ring.reduce(d_in);
    const auto q = ring.q();
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::InvalidAutomorphism,
                    "(k,d)=(" + std::to_string(k) + "," + std::to_string(d) + ") mod " + std::to_string(q) + ": " + why);
    };
    if (ring.zis_unit(k)) fail("k must be a non-unit");
    if (ring.zmul(k, k) != 0) fail("k^2 must vanish mod q");
    if (ring.zmul(2 % q, ring.zmul(k, d)) != 0) fail("2kd must vanish mod q");
    if (!ring.zis_unit(d)) fail("d must be a unit for theta to be bijective");

    const RingElem u = ring.u();
    RingElem x = u;
    std::uint32_t m = 0;
    do {
        x = {ring.zadd(x.a, ring.zmul(k, x.b)), ring.zmul(d, x.b)};
        ++m;
        if (m > q) fail("order exceeds q");
    } while (x != u);
    return Automorphism(ring, k, d, m);
}

/// Every valid (k, d) for the ring, in (k, d) lexicographic order.
inline std::vector<Automorphism> all_automorphisms(const Ring& ring) {
    std::vector<Automorphism> out;
    for (Zq k = 0; k < ring.q(); ++k)
        for (Zq d = 0; d < ring.q(); ++d) {
            try {
                out.push_back(make_automorphism(ring, k, d));
            } catch (const Error&) {
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Mixed words in Z_q^alpha R^beta

struct MixedWord {
    ZqVector zq;
    RWord r;

    friend bool operator==(const MixedWord&, const MixedWord&) = default;
    friend auto operator<=>(const MixedWord&, const MixedWord&) = default;
};

/// d * (e, r) = (eta(d) e, d r)
inline MixedWord star_mul(const Ring& ring, RingElem d, const MixedWord& w) {
    MixedWord out;
    out.zq.reserve(w.zq.size());
    out.r.reserve(w.r.size());
    for (auto e : w.zq) out.zq.push_back(ring.zmul(Ring::eta(d), e));
    for (auto x : w.r) out.r.push_back(ring.mul(d, x));
    return out;
}

/// <v, w> = u * sum v_i w_i + sum v'_j w'_j, valued in R.
inline RingElem mixed_inner_product(const Ring& ring, const MixedWord& v, const MixedWord& w) {
    if (v.zq.size() != w.zq.size() || v.r.size() != w.r.size())
        throw Error(ErrorKind::LengthMismatch, "inner product of words from different ambients");
    Zq zsum = 0;
    for (std::size_t i = 0; i < v.zq.size(); ++i) zsum = ring.zadd(zsum, ring.zmul(v.zq[i], w.zq[i]));
    RingElem acc{0, zsum};
    for (std::size_t j = 0; j < v.r.size(); ++j) acc = ring.add(acc, ring.mul(v.r[j], w.r[j]));
    return acc;
}

/// sum_j v_j w_j over R.
inline RingElem r_inner_product(const Ring& ring, std::span<const RingElem> v, std::span<const RingElem> w) {
    if (v.size() != w.size()) throw Error(ErrorKind::LengthMismatch, "inner product length mismatch");
    RingElem acc{};
    for (std::size_t j = 0; j < v.size(); ++j) acc = ring.add(acc, ring.mul(v[j], w[j]));
    return acc;
}

// ---------------------------------------------------------------------------
// Text forms

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::int64_t parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty integer in '" + std::string(context) + "'");
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw Error(ErrorKind::ParseError, "dangling sign in '" + std::string(context) + "'");
    std::int64_t value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorKind::ParseError,
                        "unexpected '" + std::string(1, s[i]) + "' at position " + std::to_string(i) + " in '" +
                            std::string(context) + "'");
        value = value * 10 + (s[i] - '0');
        if (value > (std::int64_t{1} << 40)) throw Error(ErrorKind::ParseError, "integer too large");
    }
    return negative ? -value : value;
}

/// Whitespace-separated `key=value` tokens; later keys overwrite earlier ones.
inline std::map<std::string, std::string, std::less<>> parse_kv(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        auto end = text.find_first_of(" \t", pos);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(pos, end - pos);
        auto eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw Error(ErrorKind::ParseError, "expected key=value at position " + std::to_string(pos) + ", got '" + std::string(token) + "'");
        kv[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
        pos = end;
    }
    return kv;
}

}  // namespace detail

/// Accepts `a`, `bu`, `a+bu`, `bu+a`, `u`; whitespace tolerant; reduces mod q.
inline RingElem parse_ring_elem(const Ring& ring, std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw Error(ErrorKind::ParseError, "empty ring element");

    std::int64_t a = 0, b = 0;
    std::size_t pos = 0;
    bool seen_term = false;
    while (pos < compact.size()) {
        std::size_t end = compact.find_first_of("+-", pos + 1);
        if (end == std::string::npos) end = compact.size();
        std::string_view term(compact.data() + pos, end - pos);
        bool negative = false;
        if (term.front() == '+' || term.front() == '-') {
            negative = term.front() == '-';
            term.remove_prefix(1);
        }
        if (term.empty()) throw Error(ErrorKind::ParseError, "empty term at position " + std::to_string(pos) + " in '" + compact + "'");
        std::int64_t v = 0;
        bool is_u = term.back() == 'u';
        if (is_u) {
            term.remove_suffix(1);
            if (!term.empty() && term.back() == '*') term.remove_suffix(1);
            v = term.empty() ? 1 : detail::parse_int(term, compact);
        } else {
            v = detail::parse_int(term, compact);
        }
        if (negative) v = -v;
        (is_u ? b : a) += v;
        seen_term = true;
        pos = end;
    }
    if (!seen_term) throw Error(ErrorKind::ParseError, "no terms in '" + compact + "'");
    return ring.elem(a, b);
}

inline std::string format_ring_elem(RingElem x) { return std::to_string(x.a) + "+" + std::to_string(x.b) + "u"; }

inline std::ostream& operator<<(std::ostream& os, RingElem x) { return os << format_ring_elem(x); }

inline std::string format_zq_vector(std::span<const Zq> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

inline ZqVector parse_zq_vector(const Ring& ring, std::string_view text) {
    ZqVector out;
    text = detail::trim(text);
    if (text.empty()) return out;
    for (auto part : detail::split(text, ',')) out.push_back(ring.reduce(detail::parse_int(part, text)));
    return out;
}

/// `e_0,...,e_{a-1} | r_0,...,r_{b-1}`
inline MixedWord parse_mixed_word(const Ring& ring, std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw Error(ErrorKind::ParseError, "mixed word needs '|' separator");
    MixedWord w;
    w.zq = parse_zq_vector(ring, text.substr(0, bar));
    auto rhs = detail::trim(text.substr(bar + 1));
    if (!rhs.empty())
        for (auto part : detail::split(rhs, ',')) w.r.push_back(parse_ring_elem(ring, part));
    return w;
}

inline std::string format_mixed_word(const MixedWord& w) {
    std::string out = format_zq_vector(w.zq) + " | ";
    for (std::size_t i = 0; i < w.r.size(); ++i) {
        if (i) out += ',';
        out += format_ring_elem(w.r[i]);
    }
    return out;
}

}  // namespace zqr
