#pragma once

// Commutative polynomials over Z_q, used for the Z_q-block generator g_alpha.

#include <string>
#include <string_view>
#include <vector>

#include "zqr/rings.hpp"

namespace zqr {

/// Ascending coefficients, trailing zeros stripped.
struct ZqPoly {
    ZqVector coeffs;

    ZqPoly() = default;
    explicit ZqPoly(ZqVector c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const noexcept { return coeffs.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.size() - 1;
    }
    Zq coeff(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : 0; }

    friend bool operator==(const ZqPoly&, const ZqPoly&) = default;
};

inline ZqPoly zq_mul(const Ring& ring, const ZqPoly& f, const ZqPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    ZqVector out(f.coeffs.size() + g.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] = ring.zadd(out[i + j], ring.zmul(f.coeffs[i], g.coeffs[j]));
    return ZqPoly(std::move(out));
}

struct ZqDivision {
    ZqPoly quot;
    ZqPoly rem;
};

/// f = quot * g + rem; g must have a unit leading coefficient.
inline ZqDivision zq_divide(const Ring& ring, const ZqPoly& f, const ZqPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
    auto lead_inv = ring.zinverse(g.coeffs.back());
    if (!lead_inv) throw Error(ErrorKind::NonUnitLeadingCoeff, "divisor has a non-unit leading coefficient");
    ZqVector rem = f.coeffs;
    const std::size_t dg = g.coeffs.size() - 1;
    ZqVector quot(rem.size() > dg ? rem.size() - dg : 0, 0);
    for (std::size_t top = rem.size(); top-- > dg;) {
        const Zq c = ring.zmul(rem[top], *lead_inv);
        if (c == 0) continue;
        quot[top - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) rem[top - dg + j] = ring.zsub(rem[top - dg + j], ring.zmul(c, g.coeffs[j]));
    }
    return {ZqPoly(std::move(quot)), ZqPoly(std::move(rem))};
}

/// x^n - 1 over Z_q.
inline ZqPoly zq_cyclic_modulus(const Ring& ring, std::size_t n) {
    ZqVector c(n + 1, 0);
    c[0] = ring.zneg(1 % ring.q());
    c[n] = ring.zadd(c[n], 1);
    return ZqPoly(std::move(c));
}

inline bool zq_divides_cyclic(const Ring& ring, const ZqPoly& g, std::size_t n) {
    return zq_divide(ring, zq_cyclic_modulus(ring, n), g).rem.is_zero();
}

/// Coefficient vector of f mod (x^n - 1), length n.
inline ZqVector zq_wrap(const Ring& ring, const ZqPoly& f, std::size_t n) {
    ZqVector out(n, 0);
    if (n == 0) return out;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) out[i % n] = ring.zadd(out[i % n], f.coeffs[i]);
    return out;
}

/// Compact ascending digit string: "31212201" = 3 + x + 2x^2 + x^3 + 2x^4 + 2x^5 + x^7.
/// Comma-separated residues are accepted as well; for q > 10 a comma-free string is one residue.
inline ZqPoly parse_zq_poly(const Ring& ring, std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
    ZqVector c;
    if (text.find(',') != std::string_view::npos) {
        for (auto part : detail::split(text, ',')) {
            auto v = detail::parse_int(part, text);
            c.push_back(ring.reduce(v));
        }
        return ZqPoly(std::move(c));
    }
    if (ring.q() > 10) return ZqPoly(ZqVector{ring.reduce(detail::parse_int(text, text))});
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error(ErrorKind::ParseError, "non-digit '" + std::string(1, ch) + "' at position " + std::to_string(i));
        const Zq v = static_cast<Zq>(ch - '0');
        if (v >= ring.q())
            throw Error(ErrorKind::ParseError,
                        "digit " + std::to_string(v) + " at position " + std::to_string(i) + " is not a residue mod " +
                            std::to_string(ring.q()));
        c.push_back(v);
    }
    return ZqPoly(std::move(c));
}

/// Inverse of parse_zq_poly: digit string when q <= 10, comma list otherwise.
inline std::string format_zq_poly(const Ring& ring, const ZqPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (ring.q() <= 10) {
            out += static_cast<char>('0' + f.coeffs[i]);
        } else {
            if (i) out += ',';
            out += std::to_string(f.coeffs[i]);
        }
    }
    return out;
}

}  // namespace zqr
