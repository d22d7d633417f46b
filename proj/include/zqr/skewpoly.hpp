#pragma once

// The skew polynomial ring R[x; theta] with x * a = theta(a) x.

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "zqr/rings.hpp"
#include "zqr/zqpoly.hpp"

namespace zqr {

/// Coefficients ascending, trailing zeros stripped. The zero polynomial has no degree.
class SkewPoly {
public:
    explicit SkewPoly(Automorphism theta) : theta_(std::move(theta)) {}
    SkewPoly(Automorphism theta, RWord coeffs) : theta_(std::move(theta)), coeffs_(std::move(coeffs)) { normalize(); }

    static SkewPoly monomial(const Automorphism& theta, RingElem c, std::size_t degree) {
        RWord coeffs(degree + 1);
        coeffs[degree] = c;
        return SkewPoly(theta, std::move(coeffs));
    }
    static SkewPoly constant(const Automorphism& theta, RingElem c) { return monomial(theta, c, 0); }
    static SkewPoly one(const Automorphism& theta) { return constant(theta, theta.ring().one()); }

    /// x^n - lam
    static SkewPoly binomial(const Automorphism& theta, std::size_t n, RingElem lam) {
        const Ring& ring = theta.ring();
        RWord coeffs(n + 1);
        coeffs[0] = ring.neg(lam);
        coeffs[n] = ring.add(coeffs[n], ring.one());
        return SkewPoly(theta, std::move(coeffs));
    }

    /// Lift of a Z_q polynomial.
    static SkewPoly from_zq(const Automorphism& theta, const ZqPoly& f) {
        RWord coeffs;
        coeffs.reserve(f.coeffs.size());
        for (auto c : f.coeffs) coeffs.push_back({c, 0});
        return SkewPoly(theta, std::move(coeffs));
    }

    const Automorphism& theta() const noexcept { return theta_; }
    const Ring& ring() const noexcept { return theta_.ring(); }
    const RWord& coeffs() const noexcept { return coeffs_; }
    RingElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : RingElem{}; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    RingElem lead() const noexcept { return coeffs_.empty() ? RingElem{} : coeffs_.back(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == ring().one(); }

    /// eta applied coefficientwise.
    ZqPoly eta() const {
        ZqVector c;
        c.reserve(coeffs_.size());
        for (auto x : coeffs_) c.push_back(x.a);
        return ZqPoly(std::move(c));
    }

    friend bool operator==(const SkewPoly& f, const SkewPoly& g) {
        return f.theta_ == g.theta_ && f.coeffs_ == g.coeffs_;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == RingElem{}) coeffs_.pop_back();
    }

    Automorphism theta_;
    RWord coeffs_;
};

namespace detail {

inline void require_same_ctx(const SkewPoly& f, const SkewPoly& g) {
    if (!(f.theta() == g.theta())) throw Error(ErrorKind::ContextMismatch, "polynomials over different R[x;theta]");
}

}  // namespace detail

inline SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
    detail::require_same_ctx(f, g);
    const Ring& ring = f.ring();
    RWord out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring.add(f.coeff(i), g.coeff(i));
    return SkewPoly(f.theta(), std::move(out));
}

inline SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
    detail::require_same_ctx(f, g);
    const Ring& ring = f.ring();
    RWord out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring.sub(f.coeff(i), g.coeff(i));
    return SkewPoly(f.theta(), std::move(out));
}

/// (a x^i) * (b x^j) = a theta^i(b) x^{i+j}
inline SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    detail::require_same_ctx(f, g);
    if (f.is_zero() || g.is_zero()) return SkewPoly(f.theta());
    const Ring& ring = f.ring();
    const Automorphism& theta = f.theta();
    const auto m = theta.order();
    // theta^i(g) depends only on i mod m
    std::vector<RWord> twisted(std::min<std::size_t>(m, f.coeffs().size()));
    for (std::size_t r = 0; r < twisted.size(); ++r) {
        twisted[r].reserve(g.coeffs().size());
        for (auto b : g.coeffs()) twisted[r].push_back(theta.apply(b, r));
    }
    RWord out(f.coeffs().size() + g.coeffs().size() - 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const RingElem a = f.coeffs()[i];
        if (a == RingElem{}) continue;
        const RWord& tg = twisted[i % m];
        for (std::size_t j = 0; j < tg.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(a, tg[j]));
    }
    return SkewPoly(theta, std::move(out));
}

inline SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return skew_mul(f, g); }

struct SkewDivision {
    SkewPoly quot;
    SkewPoly rem;
};

namespace detail {

inline RingElem unit_lead_inverse(const SkewPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
    auto inv = g.ring().inverse(g.lead());
    if (!inv) throw Error(ErrorKind::NonUnitLeadingCoeff, "divisor leading coefficient " + format_ring_elem(g.lead()) + " is not a unit");
    return *inv;
}

}  // namespace detail

/// f = quot * g + rem with rem = 0 or deg rem < deg g.
inline SkewDivision skew_right_divide(const SkewPoly& f, const SkewPoly& g) {
    detail::require_same_ctx(f, g);
    const RingElem lead_inv = detail::unit_lead_inverse(g);
    const Ring& ring = f.ring();
    const Automorphism& theta = f.theta();
    const std::size_t dg = *g.degree();

    RWord rem = f.coeffs();
    RWord quot(rem.size() > dg ? rem.size() - dg : 0);
    for (std::size_t top = rem.size(); top-- > dg;) {
        if (rem[top] == RingElem{}) continue;
        const std::size_t shift = top - dg;
        // c * theta^shift(lc g) = lc rem
        const RingElem c = ring.mul(rem[top], theta.apply(lead_inv, shift));
        quot[shift] = c;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[shift + j] = ring.sub(rem[shift + j], ring.mul(c, theta.apply(g.coeffs()[j], shift)));
        assert(rem[top] == RingElem{});
    }
    SkewDivision out{SkewPoly(theta, std::move(quot)), SkewPoly(theta, std::move(rem))};
#ifndef NDEBUG
    assert(skew_mul(out.quot, g) + out.rem == f);
#endif
    return out;
}

/// f = g * quot + rem with rem = 0 or deg rem < deg g.
inline SkewDivision skew_left_divide(const SkewPoly& f, const SkewPoly& g) {
    detail::require_same_ctx(f, g);
    const RingElem lead_inv = detail::unit_lead_inverse(g);
    const Ring& ring = f.ring();
    const Automorphism& theta = f.theta();
    const std::size_t dg = *g.degree();
    const std::uint64_t m = theta.order();
    // theta^{-dg} = theta^{m - dg mod m}
    const std::uint64_t back = (m - dg % m) % m;

    RWord rem = f.coeffs();
    RWord quot(rem.size() > dg ? rem.size() - dg : 0);
    for (std::size_t top = rem.size(); top-- > dg;) {
        if (rem[top] == RingElem{}) continue;
        const std::size_t shift = top - dg;
        // lc(g) theta^dg(c) = lc rem
        const RingElem c = theta.apply(ring.mul(lead_inv, rem[top]), back);
        quot[shift] = c;
        for (std::size_t i = 0; i <= dg; ++i)
            rem[i + shift] = ring.sub(rem[i + shift], ring.mul(g.coeffs()[i], theta.apply(c, i)));
        assert(rem[top] == RingElem{});
    }
    SkewDivision out{SkewPoly(theta, std::move(quot)), SkewPoly(theta, std::move(rem))};
#ifndef NDEBUG
    assert(skew_mul(g, out.quot) + out.rem == f);
#endif
    return out;
}

/// Remainder of f on right division by x^n - lam, as a length-n coefficient vector.
inline RWord reduce_mod_binomial(const SkewPoly& f, std::size_t n, RingElem lam) {
    const Ring& ring = f.ring();
    const Automorphism& theta = f.theta();
    // c x^j * (x^n - lam) = c x^{n+j} - c theta^j(lam) x^j
    RWord out(n);
    RWord work = f.coeffs();
    for (std::size_t top = work.size(); top-- > n;) {
        const RingElem c = work[top];
        if (c == RingElem{}) continue;
        const std::size_t j = top - n;
        work[j] = ring.add(work[j], ring.mul(c, theta.apply(lam, j)));
        work[top] = {};
    }
    for (std::size_t i = 0; i < std::min(n, work.size()); ++i) out[i] = work[i];
    return out;
}

/// True iff f commutes with x and with every constant. Commuting with constants is
/// Z_q-linear in the constant, so the module generators 1 and u decide it exactly.
inline bool is_central(const SkewPoly& f) {
    const Automorphism& theta = f.theta();
    const Ring& ring = f.ring();
    const SkewPoly x = SkewPoly::monomial(theta, ring.one(), 1);
    if (!(skew_mul(x, f) == skew_mul(f, x))) return false;
    for (RingElem a : {ring.one(), ring.u()}) {
        const SkewPoly c = SkewPoly::constant(theta, a);
        if (!(skew_mul(c, f) == skew_mul(f, c))) return false;
    }
    return true;
}

/// Support of f lies on multiples of the automorphism order.
inline bool has_central_support(const SkewPoly& f) {
    const auto m = f.theta().order();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i] != RingElem{} && i % m != 0) return false;
    return true;
}

/// x^beta - lam is central iff m | beta and theta(lam) = lam.
inline bool is_binomial_central(std::size_t beta, RingElem lam, const Automorphism& theta) {
    return beta % theta.order() == 0 && theta.apply(lam) == lam;
}

struct DivisorPair {
    SkewPoly g;
    SkewPoly h;
};

/// All monic h of degree deg_h with x^beta - lam = g * h, in enumeration order:
/// (h_0, ..., h_{deg_h - 1}) lexicographic with h_0 most significant, each coefficient
/// ordered by (a, b).
inline std::vector<DivisorPair> right_divisor_pairs(std::size_t beta, RingElem lam, std::size_t deg_h,
                                                    const Automorphism& theta,
                                                    std::uint64_t cap = kDefaultDivisorCap, unsigned threads = 1) {
    if (deg_h < 1 || deg_h > beta) throw Error(ErrorKind::LengthMismatch, "need 1 <= deg_h <= beta");
    const Ring& ring = theta.ring();
    const std::uint64_t per_coeff = std::uint64_t{ring.q()} * ring.q();
    const std::uint64_t total = checked_pow(per_coeff, deg_h);
    check_cap(total, cap, "divisor enumeration");

    const SkewPoly target = SkewPoly::binomial(theta, beta, lam);
    const std::uint64_t block = total / per_coeff;  // candidates sharing h_0

    auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<DivisorPair>& out) {
        RWord coeffs(deg_h + 1);
        coeffs[deg_h] = ring.one();
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t i = deg_h; i-- > 0;) {
                const auto digit = rest % per_coeff;
                rest /= per_coeff;
                coeffs[i] = {static_cast<Zq>(digit / ring.q()), static_cast<Zq>(digit % ring.q())};
            }
            SkewPoly h(theta, coeffs);
            auto div = skew_right_divide(target, h);
            if (div.rem.is_zero()) out.push_back({std::move(div.quot), std::move(h)});
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(per_coeff)));
    std::vector<std::vector<DivisorPair>> parts(threads);
    if (threads == 1) {
        scan(0, total, parts[0]);
    } else {
        // contiguous h_0 ranges keep the merged output in enumeration order
        std::vector<std::thread> pool;
        const std::uint64_t lead_per_worker = (per_coeff + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = std::min(per_coeff, t * lead_per_worker) * block;
            const std::uint64_t hi = std::min(per_coeff, (t + 1) * lead_per_worker) * block;
            pool.emplace_back([&, lo, hi, t] { scan(lo, hi, parts[t]); });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<DivisorPair> out;
    for (auto& part : parts)
        for (auto& pair : part) out.push_back(std::move(pair));
    return out;
}

// ---------------------------------------------------------------------------
// Text form

/// Comma-separated ascending RingElem coefficients (`3+3u,3+2u,1,1+u,1`), or a compact
/// digit string for a Z_q polynomial (`31212201`).
inline SkewPoly parse_r_poly(const Automorphism& theta, std::string_view text) {
    const Ring& ring = theta.ring();
    auto t = detail::trim(text);
    if (t.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
    const bool compact = t.find(',') == std::string_view::npos && t.size() > 1 && ring.q() <= 10 &&
                         std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (compact) return SkewPoly::from_zq(theta, parse_zq_poly(ring, t));
    RWord coeffs;
    for (auto part : detail::split(t, ',')) coeffs.push_back(parse_ring_elem(ring, part));
    return SkewPoly(theta, std::move(coeffs));
}

/// Canonical comma form; the zero polynomial prints as `0+0u`.
inline std::string format_r_poly(const SkewPoly& f) {
    if (f.is_zero()) return format_ring_elem({});
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += format_ring_elem(f.coeffs()[i]);
    }
    return out;
}

/// Human form, descending: x^4+(1+1u)x^3+...
inline std::string pretty_r_poly(const SkewPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const RingElem c = f.coeffs()[i];
        if (c == RingElem{}) continue;
        if (!out.empty()) out += " + ";
        std::string cs;
        if (c.b == 0) cs = std::to_string(c.a);
        else if (c.a == 0) cs = (c.b == 1 ? "" : std::to_string(c.b)) + "u";
        else cs = "(" + std::to_string(c.a) + "+" + (c.b == 1 ? "" : std::to_string(c.b)) + "u)";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c == RingElem{1, 0}) cs.clear();
        out += cs + "x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

}  // namespace zqr
