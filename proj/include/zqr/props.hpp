#pragma once

// Seeded randomized invariant suites, shared by the test suite and the `props` subcommand.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "zqr/graymaps.hpp"
#include "zqr/rings.hpp"
#include "zqr/skewpoly.hpp"
#include "zqr/zqlinalg.hpp"

namespace zqr {

struct PropResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;

    bool ok() const noexcept { return failures == 0; }
};

namespace props {

using Rng = std::mt19937_64;

inline RingElem random_elem(const Ring& ring, Rng& rng) {
    std::uniform_int_distribution<Zq> dist(0, ring.q() - 1);
    return {dist(rng), dist(rng)};
}

inline SkewPoly random_poly(const Automorphism& theta, std::size_t max_deg, Rng& rng, bool monic = false) {
    std::uniform_int_distribution<std::size_t> deg_dist(0, max_deg);
    const std::size_t deg = deg_dist(rng);
    RWord c(deg + 1);
    for (auto& x : c) x = random_elem(theta.ring(), rng);
    if (monic) c.back() = theta.ring().one();
    return SkewPoly(theta, std::move(c));
}

inline GenMatrix random_matrix(std::uint32_t q, std::size_t rows, std::size_t cols, Rng& rng) {
    std::uniform_int_distribution<Zq> dist(0, q - 1);
    std::vector<ZqVector> m(rows, ZqVector(cols));
    for (auto& r : m)
        for (auto& x : r) x = dist(rng);
    return make_matrix(q, cols, std::move(m));
}

/// Z_q-span of the raw rows by direct enumeration of all coefficient vectors.
inline std::set<ZqVector> naive_span(const GenMatrix& m) {
    std::set<ZqVector> out;
    const std::uint64_t total = checked_pow(m.q, m.rows.size());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ZqVector w(m.cols, 0);
        std::uint64_t rest = idx;
        for (const auto& row : m.rows) {
            const auto c = rest % m.q;
            rest /= m.q;
            for (std::size_t j = 0; j < m.cols; ++j) w[j] = static_cast<Zq>((w[j] + c * row[j]) % m.q);
        }
        out.insert(std::move(w));
    }
    return out;
}

}  // namespace props

/// quot * g + rem == f and deg rem < deg g, for random f and monic g.
inline PropResult prop_division(const Automorphism& theta, std::uint64_t seed, std::size_t trials = 500, std::size_t max_deg = 8) {
    props::Rng rng(seed);
    PropResult res{"division (" + std::to_string(theta.k()) + "," + std::to_string(theta.d()) + ")", trials, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        const auto f = props::random_poly(theta, max_deg, rng);
        const auto g = props::random_poly(theta, max_deg, rng, true);
        const auto r = skew_right_divide(f, g);
        const auto l = skew_left_divide(f, g);
        const auto dg = *g.degree();
        const bool right_ok = skew_mul(r.quot, g) + r.rem == f && (r.rem.is_zero() || *r.rem.degree() < dg);
        const bool left_ok = skew_mul(g, l.quot) + l.rem == f && (l.rem.is_zero() || *l.rem.degree() < dg);
        if (!right_ok || !left_ok) ++res.failures;
    }
    return res;
}

inline PropResult prop_associativity(const Automorphism& theta, std::uint64_t seed, std::size_t trials = 300) {
    props::Rng rng(seed);
    PropResult res{"associativity", trials, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        const auto a = props::random_poly(theta, 5, rng);
        const auto b = props::random_poly(theta, 5, rng);
        const auto c = props::random_poly(theta, 5, rng);
        if (skew_mul(skew_mul(a, b), c) != skew_mul(a, skew_mul(b, c))) ++res.failures;
        if (skew_mul(a, b + c) != skew_mul(a, b) + skew_mul(a, c)) ++res.failures;
    }
    return res;
}

/// Howell form preserves the span and is idempotent.
inline PropResult prop_howell_span(std::uint32_t q, std::uint64_t seed, std::size_t trials = 200) {
    props::Rng rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    PropResult res{"howell span", trials, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        const auto m = props::random_matrix(q, dim(rng), dim(rng) + 2, rng);
        const auto h = howell_form(m);
        const auto words = enumerate_codewords(h);
        const std::set<ZqVector> got(words.begin(), words.end());
        const bool same = got == props::naive_span(m) && got.size() == words.size() && howell_form(h).rows == h.rows &&
                          code_type(h).codeword_count() == words.size();
        if (!same) ++res.failures;
    }
    return res;
}

inline PropResult prop_distance_oracle(std::uint32_t q, std::uint64_t seed, std::size_t trials = 200) {
    props::Rng rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    PropResult res{"lee distance oracle", trials, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        const auto m = props::random_matrix(q, dim(rng), dim(rng) + 2, rng);
        std::uint64_t naive = 0;
        bool any = false;
        for (const auto& w : props::naive_span(m)) {
            const auto wt = lee_weight(q, w);
            if (wt == 0) continue;
            naive = any ? std::min(naive, wt) : wt;
            any = true;
        }
        const auto h = howell_form(m);
        if (!any) {
            if (!h.rows.empty()) ++res.failures;
            continue;
        }
        if (min_lee_distance(h) != naive) ++res.failures;
    }
    return res;
}

inline std::vector<PropResult> run_all_props(std::uint64_t seed) {
    const Ring ring(4);
    return {prop_division(make_automorphism(ring, 0, 3), seed),
            prop_division(make_automorphism(ring, 2, 1), seed + 1),
            prop_associativity(make_automorphism(ring, 0, 3), seed + 2),
            prop_howell_span(4, seed + 3),
            prop_distance_oracle(4, seed + 4)};
}

}  // namespace zqr
