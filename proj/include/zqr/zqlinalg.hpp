#pragma once

// Linear algebra over Z_q for Gray images: Howell form, code type, codeword
// enumeration and exhaustive minimum Lee distance.

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "zqr/graymaps.hpp"
#include "zqr/rings.hpp"

namespace zqr {

struct GenMatrix {
    std::uint32_t q = 4;
    std::size_t cols = 0;
    std::vector<ZqVector> rows;
    bool canonical = false;

    std::size_t row_count() const noexcept { return rows.size(); }

    friend bool operator==(const GenMatrix& x, const GenMatrix& y) {
        return x.q == y.q && x.cols == y.cols && x.rows == y.rows;
    }
};

inline GenMatrix make_matrix(std::uint32_t q, std::size_t cols, std::vector<ZqVector> rows) {
    for (auto& r : rows) {
        if (r.size() != cols) throw Error(ErrorKind::LengthMismatch, "matrix row has wrong length");
        for (auto& x : r) x %= q;
    }
    return GenMatrix{q, cols, std::move(rows), false};
}

namespace detail {

struct Xgcd {
    std::int64_t g, s, t;
};

inline Xgcd xgcd(std::int64_t a, std::int64_t b) {
    std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const auto qt = r0 / r1;
        r0 -= qt * r1;
        std::swap(r0, r1);
        s0 -= qt * s1;
        std::swap(s0, s1);
        t0 -= qt * t1;
        std::swap(t0, t1);
    }
    return {r0, s0, t0};
}

inline Zq mod(std::int64_t x, std::uint32_t q) {
    const auto m = static_cast<std::int64_t>(q);
    auto r = x % m;
    return static_cast<Zq>(r < 0 ? r + m : r);
}

/// A unit w with w * a = gcd(a, q) mod q.
inline Zq normalizing_unit(Zq a, std::uint32_t q) {
    const auto g = std::gcd<std::int64_t>(a, q);
    const std::int64_t mod_q = q / g;
    const auto inv = xgcd((a / g) % mod_q, mod_q);
    std::int64_t w = inv.s % mod_q;
    if (w < 0) w += mod_q;
    while (std::gcd<std::int64_t>(w, q) != 1) w += mod_q;
    return static_cast<Zq>(w % q);
}

inline std::size_t pivot_col(const ZqVector& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) return c;
    return row.size();
}

}  // namespace detail

/// Howell normal form: echelon rows whose pivots divide q, entries above each
/// pivot reduced below it, and the span of rows with pivots at or after any column
/// equal to the codewords vanishing before it. Unique for a row space.
inline GenMatrix howell_form(const GenMatrix& in) {
    const std::uint32_t q = in.q;
    const std::size_t n = in.cols;
    std::vector<ZqVector> a;
    a.reserve(in.rows.size() + n);
    for (const auto& r : in.rows)
        if (std::any_of(r.begin(), r.end(), [](Zq x) { return x != 0; })) a.push_back(r);

    auto combine = [&](ZqVector& x, std::int64_t cx, const ZqVector& y, std::int64_t cy) {
        for (std::size_t j = 0; j < n; ++j) x[j] = detail::mod(cx * x[j] + cy * y[j], q);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < a.size(); ++c) {
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            const std::int64_t x = a[r][c], y = a[i][c];
            const auto e = detail::xgcd(x, y);
            // [[s, t], [-y/g, x/g]] is unimodular
            ZqVector top = a[r];
            combine(top, e.s, a[i], e.t);
            ZqVector bottom = a[i];
            combine(bottom, x / e.g, a[r], -(y / e.g));
            a[r] = std::move(top);
            a[i] = std::move(bottom);
        }
        if (a[r][c] == 0) continue;
        const Zq w = detail::normalizing_unit(a[r][c], q);
        for (auto& v : a[r]) v = detail::mod(std::int64_t{w} * v, q);
        const Zq pivot = a[r][c];
        for (std::size_t j = 0; j < r; ++j) {
            const std::int64_t f = a[j][c] / pivot;
            if (f != 0) combine(a[j], 1, a[r], -f);
        }
        ZqVector ann = a[r];
        for (auto& v : ann) v = detail::mod(std::int64_t{q / pivot} * v, q);
        if (std::any_of(ann.begin(), ann.end(), [](Zq v) { return v != 0; })) a.push_back(std::move(ann));
        ++r;
    }
    a.resize(std::min(r, a.size()));
    return GenMatrix{q, n, std::move(a), true};
}

/// Membership in the row span of a Howell-form matrix.
inline bool span_contains(const GenMatrix& howell, ZqVector v) {
    const std::uint32_t q = howell.q;
    for (const auto& row : howell.rows) {
        const std::size_t c = detail::pivot_col(row);
        const Zq pivot = row[c];
        if (v[c] % pivot != 0) return false;
        const std::int64_t f = v[c] / pivot;
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = detail::mod(std::int64_t{v[j]} - f * row[j], q);
    }
    return std::all_of(v.begin(), v.end(), [](Zq x) { return x == 0; });
}

/// For q = p^s: counts[j] = number of Howell pivots of p-adic valuation j.
/// At q = 4, k1 = counts[0] and k2 = counts[1].
struct CodeType {
    std::uint32_t p = 2;
    std::uint32_t s = 2;
    std::vector<std::uint32_t> counts;

    std::uint32_t k1() const noexcept { return counts.empty() ? 0 : counts[0]; }
    std::uint32_t k2() const noexcept { return counts.size() < 2 ? 0 : counts[1]; }
    bool is_free() const noexcept {
        return std::all_of(counts.begin() + std::min<std::size_t>(1, counts.size()), counts.end(),
                           [](auto c) { return c == 0; });
    }

    /// prod p^{(s-j) t_j}, saturating at UINT64_MAX.
    std::uint64_t codeword_count() const noexcept {
        std::uint64_t total = 1;
        for (std::size_t j = 0; j < counts.size(); ++j) {
            const auto f = checked_pow(p, static_cast<std::uint64_t>(s - j) * counts[j]);
            if (f == UINT64_MAX || (f != 0 && total > UINT64_MAX / f)) return UINT64_MAX;
            total *= f;
        }
        return total;
    }

    /// `4^k1 2^k2` style, or just k1 when the code is free.
    std::string to_string() const {
        if (is_free()) return std::to_string(k1());
        std::ostringstream os;
        bool first = true;
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (counts[j] == 0) continue;
            if (!first) os << ' ';
            os << checked_pow(p, s - j) << '^' << counts[j];
            first = false;
        }
        return os.str();
    }

    friend bool operator==(const CodeType&, const CodeType&) = default;
};

inline CodeType code_type(const GenMatrix& m) {
    const GenMatrix h = m.canonical ? m : howell_form(m);
    const auto params = RingParams::from_modulus(h.q);
    CodeType t{params.p, params.s, std::vector<std::uint32_t>(params.s, 0)};
    for (const auto& row : h.rows) {
        Zq pivot = row[detail::pivot_col(row)];
        std::uint32_t v = 0;
        while (pivot % params.p == 0) {
            pivot /= params.p;
            ++v;
        }
        ++t.counts[v];
    }
    return t;
}

namespace detail {

/// Odometer over the Howell coefficients: row i ranges over [0, q / pivot_i).
/// Digits [0, split) are enumerated for each fixed setting of the digits at or above split.
/// A callback returning bool stops the walk by returning false.
template <class Fn>
void enumerate_howell_range(const GenMatrix& h, std::size_t split, std::uint64_t top_lo, std::uint64_t top_hi, Fn&& fn) {
    const std::uint32_t q = h.q;
    const std::size_t k = h.rows.size();
    const std::size_t n = h.cols;
    std::vector<std::uint32_t> radix(k);
    for (std::size_t i = 0; i < k; ++i) radix[i] = q / h.rows[i][pivot_col(h.rows[i])];

    // wrap delta: subtract (radix - 1) * row
    std::vector<ZqVector> wrap(k, ZqVector(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) wrap[i][j] = mod(-std::int64_t(radix[i] - 1) * h.rows[i][j], q);

    ZqVector word(n);
    std::vector<std::uint32_t> digit(k, 0);
    for (std::uint64_t top = top_lo; top < top_hi; ++top) {
        std::fill(word.begin(), word.end(), 0);
        std::uint64_t rest = top;
        for (std::size_t i = split; i < k; ++i) {
            digit[i] = static_cast<std::uint32_t>(rest % radix[i]);
            rest /= radix[i];
            for (std::size_t j = 0; j < n; ++j) word[j] = (word[j] + digit[i] * h.rows[i][j]) % q;
        }
        std::fill(digit.begin(), digit.begin() + static_cast<std::ptrdiff_t>(split), 0);
        while (true) {
            if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const ZqVector&>, bool>) {
                if (!fn(static_cast<const ZqVector&>(word))) return;
            } else {
                fn(static_cast<const ZqVector&>(word));
            }
            std::size_t i = 0;
            for (; i < split; ++i) {
                if (digit[i] + 1 < radix[i]) {
                    ++digit[i];
                    for (std::size_t j = 0; j < n; ++j) word[j] = (word[j] + h.rows[i][j]) % q;
                    break;
                }
                digit[i] = 0;
                for (std::size_t j = 0; j < n; ++j) word[j] = (word[j] + wrap[i][j]) % q;
            }
            if (i == split) break;
        }
    }
}

inline std::uint64_t top_block_count(const GenMatrix& h, std::size_t split) {
    std::uint64_t total = 1;
    for (std::size_t i = split; i < h.rows.size(); ++i) total *= h.q / h.rows[i][pivot_col(h.rows[i])];
    return total;
}

}  // namespace detail

/// Calls fn on every codeword exactly once (the zero word first).
template <class Fn>
void for_each_codeword(const GenMatrix& m, Fn&& fn, std::uint64_t cap = kDefaultCodewordCap) {
    const GenMatrix h = m.canonical ? m : howell_form(m);
    check_cap(code_type(h).codeword_count(), cap, "codeword enumeration");
    detail::enumerate_howell_range(h, h.rows.size(), 0, 1, fn);
}

inline std::vector<ZqVector> enumerate_codewords(const GenMatrix& m, std::uint64_t cap = kDefaultCodewordCap) {
    std::vector<ZqVector> out;
    for_each_codeword(m, [&](const ZqVector& w) { out.push_back(w); }, cap);
    return out;
}

/// Minimum Lee weight over nonzero codewords. Work is sharded over the coefficients
/// of the last Howell rows; the result does not depend on the worker count.
/// With stop_below > 0 the scan ends at the first weight under stop_below and returns
/// some weight under it, not necessarily the minimum.
inline std::uint64_t min_lee_distance(const GenMatrix& m, std::uint64_t cap = kDefaultCodewordCap, unsigned threads = 1,
                                      std::uint64_t stop_below = 0) {
    const GenMatrix h = m.canonical ? m : howell_form(m);
    if (h.rows.empty()) throw Error(ErrorKind::ZeroCode, "minimum distance of the zero code");
    check_cap(code_type(h).codeword_count(), cap, "minimum distance enumeration");

    const std::uint32_t q = h.q;
    threads = std::max(1u, threads);
    // shard on enough top rows to give every worker something to do
    std::size_t split = h.rows.size();
    while (split > 0 && detail::top_block_count(h, split) < 4ull * threads) --split;
    const std::uint64_t blocks = detail::top_block_count(h, split);

    std::atomic<bool> stop{false};
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t seen = 0;
        detail::enumerate_howell_range(h, split, lo, hi, [&](const ZqVector& w) {
            const auto wt = lee_weight(q, w);
            if (wt != 0 && wt < best) best = wt;
            if (best < stop_below) {
                stop = true;
                return false;
            }
            return (++seen & 0xfff) != 0 || !stop;
        });
        return best;
    };

    if (threads == 1) return scan(0, blocks);
    std::vector<std::uint64_t> results(threads, std::numeric_limits<std::uint64_t>::max());
    std::vector<std::thread> pool;
    const std::uint64_t per = (blocks + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = std::min(blocks, t * per), hi = std::min(blocks, (t + 1) * per);
        pool.emplace_back([&, lo, hi, t] { results[t] = scan(lo, hi); });
    }
    for (auto& th : pool) th.join();
    return *std::min_element(results.begin(), results.end());
}

// ---------------------------------------------------------------------------
// Text form: one row per line, comma-separated residues.

inline std::string format_matrix(const GenMatrix& m) {
    std::string out;
    for (const auto& r : m.rows) out += format_zq_vector(r) + "\n";
    return out;
}

inline GenMatrix parse_matrix(const Ring& ring, std::string_view text) {
    std::vector<ZqVector> rows;
    std::size_t cols = 0;
    for (auto line : detail::split(text, '\n')) {
        line = detail::trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto row = parse_zq_vector(ring, line);
        if (!rows.empty() && row.size() != cols) throw Error(ErrorKind::ParseError, "ragged matrix rows");
        cols = row.size();
        rows.push_back(std::move(row));
    }
    return make_matrix(ring.q(), cols, std::move(rows));
}

}  // namespace zqr
