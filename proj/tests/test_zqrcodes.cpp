#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zqr/props.hpp"
#include "zqr/search.hpp"
#include "zqr/zqrcodes.hpp"

using namespace zqr;

namespace {

const Ring Z4(4);
const Automorphism T03 = make_automorphism(Z4, 0, 3);

ZqPoly Zp(std::string_view s) { return parse_zq_poly(Z4, s); }
SkewPoly Rp(std::string_view s) { return parse_r_poly(T03, s); }

std::vector<ZqVector> all_zq_words(std::size_t n) {
    std::vector<ZqVector> out;
    for (std::uint64_t idx = 0; idx < checked_pow(4, n); ++idx) {
        ZqVector v(n);
        std::uint64_t rest = idx;
        for (auto& x : v) {
            x = static_cast<Zq>(rest % 4);
            rest /= 4;
        }
        out.push_back(v);
    }
    return out;
}

// Z_q-dual by direct scan.
WordSet<ZqVector> zq_dual(const WordSet<ZqVector>& code, std::size_t n) {
    std::vector<ZqVector> out;
    for (auto& w : all_zq_words(n)) {
        bool ok = true;
        for (auto& c : code) {
            Zq s = 0;
            for (std::size_t i = 0; i < n; ++i) s = Z4.zadd(s, Z4.zmul(c[i], w[i]));
            if (s) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(w);
    }
    return WordSet<ZqVector>(out);
}

WordSet<ZqVector> zq_words(const GenMatrix& m) { return WordSet<ZqVector>(enumerate_codewords(m)); }

}  // namespace

TEST(MixedShift, Examples) {
    MixedWord w{{1, 2}, {{0, 1}, {1, 0}}};
    EXPECT_EQ(mixed_shift(T03, {3, 0}, w), (MixedWord{{2, 1}, {{3, 0}, {0, 3}}}));
    auto id = make_automorphism(Z4, 0, 1);
    MixedWord v{{1, 2, 3}, {{1, 1}, {2, 0}}};
    EXPECT_EQ(mixed_shift(id, Z4.one(), v), (MixedWord{{3, 1, 2}, {{2, 0}, {1, 1}}}));
    MixedWord z{{0, 0}, {{0, 0}}};
    EXPECT_EQ(mixed_shift(T03, Z4.one(), z), z);
}

TEST(PolyScalarAction, Examples) {
    MixedWord w{{1, 3}, {{1, 2}, {0, 1}}};
    auto x = SkewPoly::monomial(T03, Z4.one(), 1);
    EXPECT_EQ(poly_scalar_action(x, w, Z4.one()), mixed_shift(T03, Z4.one(), w));
    auto u = SkewPoly::constant(T03, Z4.u());
    auto uw = poly_scalar_action(u, w, Z4.one());
    EXPECT_EQ(uw.zq, (ZqVector{0, 0}));
    EXPECT_EQ(uw.r, (RWord{{0, 1}, {0, 0}}));
    auto h = SkewPoly::monomial(T03, {1, 1}, 1);
    auto got = poly_scalar_action(h, MixedWord{{1, 0}, {{1, 0}, {0, 0}}}, Z4.one());
    EXPECT_EQ(got, (MixedWord{{0, 1}, {{0, 0}, {1, 1}}}));
}

TEST(BuildMixedCode, TrivialGenerators) {
    auto zero = build_mixed_code(make_mixed_spec(2, 2, Z4.one(), Zp("3,0,1"), SkewPoly::binomial(T03, 2, Z4.one())));
    EXPECT_EQ(zero.size(), 1u);
    auto full = build_mixed_code(make_mixed_spec(2, 2, Z4.one(), Zp("1"), SkewPoly::one(T03)));
    // one generator (1|1): the alpha part is eta of the beta part, so 16^2 words
    EXPECT_EQ(full.size(), 256u);
    EXPECT_THROW(make_mixed_spec(3, 2, Z4.one(), Zp("1,1"), SkewPoly::one(T03)), Error);
}

// The built code is a left R[x;theta]-submodule: closed under x, u, and random h.
TEST(BuildMixedCode, ClosedUnderModuleAction) {
    std::mt19937_64 rng(23);
    auto gb = right_divisor_pairs(4, Z4.one(), 2, T03).front().g;
    auto spec = make_mixed_spec(3, 4, Z4.one(), Zp("3,1"), gb);
    auto code = build_mixed_code(spec);
    auto words = code.words();
    EXPECT_TRUE(is_mixed_shift_closed(words, T03, Z4.one()));
    for (int t = 0; t < 50; ++t) {
        auto h = props::random_poly(T03, 6, rng);
        for (std::size_t i = 0; i < words.size(); i += 97) ASSERT_TRUE(words.contains(poly_scalar_action(h, words.words()[i], Z4.one())));
    }
    EXPECT_EQ(build_mixed_code(spec, 2).basis.rows, code.basis.rows);
}

TEST(BuildMixedCode, ContainsEveryLeftMultipleOfGenerator) {
    std::mt19937_64 rng(29);
    auto spec = make_mixed_spec(2, 2, Z4.one(), Zp("1"), Rp("1,1"));
    auto words = build_mixed_code(spec).words();
    MixedWord g{zq_wrap(Z4, spec.g_alpha, 2), reduce_mod_binomial(spec.g_beta, 2, Z4.one())};
    for (int t = 0; t < 200; ++t) EXPECT_TRUE(words.contains(poly_scalar_action(props::random_poly(T03, 5, rng), g, Z4.one())));
}

TEST(GeneratorFromParity, Examples) {
    auto h = Rp("1,1,2+u,1");
    auto pg = generator_from_parity(h, 14, Z4.one());
    EXPECT_EQ(*pg.g.degree(), 11u);
    EXPECT_TRUE(pg.g.is_monic());
    EXPECT_EQ(pg.g * h, SkewPoly::binomial(T03, 14, Z4.one()));
    EXPECT_EQ(pg.side, FactorSide::GH);

    auto self = generator_from_parity(SkewPoly::binomial(T03, 4, Z4.one()), 4, Z4.one());
    EXPECT_EQ(self.g, SkewPoly::one(T03));
    auto unit = generator_from_parity(SkewPoly::one(T03), 4, Z4.one());
    EXPECT_EQ(unit.g, SkewPoly::binomial(T03, 4, Z4.one()));
    EXPECT_THROW(generator_from_parity(Rp("1,0,1"), 14, Z4.one()), Error);
}

// Every reference parity-check polynomial divides x^14 - 1 on the recorded side.
TEST(GeneratorFromParity, TableParityChecks) {
    for (auto& row : parse_manifest(kTable1Manifest)) {
        auto h = Rp(row.h_beta);
        auto pg = generator_from_parity(h, 14, Z4.one());
        auto prod = pg.side == FactorSide::GH ? pg.g * h : h * pg.g;
        EXPECT_EQ(prod, SkewPoly::binomial(T03, 14, Z4.one())) << row.h_beta;
        // x^14 - 1 is central, so both orders hold for monic factors
        EXPECT_EQ(h * pg.g, pg.g * h);
    }
}

// The spanning set {g, ..., x^{deg h - 1} g} spans 16^{deg h} words for every table row.
TEST(SpanningCode, TableCounts) {
    for (auto& row : parse_manifest(kTable1Manifest)) {
        auto h = Rp(row.h_beta);
        auto spec = make_mixed_spec(row.alpha, 14, Z4.one(), Zp(row.g_alpha), generator_from_parity(h, 14, Z4.one()).g);
        auto code = build_spanning_code(spec, *h.degree());
        EXPECT_EQ(code.size(), checked_pow(16, *h.degree())) << row.line;
        EXPECT_TRUE(code_type(code.gray_matrix(GrayVariant::Double)).is_free());
    }
}

TEST(SpanningCode, FullOrbitEqualsModule) {
    auto gb = right_divisor_pairs(4, Z4.one(), 2, T03).front().g;
    auto spec = make_mixed_spec(3, 4, Z4.one(), Zp("3,1"), gb);
    EXPECT_EQ(build_spanning_code(spec, 2 * 12).basis.rows, build_mixed_code(spec).basis.rows);
}

TEST(SeparableProduct, Examples) {
    auto zero = separable_product(T03, Z4.one(), 2, make_matrix(4, 2, {}), 2, make_matrix(4, 4, {}));
    EXPECT_EQ(zero.size(), 1u);
    auto full = separable_product(T03, Z4.one(), 2, build_cyclic_zq(Z4, 2, Zp("1")), 2,
                                  build_rcode(make_rcode_spec(2, Z4.one(), SkewPoly::one(T03))).basis);
    EXPECT_EQ(full.size(), 16u * 256u);
    for (auto& p : right_divisor_pairs(2, Z4.one(), 1, T03)) {
        auto cb = build_rcode(make_rcode_spec(2, Z4.one(), p.g));
        auto prod = separable_product(T03, Z4.one(), 2, build_cyclic_zq(Z4, 2, Zp("3,1")), 2, cb.basis);
        EXPECT_TRUE(is_mixed_shift_closed(prod.words(), T03, Z4.one()));
    }
}

// C_alpha x C_beta is skew cyclic iff C_alpha is cyclic and C_beta is skew cyclic.
TEST(SeparableProduct, EquivalenceExhaustive) {
    std::set<std::vector<ZqVector>> seen_a;
    std::vector<GenMatrix> alphas;
    for (auto& v : all_zq_words(2)) {
        auto m = howell_form(make_matrix(4, 2, {v}));
        if (seen_a.insert(m.rows).second) alphas.push_back(m);
    }
    std::set<std::vector<ZqVector>> seen_b;
    std::vector<GenMatrix> betas;
    for (auto x : Z4.elements())
        for (auto y : {RingElem{0, 0}, RingElem{1, 0}, RingElem{0, 1}, RingElem{1, 1}, RingElem{2, 1}}) {
            auto m = r_module_span(Z4, 2, {{x, y}});
            if (seen_b.insert(m.rows).second) betas.push_back(m);
        }
    std::size_t pairs = 0;
    for (auto& a : alphas) {
        auto aw = zq_words(a);
        bool a_cyclic = true;
        for (auto& c : aw) a_cyclic &= aw.contains({c[1], c[0]});
        for (auto& b : betas) {
            auto bw = materialize_r(b, kDefaultCodewordCap);
            bool b_closed = is_shift_closed(bw, T03, Z4.one());
            auto prod = separable_product(T03, Z4.one(), 2, a, 2, b);
            ASSERT_EQ(is_mixed_shift_closed(prod.words(), T03, Z4.one()), a_cyclic && b_closed);
            ++pairs;
        }
    }
    EXPECT_GE(pairs, 50u);
}

TEST(BruteDualMixed, Examples) {
    auto zero = MixedCode{1, 1, T03, Z4.one(), make_matrix(4, 3, {}), std::nullopt};
    EXPECT_EQ(brute_dual_mixed(zero).size(), 64u);
    auto ambient = build_mixed_code(make_mixed_spec(1, 1, Z4.one(), Zp("1"), SkewPoly::one(T03)));
    auto dual = brute_dual_mixed(ambient);
    EXPECT_TRUE(dual.contains(MixedWord{{0}, {{0, 0}}}));
    for (auto& w : dual)
        for (auto& c : ambient.words()) EXPECT_EQ(mixed_inner_product(Z4, c, w), RingElem{});
}

// Separable codes at alpha = beta = 2: the dual is the product of the component duals
// and is closed under the inverse-constacyclic mixed shift.
TEST(BruteDualMixed, SeparableDualIsProduct) {
    for (auto lam : {RingElem{1, 0}, RingElem{3, 0}})
        for (auto ga : {"1", "3,1", "1,1", "3,0,1"})
            for (std::size_t deg = 1; deg <= 2; ++deg)
                for (auto& p : right_divisor_pairs(2, lam, deg, T03)) {
                    auto ca = build_cyclic_zq(Z4, 2, Zp(ga));
                    auto cb = build_rcode(make_rcode_spec(2, lam, p.g));
                    auto prod = separable_product(T03, lam, 2, ca, 2, cb.basis);
                    auto dual = brute_dual_mixed(prod);
                    auto da = zq_dual(zq_words(ca), 2);
                    auto db = brute_dual_r(cb);
                    EXPECT_EQ(dual.size(), da.size() * db.size());
                    for (auto& w : dual) {
                        EXPECT_TRUE(da.contains(w.zq));
                        EXPECT_TRUE(db.contains(w.r));
                    }
                    EXPECT_TRUE(is_mixed_shift_closed(dual, T03, *Z4.inverse(lam)));
                }
}

TEST(DoubleCode, Examples) {
    DoubleSpec zero{2, 2, 2, 2, Z4.one(), T03, Zp("3,0,1"), SkewPoly::binomial(T03, 2, Z4.one()), Zp("3,0,1"),
                    SkewPoly::binomial(T03, 2, Z4.one())};
    auto zw = build_double_code(zero);
    EXPECT_EQ(zw.size(), 1u);
    EXPECT_TRUE(is_double_shift_closed(zw, zero));

    DoubleSpec diag{2, 2, 2, 2, Z4.one(), T03, Zp("3,1"), Rp("1,1"), Zp("3,1"), Rp("1,1")};
    auto dw = build_double_code(diag);
    EXPECT_TRUE(is_double_shift_closed(dw, diag));
    for (auto& w : dw) EXPECT_EQ(w.first, w.second);

    DoubleWord lone{{{1, 0}, {{0, 0}, {0, 0}}}, {{0, 0}, {{0, 0}, {0, 0}}}};
    EXPECT_FALSE(is_double_shift_closed(WordSet<DoubleWord>({lone}), diag));
}

TEST(DoubleCode, MixedLengthsClosed) {
    DoubleSpec spec{1, 2, 3, 2, Z4.one(), T03, Zp("1"), Rp("1,1"), Zp("3,1"), Rp("1")};
    auto w = build_double_code(spec);
    EXPECT_TRUE(is_double_shift_closed(w, spec));
    EXPECT_GT(w.size(), 1u);
}
