#include <gtest/gtest.h>

#include <set>

#include "zqr/rcodes.hpp"

using namespace zqr;

namespace {

const Ring Z4(4);
const Automorphism T03 = make_automorphism(Z4, 0, 3);

// {r * g mod x^beta - lam : deg r < beta}, enumerated directly.
std::set<RWord> multiples_oracle(const SkewPoly& g, std::size_t beta, RingElem lam) {
    std::set<RWord> out;
    const auto elems = Z4.elements();
    const std::uint64_t total = checked_pow(elems.size(), beta);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        RWord c(beta);
        std::uint64_t rest = idx;
        for (auto& x : c) {
            x = elems[rest % elems.size()];
            rest /= elems.size();
        }
        out.insert(reduce_mod_binomial(SkewPoly(g.theta(), c) * g, beta, lam));
    }
    return out;
}

}  // namespace

TEST(ConstaShift, Examples) {
    EXPECT_EQ(consta_shift(T03, Z4.one(), RWord{{1, 0}, {0, 1}}), (RWord{{0, 3}, {1, 0}}));
    auto id = make_automorphism(Z4, 0, 1);
    EXPECT_EQ(consta_shift(id, Z4.one(), RWord{{1, 2}, {3, 0}, {0, 1}}), (RWord{{0, 1}, {1, 2}, {3, 0}}));
    EXPECT_EQ(consta_shift(T03, {3, 0}, RWord{{1, 1}, {2, 0}}), (RWord{{2, 0}, {1, 3}}));
}

TEST(RCodeSpec, Validation) {
    EXPECT_THROW(make_rcode_spec(2, {2, 0}, SkewPoly::one(T03)), Error);
    EXPECT_THROW(make_rcode_spec(3, Z4.one(), parse_r_poly(T03, "2,1")), Error);
    try {
        make_rcode_spec(2, {2, 1}, SkewPoly::one(T03));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidLambda);
    }
}

TEST(BuildRCode, TrivialGenerators) {
    auto zero = build_rcode(make_rcode_spec(2, Z4.one(), SkewPoly::binomial(T03, 2, Z4.one())));
    EXPECT_EQ(zero.size(), 1u);
    auto full = build_rcode(make_rcode_spec(2, Z4.one(), SkewPoly::one(T03)));
    EXPECT_EQ(full.size(), 256u);
}

TEST(BuildRCode, TableRowTenGenerator) {
    auto h = parse_r_poly(T03, "1,1,2+u,1");
    auto g = skew_right_divide(SkewPoly::binomial(T03, 14, Z4.one()), h).quot;
    ASSERT_EQ(*g.degree(), 11u);
    auto code = build_rcode(make_rcode_spec(14, Z4.one(), g));
    EXPECT_EQ(code.size(), 4096u);
    EXPECT_TRUE(code_type(code.basis).is_free());
    // span of x^i g for i < 3 with R coefficients, enumerated directly
    std::set<RWord> oracle;
    const auto elems = Z4.elements();
    for (auto c0 : elems)
        for (auto c1 : elems)
            for (auto c2 : elems)
                oracle.insert(reduce_mod_binomial(SkewPoly(T03, RWord{c0, c1, c2}) * g, 14, Z4.one()));
    EXPECT_EQ(std::vector<RWord>(oracle.begin(), oracle.end()), code.words.words());
}

// Every divisor at small length: code equals the set of left multiples, and is shift closed.
TEST(BuildRCode, MatchesLeftMultiplesOracle) {
    for (const auto& t : all_automorphisms(Z4))
        for (std::size_t beta : {2u, 3u})
            for (auto lam : {RingElem{1, 0}, RingElem{3, 0}, RingElem{1, 2}})
                for (std::size_t deg = 1; deg <= beta; ++deg)
                    for (auto& p : right_divisor_pairs(beta, lam, deg, t)) {
                        auto code = build_rcode(make_rcode_spec(beta, lam, p.g));
                        auto oracle = multiples_oracle(p.g, beta, lam);
                        ASSERT_EQ(std::vector<RWord>(oracle.begin(), oracle.end()), code.words.words());
                        ASSERT_TRUE(is_shift_closed(code.words, t, lam));
                    }
}

TEST(TorsionResidue, Examples) {
    WordSet<RWord> uz4({{{0, 0}}, {{0, 1}}, {{0, 2}}, {{0, 3}}});
    EXPECT_EQ(torsion(uz4).size(), 4u);
    EXPECT_EQ(residue(uz4).words(), (std::vector<ZqVector>{{0}}));
    std::vector<RWord> all;
    for (auto x : Z4.elements()) all.push_back({x});
    WordSet<RWord> full(all);
    EXPECT_EQ(torsion(full).size(), 4u);
    EXPECT_EQ(residue(full).size(), 4u);
    WordSet<RWord> zero({{{0, 0}}});
    EXPECT_EQ(torsion(zero).size(), 1u);
    EXPECT_EQ(residue(zero).size(), 1u);
}

// |C| = |Res C| * |Tor C| for every R-linear code.
TEST(TorsionResidue, SizeIdentity) {
    for (auto& p : right_divisor_pairs(4, Z4.one(), 2, T03)) {
        auto code = build_rcode(make_rcode_spec(4, Z4.one(), p.g));
        EXPECT_EQ(code.size(), residue(code).size() * torsion(code).size());
    }
}

TEST(ShiftClosed, Examples) {
    EXPECT_TRUE(is_shift_closed(WordSet<RWord>({{{0, 0}, {0, 0}}}), T03, Z4.one()));
    EXPECT_FALSE(is_shift_closed(WordSet<RWord>({{{1, 0}, {0, 0}}}), T03, Z4.one()));
}

TEST(BruteDual, Examples) {
    auto zero_basis = make_matrix(4, 2, {});
    EXPECT_EQ(brute_dual_r(Z4, 1, howell_form(zero_basis)).size(), 16u);
    auto full = build_rcode(make_rcode_spec(1, Z4.one(), SkewPoly::one(T03)));
    auto dual = brute_dual_r(full);
    EXPECT_EQ(dual.words(), (std::vector<RWord>{{{0, 0}}}));
}

TEST(BruteDual, InverseConstacyclicClosure) {
    const RingElem lam{3, 0};
    const RingElem inv = *Z4.inverse(lam);
    std::size_t nontrivial = 0;
    for (const auto& t : {T03, make_automorphism(Z4, 2, 1)})
        for (std::size_t beta : {2u, 4u})
            for (std::size_t deg = 1; deg <= beta; ++deg)
                for (auto& p : right_divisor_pairs(beta, lam, deg, t)) {
                    auto code = build_rcode(make_rcode_spec(beta, lam, p.g));
                    auto dual = brute_dual_r(code);
                    EXPECT_TRUE(is_shift_closed(dual, t, inv));
                    nontrivial += deg < beta;
                }
    EXPECT_GT(nontrivial, 0u);
}

TEST(BruteDual, CapExceeded) {
    std::vector<ZqVector> rows;
    for (std::size_t i = 0; i < 16; ++i) {
        ZqVector r(16, 0);
        r[i] = 1;
        rows.push_back(r);
    }
    try {
        brute_dual_r(Z4, 8, howell_form(make_matrix(4, 16, rows)), 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EnumerationCapExceeded);
    }
}

TEST(TextForm, RCodeSpec) {
    auto spec = parse_rcode_spec(Z4, "beta=2 lambda=1 theta=0,3 gen=1,1");
    EXPECT_EQ(spec.beta, 2u);
    EXPECT_EQ(parse_rcode_spec(Z4, format_rcode_spec(spec)).gen, spec.gen);
    EXPECT_THROW(parse_rcode_spec(Z4, "beta=2 theta=0,3 gen=1"), Error);
}
