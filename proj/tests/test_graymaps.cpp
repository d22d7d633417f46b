#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zqr/graymaps.hpp"
#include "zqr/rcodes.hpp"

using namespace zqr;

namespace {

const Ring Z4(4);
const Automorphism T03 = make_automorphism(Z4, 0, 3);

std::vector<RWord> all_r_words(std::size_t n) {
    std::vector<RWord> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<RWord> next;
        for (auto& w : out)
            for (auto x : Z4.elements()) {
                auto v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

// Smallest skew constacyclic code containing w: R-span of its shift orbit.
WordSet<RWord> generated_code(const RWord& w, RingElem lam) {
    std::vector<RWord> rows;
    RWord cur = w;
    for (std::size_t i = 0; i < 2 * w.size() * T03.order(); ++i) {
        rows.push_back(cur);
        cur = consta_shift(T03, lam, cur);
    }
    return materialize_r(r_module_span(Z4, w.size(), rows), kDefaultCodewordCap);
}

}  // namespace

TEST(GrayPsi, Examples) {
    EXPECT_EQ(gray_psi(Z4, RWord{{1, 1}, {2, 0}}), (ZqVector{1, 0, 2, 2}));
    EXPECT_EQ(gray_psi(Z4, RWord(3)), ZqVector(6, 0));
    EXPECT_EQ(gray_psi(Z4, RWord{{2, 3}}), (ZqVector{3, 1}));
}

TEST(GrayPhi, Examples) {
    EXPECT_EQ(gray_phi(Z4, {{2}, {{1, 3}}}, GrayVariant::Double), (ZqVector{2, 3, 0}));
    EXPECT_EQ(gray_phi(Z4, {{}, {{2, 1}}}, GrayVariant::Triple), (ZqVector{1, 3, 1}));
    EXPECT_EQ(gray_phi(Z4, {{}, {{1, 0}}}, GrayVariant::Triple), (ZqVector{0, 2, 1}));
    EXPECT_THROW(gray_phi(Ring(8), {{}, {{1, 0}}}, GrayVariant::Triple), Error);
    EXPECT_THROW(parse_gray_variant("quad"), Error);
}

TEST(GrayMaps, InjectiveAndLinearExhaustive) {
    for (auto variant : {GrayVariant::Double, GrayVariant::Triple}) {
        std::set<ZqVector> seen;
        auto words = all_r_words(2);
        for (auto& w : words) seen.insert(gray_r(Z4, w, variant));
        EXPECT_EQ(seen.size(), words.size());
        for (auto& v : words)
            for (auto& w : words) {
                RWord s{Z4.add(v[0], w[0]), Z4.add(v[1], w[1])};
                auto gv = gray_r(Z4, v, variant), gw = gray_r(Z4, w, variant), gs = gray_r(Z4, s, variant);
                for (std::size_t i = 0; i < gs.size(); ++i) ASSERT_EQ(gs[i], Z4.zadd(gv[i], gw[i]));
            }
    }
}

TEST(GrayPhi, InjectiveAndLinearRandom) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Zq> d(0, 3);
    for (auto variant : {GrayVariant::Double, GrayVariant::Triple})
        for (int t = 0; t < 2000; ++t) {
            MixedWord v{{d(rng), d(rng), d(rng)}, {{d(rng), d(rng)}, {d(rng), d(rng)}}};
            MixedWord w{{d(rng), d(rng), d(rng)}, {{d(rng), d(rng)}, {d(rng), d(rng)}}};
            MixedWord s = v;
            for (std::size_t i = 0; i < 3; ++i) s.zq[i] = Z4.zadd(v.zq[i], w.zq[i]);
            for (std::size_t i = 0; i < 2; ++i) s.r[i] = Z4.add(v.r[i], w.r[i]);
            auto gv = gray_phi(Z4, v, variant), gw = gray_phi(Z4, w, variant), gs = gray_phi(Z4, s, variant);
            EXPECT_EQ(gs.size(), gray_length(3, 2, variant));
            for (std::size_t i = 0; i < gs.size(); ++i) ASSERT_EQ(gs[i], Z4.zadd(gv[i], gw[i]));
            EXPECT_EQ(gv == gw, v == w);
        }
}

TEST(LeeWeight, Examples) {
    EXPECT_EQ(lee_weight(4, ZqVector{1, 0, 2, 2}), 5u);
    EXPECT_EQ(lee_weight(4, ZqVector(5, 0)), 0u);
    EXPECT_EQ(lee_weight(4, ZqVector{3, 3}), 2u);
    EXPECT_EQ(lee_weight(9, ZqVector{4, 5, 8}), 9u);
    EXPECT_EQ(lee_distance(Z4, ZqVector{1, 2}, ZqVector{3, 2}), 2u);
    EXPECT_THROW(lee_distance(Z4, ZqVector{1}, ZqVector{1, 2}), Error);
}

TEST(QtClosed, Examples) {
    std::vector<ZqVector> full;
    for (Zq a = 0; a < 4; ++a)
        for (Zq b = 0; b < 4; ++b) full.push_back({a, b});
    EXPECT_TRUE(qt_closed(Z4, WordSet<ZqVector>(full), 3, 1));
    EXPECT_FALSE(qt_closed(Z4, WordSet<ZqVector>({{0, 0}, {1, 2}}), 1, 1));
    EXPECT_THROW(qt_shift(Z4, ZqVector{1, 2, 3}, 1, 2), Error);

    std::vector<Zq> ones{1, 1};
    EXPECT_TRUE(generalized_qt_closed(Z4, WordSet<ZqVector>(full), ones));
    EXPECT_TRUE(generalized_qt_closed(Z4, WordSet<ZqVector>({{0, 0, 0, 0}}), ones));
}

TEST(QtShift, GeneralizedWithUnitLambdasIsPermutationScaled) {
    ZqVector c{1, 2, 3, 0, 1, 2};
    std::vector<Zq> l{3, 1};
    EXPECT_EQ(generalized_qt_shift(Z4, c, l), (ZqVector{2, 1, 1, 2, 3, 0}));
    EXPECT_EQ(qt_shift(Z4, c, 3, 2), (ZqVector{3, 2, 1, 2, 3, 0}));
}

// Psi composed with the skew shift equals the block map composed with Psi.
TEST(PsiBlockMap, IntertwinesShift) {
    for (auto& t : all_automorphisms(Z4))
        for (auto lam : Z4.units())
            for (auto& w : all_r_words(2))
                ASSERT_EQ(gray_psi(Z4, consta_shift(t, lam, w)), psi_block_map(t, lam, gray_psi(Z4, w)));
}

// Psi-images of every cyclically generated beta = 2 skew cyclic code are closed
// under the block map; 16^2 generators cover all principal codes.
TEST(PsiBlockMap, ImagesOfSkewCyclicCodesClosed) {
    for (auto lam : {RingElem{1, 0}, RingElem{3, 0}}) {
        std::set<std::vector<RWord>> codes;
        for (auto& w : all_r_words(2)) {
            auto code = generated_code(w, lam);
            if (!codes.insert(code.words()).second) continue;
            std::vector<ZqVector> image;
            for (auto& c : code) image.push_back(gray_psi(Z4, c));
            WordSet<ZqVector> img(std::move(image));
            for (auto& v : img) ASSERT_TRUE(img.contains(psi_block_map(T03, lam, v)));
        }
        EXPECT_GT(codes.size(), 5u);
    }
}
