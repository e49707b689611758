#include "gen.hpp"
#include "hindlab/certificate.hpp"
#include "hindlab/grid.hpp"
#include "hindlab/interval_set.hpp"
#include "hindlab/qvec.hpp"
#include "hindlab/rational.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

using namespace hindlab;

TEST(Rational, ParsesAndReduces) {
    EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
    EXPECT_EQ(parse_rat(" -3/5 "), Rat(-3, 5));
    EXPECT_EQ(parse_rat("3/-6"), Rat(-1, 2));
    EXPECT_EQ(parse_rat("+7"), Rat(7));
    EXPECT_EQ(to_string(Rat(-6, 4)), "-3/2");
    EXPECT_EQ(to_string(Rat(8, 4)), "2");
    EXPECT_EQ(to_string(Rat(0)), "0");
}

TEST(Rational, RejectsMalformedInput) {
    EXPECT_THROW(parse_rat(""), ParseError);
    EXPECT_THROW(parse_rat("1/0"), ParseError);
    EXPECT_THROW(parse_rat("1.5"), ParseError);
    EXPECT_THROW(parse_rat("a/3"), ParseError);
    EXPECT_THROW(parse_rat("-"), ParseError);
}

TEST(Rational, BigValuesStayExact) {
    const Rat big = parse_rat("123456789012345678901234567890/7");
    EXPECT_EQ(big * Rat(7), parse_rat("123456789012345678901234567890"));
    EXPECT_EQ(to_string(pow2(-100)), "1/1267650600228229401496703205376");
}

TEST(Rational, DyadicExponentBrackets) {
    EXPECT_EQ(dyadic_exponent(Rat(1)), 0);
    EXPECT_EQ(dyadic_exponent(Rat(3, 4)), -1);
    EXPECT_EQ(dyadic_exponent(Rat(17, 5)), 1);
    EXPECT_EQ(dyadic_exponent(Rat(1, 3)), -2);
    EXPECT_EQ(dyadic_exponent(Rat(1024)), 10);
    EXPECT_THROW(dyadic_exponent(Rat(0)), DomainError);
    EXPECT_THROW(dyadic_exponent(Rat(-1)), DomainError);
}

TEST(RationalProperty, DyadicExponentInvariant) {
    gen::Rng rng(11);
    for (int i = 0; i < 3000; ++i) {
        const Rat r = abs(gen::nonzero_rat(rng, 100000, 5000));
        const long k = dyadic_exponent(r);
        ASSERT_LE(pow2(k), r);
        ASSERT_LT(r, pow2(k + 1));
        ASSERT_EQ(dyadic_exponent(r * 2), k + 1);
    }
}

TEST(RationalProperty, PrintParseRoundTrip) {
    gen::Rng rng(12);
    for (int i = 0; i < 2000; ++i) {
        const Rat r = gen::rat(rng, 1000000, 100000);
        ASSERT_EQ(parse_rat(to_string(r)), r);
    }
}

TEST(QVec, CancellationDropsEntries) {
    QVec v{{0, Rat(1)}, {3, Rat(-2, 3)}};
    v.add_to(3, Rat(2, 3));
    EXPECT_EQ(v.support_size(), 1u);
    EXPECT_EQ(v, QVec::basis(0));
    EXPECT_TRUE((v - v).is_zero());
    EXPECT_TRUE((Rat(0) * v).is_zero());
}

TEST(QVec, SupportCoefficientsAndPattern) {
    const QVec v{{5, Rat(2)}, {1, Rat(1, 2)}, {9, Rat(2)}};
    EXPECT_EQ(supp(v), (std::set<BasisIndex>{1, 5, 9}));
    EXPECT_EQ(coef(v), (std::set<Rat>{Rat(1, 2), Rat(2)}));
    EXPECT_EQ(pattern_of(v), (Pattern{Rat(1, 2), Rat(2), Rat(2)}));
    EXPECT_EQ(inner_product(v, v), Rat(1, 4) + 8);
}

TEST(QVec, TextForm) {
    const QVec v{{0, Rat(-1)}, {2, Rat(3, 4)}};
    EXPECT_EQ(to_string(v), "{0:-1, 2:3/4}");
    EXPECT_EQ(parse_qvec("{ 2 : 3/4 , 0:-1 }"), v);
    EXPECT_EQ(parse_qvec("{}"), QVec{});
    EXPECT_EQ(parse_qvec("{1:2, 1:-2}"), QVec{});
    EXPECT_THROW(parse_qvec("{1:2"), ParseError);
    EXPECT_THROW(parse_qvec("{x:2}"), ParseError);
}

TEST(QVecProperty, VectorSpaceLaws) {
    gen::Rng rng(13);
    for (int i = 0; i < 800; ++i) {
        const QVec u = gen::qvec(rng), v = gen::qvec(rng), w = gen::qvec(rng);
        const Rat a = gen::rat(rng, 9, 5), b = gen::rat(rng, 9, 5);
        ASSERT_EQ(u + v, v + u);
        ASSERT_EQ((u + v) + w, u + (v + w));
        ASSERT_EQ(a * (u + v), a * u + a * v);
        ASSERT_EQ((a + b) * u, a * u + b * u);
        ASSERT_TRUE((u + (-u)).is_zero());
        ASSERT_EQ(parse_qvec(to_string(u)), u);
    }
}

TEST(QVecProperty, InnerProductBilinearSymmetric) {
    gen::Rng rng(14);
    for (int i = 0; i < 800; ++i) {
        const QVec u = gen::qvec(rng), v = gen::qvec(rng), w = gen::qvec(rng);
        const Rat a = gen::rat(rng, 9, 5);
        ASSERT_EQ(inner_product(u, v), inner_product(v, u));
        ASSERT_EQ(inner_product(a * u + w, v), a * inner_product(u, v) + inner_product(w, v));
        ASSERT_GE(inner_product(u, u), 0);
        ASSERT_EQ(inner_product(u, u) == 0, u.is_zero());
    }
}

TEST(QVecProperty, SupportOfSumWithinUnion) {
    gen::Rng rng(15);
    for (int i = 0; i < 800; ++i) {
        const QVec u = gen::qvec(rng), v = gen::qvec(rng);
        auto both = supp(u);
        const auto sv = supp(v);
        both.insert(sv.begin(), sv.end());
        for (auto idx : supp(u + v)) ASSERT_TRUE(both.count(idx));
    }
}

TEST(Grid, RationalGridCountAndOrder) {
    const auto pts = enumerate(RationalGrid{3, 1});
    // q=1: -1,0,1; q=2: -1/2,1/2; q=3: -2/3,-1/3,1/3,2/3
    ASSERT_EQ(pts.size(), 9u);
    EXPECT_EQ(pts.front(), Rat(-1));
    EXPECT_EQ(pts[3], Rat(-1, 2));
    EXPECT_EQ(pts.back(), Rat(2, 3));
    std::set<Rat> distinct(pts.begin(), pts.end());
    EXPECT_EQ(distinct.size(), pts.size());
}

TEST(Grid, VectorGridCount) {
    EXPECT_EQ(enumerate(VectorGrid{2, 2}).size(), 25u);
    EXPECT_EQ(enumerate(VectorGrid{3, 1}).size(), 27u);
    EXPECT_TRUE(enumerate(VectorGrid{3, 1}).front() == (QVec{{0, Rat(-1)}, {1, Rat(-1)}, {2, Rat(-1)}}));
    EXPECT_THROW(enumerate(VectorGrid{0, 1}), PreconditionError);
}

TEST(IntervalSet, MembershipAndExclusion) {
    const auto s = parse_interval_set("(0,1) ∪ [2,3) ∖ {1/2}");
    EXPECT_FALSE(s.contains(0));
    EXPECT_TRUE(s.contains(Rat(1, 3)));
    EXPECT_FALSE(s.contains(Rat(1, 2)));
    EXPECT_FALSE(s.contains(1));
    EXPECT_TRUE(s.contains(2));
    EXPECT_FALSE(s.contains(3));
    EXPECT_EQ(to_string(s), "(0,1) ∪ [2,3) ∖ {1/2}");
}

TEST(IntervalSet, AsciiSpellingsAndMerging) {
    const auto s = parse_interval_set("[1/2,1] U (0,1/2) \\ {3/4}");
    EXPECT_EQ(to_string(s), "(0,1] ∖ {3/4}");
    EXPECT_EQ(parse_interval_set(to_string(s)), s);
}

TEST(IntervalSet, Rejections) {
    EXPECT_THROW(parse_interval_set("(1,0)"), ParseError);
    EXPECT_THROW(parse_interval_set("(0,1) ∖ {2}"), ParseError);
    EXPECT_THROW(parse_interval_set("(0,1"), ParseError);
}

TEST(IntervalSetProperty, TranslationCommutesWithMembership) {
    gen::Rng rng(16);
    const auto s = parse_interval_set("(-1,1/3] ∪ [2,5/2) ∖ {0,9/4}");
    for (int i = 0; i < 2000; ++i) {
        const Rat x = gen::rat(rng, 40, 12), t = gen::rat(rng, 40, 12);
        ASSERT_EQ(s.translated(t).contains(x + t), s.contains(x));
    }
}

TEST(Certificate, JsonRoundTripAndAtomicWrite) {
    Certificate c;
    c.claim = "demo";
    c.parameters = {{"k", 2}};
    c.verdict = Verdict::counterexample;
    c.payload = {{"color", color_to_json(PairColor{-3, -1})}};
    c.search_space = 42;
    c.elapsed_ms = 7;
    const auto path = std::filesystem::temp_directory_path() / "hindlab_cert_roundtrip.json";
    write_certificate(path, c);
    EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::ifstream in(path);
    const auto back = certificate_from_json(Json::parse(in));
    EXPECT_EQ(to_text(back), to_text(c));
    EXPECT_TRUE(color_from_json(back.payload.at("color")) == ColorValue(PairColor{-3, -1}));
    std::filesystem::remove(path);
}

TEST(Certificate, UntimedTextIgnoresElapsed) {
    Certificate a, b;
    a.claim = b.claim = "x";
    a.elapsed_ms = 1;
    b.elapsed_ms = 99;
    EXPECT_NE(to_text(a), to_text(b));
    EXPECT_EQ(to_text_untimed(a), to_text_untimed(b));
}
