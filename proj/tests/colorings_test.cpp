#include "gen.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/sumsets.hpp"

#include <gtest/gtest.h>

using namespace hindlab;

namespace {

// Exponent by repeated doubling/halving, independent of the bit-length shortcut.
long slow_exponent(Rat r) {
    long k = 0;
    while (r >= 2) {
        r /= 2;
        ++k;
    }
    while (r < 1) {
        r *= 2;
        --k;
    }
    return k;
}

}  // namespace

TEST(Dyadic, KnownValues) {
    EXPECT_EQ(dyadic_color(Rat(0)).value, 0);
    EXPECT_EQ(dyadic_color(Rat(1)).value, 0);
    EXPECT_EQ(dyadic_color(Rat(3)).value, 1);
    EXPECT_EQ(dyadic_color(Rat(4)).value, 2);
    EXPECT_EQ(dyadic_color(Rat(-4)).value, -2);
    EXPECT_EQ(dyadic_color(Rat(1, 2)).value, -1);
    EXPECT_EQ(dyadic_color(Rat(-3, 5)).value, 1);
}

TEST(Dyadic, MixedSignTupleIsMonochromatic) {
    const std::vector<Rat> xs{Rat(17, 5), Rat(-3, 5), Rat(14, 5)};
    for (const auto& x : xs) EXPECT_EQ(dyadic_color(x).value, 1);
    EXPECT_EQ(xs[0] + xs[1], xs[2]);
    const auto sig = [](const Rat& r) { return signed_dyadic_color(r); };
    EXPECT_FALSE(is_monochromatic_by(xs, sig).has_value());
}

TEST(DyadicProperty, AgreesWithSlowExponent) {
    gen::Rng rng(21);
    for (int i = 0; i < 3000; ++i) {
        const Rat r = gen::nonzero_rat(rng, 5000, 300);
        const long k = slow_exponent(abs(r));
        ASSERT_EQ(dyadic_color(r).value, r > 0 ? k : -k);
        ASSERT_EQ(signed_dyadic_color(r), (PairColor{k, r.sign()}));
        ASSERT_EQ(dyadic_parity_color(r).value, ((k % 2) + 2) % 2);
    }
}

TEST(DyadicProperty, SameSignEqualColourSumChangesColour) {
    gen::Rng rng(22);
    int applicable = 0;
    for (int i = 0; i < 20000; ++i) {
        const Rat r = gen::nonzero_rat(rng, 60, 8), s = gen::nonzero_rat(rng, 60, 8);
        if (r == s || r.sign() != s.sign() || dyadic_color(r) != dyadic_color(s)) continue;
        ++applicable;
        ASSERT_NE(dyadic_color(r + s), dyadic_color(r)) << to_string(r) << " " << to_string(s);
        ASSERT_NE(dyadic_parity_color(r + s), dyadic_parity_color(r));
    }
    EXPECT_GT(applicable, 100);
}

TEST(SupportParity, Values) {
    EXPECT_EQ(support_parity_color(QVec::basis(3)).value, 0);
    EXPECT_EQ(support_parity_color(QVec{{0, Rat(1)}, {1, Rat(2)}}).value, 1);
    EXPECT_EQ(support_parity_color(QVec{{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}}).value, 1);
    EXPECT_EQ(support_parity_color(QVec{{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}, {7, Rat(1)}}).value, 0);
    EXPECT_THROW(support_parity_color(QVec{}), DomainError);
}

TEST(SelfInner, Values) {
    EXPECT_EQ(self_inner_color(QVec{{0, Rat(1)}, {1, Rat(-1)}}).value, Rat(2));
    EXPECT_EQ(self_inner_color(QVec{{4, Rat(1, 2)}}).value, Rat(1, 4));
}

TEST(Colors, TaggedEquality) {
    EXPECT_FALSE(ColorValue(IntColor{2}) == ColorValue(RatColor{Rat(2)}));
    EXPECT_EQ(to_string(ColorValue(PairColor{-1, -1})), "(-1,-1)");
    EXPECT_EQ(to_string(ColorValue(RatColor{Rat(5, 4)})), "5/4");
}

TEST(ColoringSpec, ParseEvaluatePrint) {
    for (const auto& i : kColorings) {
        const auto spec = parse_coloring_spec(i.id);
        EXPECT_EQ(to_string(spec), i.id);
        EXPECT_EQ(spec.domain(), i.domain);
    }
    EXPECT_THROW(parse_coloring_spec("rainbow"), ParseError);
    EXPECT_THROW(parse_coloring_spec("dyadic(base=3)"), ParseError);
    EXPECT_THROW(evaluate(parse_coloring_spec("dyadic"), QVec::basis(0)), DomainError);
    EXPECT_THROW(evaluate(parse_coloring_spec("self_inner"), Rat(1)), DomainError);
    EXPECT_TRUE(evaluate(parse_coloring_spec("dyadic"), Point(Rat(3))) == ColorValue(IntColor{1}));
}
