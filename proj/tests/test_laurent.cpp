#include <gtest/gtest.h>

#include <random>

#include "hammock/laurent.hpp"

using namespace hammock;

namespace {

LaurentPoly Y(int i, Int p, Int e = 1) { return LaurentPoly::var(Var::Y(i, p), e); }

LaurentPoly random_poly(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2), n(0, 4);
    LaurentPoly f;
    for (int k = n(rng); k > 0; --k) {
        Monomial m = Monomial::of(Var::Y(0, 0), e(rng)) * Monomial::of(Var::Y(1, 1), e(rng)) * Monomial::of(Var::F(0), e(rng));
        f += LaurentPoly(m, c(rng));
    }
    return f;
}

}  // namespace

TEST(Monomial, Normalized) {
    Monomial m = Monomial::of(Var::Y(0, 1), 2) * Monomial::of(Var::Y(0, 1), -2);
    EXPECT_TRUE(m.is_one());
    Monomial a = Monomial::of(Var::Y(1, 0)) * Monomial::of(Var::Y(0, 0));
    Monomial b = Monomial::of(Var::Y(0, 0)) * Monomial::of(Var::Y(1, 0));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a * a.inverse(), Monomial());
    EXPECT_EQ(a.pow(3).exponent(Var::Y(1, 0)), 3);
    EXPECT_EQ(Monomial::of(Var::Y(0, 0), 0), Monomial());
}

TEST(Laurent, RingAxioms) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a + (-a), LaurentPoly());
        EXPECT_EQ(a * LaurentPoly(1), a);
    }
}

TEST(Laurent, ExactDivision) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        EXPECT_EQ((a * b).divide_exact(b), a);
    }
    LaurentPoly f = LaurentPoly(1) + Y(0, 0);
    EXPECT_EQ((f * f).divide_exact(f), f);
    EXPECT_THROW((LaurentPoly(1) + Y(0, 0) * Y(0, 0)).divide_exact(f), LaurentError);
    EXPECT_EQ(Y(0, 0, 3).divide_exact(Y(0, 0, 5)), Y(0, 0, -2));
}

TEST(Laurent, Substitute) {
    LaurentPoly f = Y(0, 0) + Y(0, 0, -1) * Y(1, 0);
    LaurentPoly g = f.substitute([](const Var &v) -> std::optional<LaurentPoly> {
        if (v == Var::Y(1, 0)) return LaurentPoly(1) + Y(0, 0);
        return std::nullopt;
    });
    EXPECT_EQ(g, Y(0, 0) + Y(0, 0, -1) + LaurentPoly(1));
    LaurentPoly num = LaurentPoly::var(Var::F(0)) * 3 + LaurentPoly(2);
    auto at = [](Int x) {
        return [x](const Var &v) -> std::optional<LaurentPoly> {
            if (v.kind == Var::Kind::F) return LaurentPoly(x);
            return std::nullopt;
        };
    };
    EXPECT_EQ(num.substitute(at(-1)), LaurentPoly(-1));
    EXPECT_EQ(num.substitute(at(1)), LaurentPoly(5));
    // a non-unit image for a negative power cannot be substituted
    EXPECT_THROW(Y(1, 0, -1).substitute([](const Var &) -> std::optional<LaurentPoly> { return LaurentPoly(1) + Y(0, 0); }),
                 LaurentError);
}

TEST(Laurent, PowerAndTerm) {
    LaurentPoly f = LaurentPoly(1) + Y(0, 0);
    LaurentPoly f3 = f.pow(3);
    EXPECT_EQ(f3.size(), 4u);
    EXPECT_EQ(f3.coeff(Monomial::of(Var::Y(0, 0), 2)), 3);
    EXPECT_FALSE(f.as_term());
    auto t = (Y(0, 0) * 4).as_term();
    ASSERT_TRUE(t);
    EXPECT_EQ(t->second, 4);
    EXPECT_EQ(Y(0, 0, -2).pow(-1), Y(0, 0, 2));
}

TEST(Laurent, Printing) {
    EXPECT_EQ(LaurentPoly().str(), "0");
    EXPECT_EQ(LaurentPoly(1).str(), "1");
    LaurentPoly f = Y(0, 0) * Y(1, 2, -1);
    EXPECT_NE(f.str().find("^-1"), std::string::npos);
}
