#include <qhgamma/novikov.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qhgamma;

namespace {

NovikovScalar mono(const Rational& c, const Rational& a, const Rational& b, const Rational& mu,
                   const Rational& floor) {
    return NovikovScalar::monomial(c, AffineExponent{a, b}, 0, mu, floor);
}

struct ScalarGen {
    std::mt19937_64 gen{0x5eed0001};
    Rational mu, floor;
    ScalarGen(Rational m, Rational f) : mu(std::move(m)), floor(std::move(f)) {}
    Rational rat(long lo, long hi, long dmax) {
        long d = std::uniform_int_distribution<long>(1, dmax)(gen);
        long n = std::uniform_int_distribution<long>(lo * d, hi * d)(gen);
        Rational q(n);
        q /= d;
        return q;
    }
    NovikovScalar nonzero(int terms) {
        while (true) {
            NovikovScalar s = NovikovScalar::zero(mu, floor);
            for (int i = 0; i < terms; ++i) {
                Rational c = rat(-5, 5, 3);
                if (c == 0) c = 1;
                s = s + NovikovScalar::monomial(c, AffineExponent{rat(-2, 2, 4), rat(-2, 2, 2)}, 0,
                                                mu, floor);
            }
            if (!s.is_zero()) return s;
        }
    }
};

}  // namespace

TEST_CASE("exp_eval evaluates affine exponents exactly") {
    CHECK(exp_eval(AffineExponent{4, 6}, Rational(1)) == 10);
    CHECK(exp_eval(AffineExponent{0, 0}, Rational(7, 3)) == 0);
    CHECK(exp_eval(AffineExponent{Rational(1, 2), Rational(-1, 6)}, Rational(3, 4)) ==
          Rational(3, 8));
    CHECK_THROWS_AS(exp_eval(AffineExponent{1, 1}, Rational(0)), InvalidParameterError);
}

TEST_CASE("affine exponents are structural values") {
    AffineExponent a{Rational(1, 2), 2}, b{Rational(1, 2), 2}, c{Rational(1, 2), 3};
    CHECK(a == b);
    CHECK(a != c);
    CHECK((a + c) == AffineExponent{1, 5});
    CHECK(to_string(AffineExponent{4, 6}) == "6*mu+4");
    CHECK(to_string(AffineExponent{-3, 0}) == "-3");
    CHECK(to_string(AffineExponent{Rational(1, 2), -1}) == "-mu+1/2");
}

TEST_CASE("scalar_add merges like terms and cancels") {
    Rational mu(1, 2), fl(-40);
    NovikovScalar t1 = mono(1, 1, 0, mu, fl);
    CHECK(scalar_add(t1, t1) == mono(2, 1, 0, mu, fl));
    CHECK(scalar_add(t1, mono(-1, 1, 0, mu, fl)).is_zero());
}

TEST_CASE("scalar_add at a tie degrades the tag and flags the value") {
    Rational mu(1), fl(-40);
    NovikovScalar x = mono(2, 0, 1, mu, fl);  // t^{mu}
    NovikovScalar y = mono(3, 1, 0, mu, fl);  // t^{1}: same key at mu = 1
    NovikovScalar s = scalar_add(x, y);
    REQUIRE(s.terms().size() == 1);
    const auto& term = s.terms().begin()->second;
    CHECK(term.coeff == 5);
    CHECK(!term.tag.has_value());
    CHECK(s.saw_tie());
    // cancellation at the tie is arithmetically correct and still flags
    NovikovScalar z = scalar_add(mono(2, 0, 1, mu, fl), mono(-2, 1, 0, mu, fl));
    CHECK(z.is_zero());
    CHECK(z.saw_tie());
}

TEST_CASE("scalar_add refuses mismatched mu or floor") {
    NovikovScalar a = mono(1, 0, 0, Rational(1, 2), Rational(-10));
    NovikovScalar b = mono(1, 0, 0, Rational(1, 3), Rational(-10));
    NovikovScalar c = mono(1, 0, 0, Rational(1, 2), Rational(-20));
    CHECK_THROWS_AS(scalar_add(a, b), ParameterMismatchError);
    CHECK_THROWS_AS(scalar_add(a, c), ParameterMismatchError);
}

TEST_CASE("scalar_mul convolves with tag addition") {
    Rational mu(3, 4), fl(-40);
    NovikovScalar tmu = mono(1, 0, -1, mu, fl);  // t^{-mu}
    NovikovScalar sq = scalar_mul(tmu, tmu);
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->first == Rational(-3, 2));
    CHECK(*sq.terms().begin()->second.tag == AffineExponent{0, -2});

    NovikovScalar x = ScalarGen(mu, fl).nonzero(3);
    CHECK(scalar_mul(x, NovikovScalar::one(mu, fl)) == x);
}

TEST_CASE("difference of squares at mu = 2") {
    Rational mu(2), fl(-40);
    NovikovScalar one = NovikovScalar::one(mu, fl);
    NovikovScalar g = mono(1, 1, -1, mu, fl);  // t^{1-mu}
    NovikovScalar prod = scalar_mul(one + g, one - g);
    CHECK(prod == one - mono(1, 2, -2, mu, fl));  // 1 - t^{-2}
}

TEST_CASE("scalar_mul drops products below the floor") {
    Rational mu(1, 2), fl(-4);
    NovikovScalar a = mono(1, -3, 0, mu, fl);
    NovikovScalar b = mono(1, -2, 0, mu, fl);
    CHECK(scalar_mul(a, b).is_zero());  // t^{-5} < floor
}

TEST_CASE("valuation picks the maximal exponent; zero is -infinity") {
    Rational mu(3, 4), fl(-60);
    NovikovScalar x = mono(3, 4, 6, mu, fl) + mono(1, 4, 4, mu, fl);
    REQUIRE(x.valuation());
    CHECK(*x.valuation() == Rational(17, 2));
    CHECK(!NovikovScalar::zero(mu, fl).valuation().has_value());
    CHECK(*NovikovScalar::one(mu, fl).valuation() == 0);
}

TEST_CASE("scalar_invert of a monomial is exact") {
    Rational mu(1, 2), fl(-40);
    NovikovScalar inv = scalar_invert(mono(1, 1, 0, mu, fl));
    CHECK(inv == mono(1, -1, 0, mu, fl));
    CHECK_THROWS_AS(scalar_invert(NovikovScalar::zero(mu, fl)), NotInvertibleError);
}

TEST_CASE("scalar_invert expands the geometric series down to the floor") {
    // 1/(1 - t^{1-mu}) at mu = 2: 1 + t^{-1} + t^{-2} + ...
    Rational mu(2), fl(-12);
    NovikovScalar x = NovikovScalar::one(mu, fl) - mono(1, 1, -1, mu, fl);
    NovikovScalar inv = scalar_invert(x);
    CHECK(*inv.valuation() == 0);
    REQUIRE(inv.terms().size() == 13);  // exponents 0, -1, ..., -12
    for (const auto& [k, t] : inv.terms()) CHECK(t.coeff == 1);
    CHECK(inv.terms().rbegin()->first == Rational(-12));
    // multiplying back leaves no residue at or above the floor
    CHECK(scalar_mul(inv, x) == NovikovScalar::one(mu, fl));
}

TEST_CASE("invert round-trips random three-term scalars at mu = 5/7") {
    Rational mu(5, 7), fl(-50);
    ScalarGen gen(mu, fl);
    for (int i = 0; i < 25; ++i) {
        NovikovScalar x = gen.nonzero(3);
        // normalize the leading exponent to 0: below-floor residue is then exact
        x = scalar_mul(x, mono(1, -*x.valuation(), 0, mu, fl));
        NovikovScalar inv = scalar_invert(x);
        CHECK(*inv.valuation() == -*x.valuation());
        CHECK(scalar_mul(inv, x) == NovikovScalar::one(mu, fl));
    }
}

TEST_CASE("valuation is additive under products and submultiplicative under sums") {
    Rational mu(5, 7), fl(-60);
    ScalarGen gen(mu, fl);
    for (int i = 0; i < 50; ++i) {
        NovikovScalar x = gen.nonzero(3), y = gen.nonzero(2);
        CHECK(*scalar_mul(x, y).valuation() == *x.valuation() + *y.valuation());
        NovikovScalar s = scalar_add(x, y);
        Rational mx = std::max(*x.valuation(), *y.valuation());
        if (!s.is_zero()) CHECK(*s.valuation() <= mx);
        if (*x.valuation() != *y.valuation()) CHECK(*s.valuation() == mx);
    }
}

TEST_CASE("floor doubling changes no term at or above the original floor") {
    Rational mu(5, 7), fl(-30);
    ScalarGen gen(mu, fl);
    ScalarGen gen2(mu, fl * 2);
    gen2.gen = gen.gen;  // same draw sequence
    auto normalized = [](NovikovScalar s) {
        return scalar_mul(s, NovikovScalar::monomial(1, AffineExponent{-*s.valuation(), 0}, 0,
                                                     s.mu(), s.floor()));
    };
    for (int i = 0; i < 20; ++i) {
        NovikovScalar x = normalized(gen.nonzero(3)), y = normalized(gen.nonzero(2));
        NovikovScalar x2 = normalized(gen2.nonzero(3)), y2 = normalized(gen2.nonzero(2));
        NovikovScalar lhs = scalar_mul(scalar_invert(x), y);
        NovikovScalar rhs = scalar_mul(scalar_invert(x2), y2);
        CHECK(lhs == rhs.refloored(fl));
    }
}
