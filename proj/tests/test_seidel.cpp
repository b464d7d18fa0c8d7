#include <qhgamma/seidel.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace qhgamma;

TEST_CASE("Seidel elements of CP^n reduce to single monomials") {
    // m = 3 on CP^2: 3 is a multiple of n+1 = 3, so the element is the unit
    auto s = seidel_element(LoopClass::cpn(2, 3));
    CHECK(is_basis_monomial(s, 0));
    // m = 1: A (x) q t^{1/3}
    auto s1 = seidel_element(LoopClass::cpn(2, 1));
    REQUIRE(!s1.coord(1).is_zero());
    CHECK(*s1.coord(1).valuation() == Rational(1, 3));
    CHECK(*s1.coord(1).leading()->q_exp == 1);
    // negative exponents reduce with the mathematical mod
    auto sm1 = seidel_element(LoopClass::cpn(2, -1));
    CHECK(*val(sm1) == Rational(2, 3));
}

TEST_CASE("Seidel element of the even family at mu = 2") {
    Rational mu(2);
    auto pres = AlgebraPresentation::make_even_hirzebruch(mu, Rational(-40));
    auto s = seidel_element_in(pres, LoopClass::even_hirzebruch(mu, 1));
    // (u + v) t^{1/2 - 1/12}
    QuantumClass want =
        (pres->basis_element(1) + pres->basis_element(2)).scaled(pres->mono(1, Rational(5, 12), 0));
    CHECK(s == want);
    CHECK(epsilon_even(mu) == Rational(1, 12));
    // the printed inverse times the element is exactly the unit
    auto sinv = seidel_element_in(pres, LoopClass::even_hirzebruch(mu, -1));
    CHECK(mul(s, sinv) == pres->unit());
}

TEST_CASE("Seidel element of the odd family rides on u^{-1}") {
    Rational mu(1, 2);
    Rational eps = epsilon_odd(mu);
    CHECK(eps == Rational(13, 24));  // (3/4 + 3/2 + 1) / 6
    auto pres = AlgebraPresentation::make_odd_hirzebruch(mu, Rational(-40));
    auto s = seidel_element_in(pres, LoopClass::odd_hirzebruch(mu, 1));
    QuantumClass want = pres->basis_element(3).scaled(
        pres->mono(1, Rational(1) - eps, 1));  // u0 t^{mu+1} t^{-eps}
    CHECK(s == want);
}

TEST_CASE("gamma on the even family: odd powers are detected") {
    Rational mu(2);
    auto g7 = gamma(LoopClass::even_hirzebruch(mu, 7));
    CHECK(g7.value == 1);
    CHECK(g7.lattice_ok);
    CHECK(g7.generic_mu);
    REQUIRE(g7.affine_form);
    CHECK(*g7.affine_form == AffineExponent{1, 0});
    // even powers are dominated by the point-class coordinate of (u +- v)^l,
    // giving the constant 2 (the tabulated parity value 0 is checked, and
    // reported as a counterexample, by the verification registry)
    auto g8 = gamma(LoopClass::even_hirzebruch(mu, 8));
    CHECK(g8.value == 2);
    CHECK(g8.lattice_ok);
}

TEST_CASE("gamma on the monotone blow-up") {
    Rational mu(1, 2);
    // 2 from p = 4 on, except the isolated dip at p = 6
    for (long p : {4L, 5L, 7L, -7L, 9L, 12L}) {
        auto g = gamma(LoopClass::odd_hirzebruch(mu, p));
        CHECK(g.value == 2);
        CHECK(g.lattice_ok);
    }
    // small exponents sit below the closed-form thresholds and have their own
    // exact values: nu(u^{-1}) + nu(u) = mu + 1, etc. All are nonzero.
    CHECK(gamma(LoopClass::odd_hirzebruch(mu, 1)).value == Rational(3, 2));
    CHECK(gamma(LoopClass::odd_hirzebruch(mu, 2)).value == 1);
    CHECK(gamma(LoopClass::odd_hirzebruch(mu, 3)).value == Rational(3, 2));
    CHECK(gamma(LoopClass::odd_hirzebruch(mu, 6)).value == Rational(3, 2));
    auto g0 = gamma(LoopClass::odd_hirzebruch(mu, 0));
    CHECK(g0.value == 0);
    CHECK(g0.generic_mu);
}

TEST_CASE("gamma of the trivial class is 0") {
    CHECK(gamma(LoopClass::cpn(3, 0)).value == 0);
    CHECK(gamma(LoopClass::even_hirzebruch(Rational(3, 2), 0)).value == 0);
}

TEST_CASE("the even family refuses mu <= 1") {
    CHECK_THROWS_AS(gamma(LoopClass::even_hirzebruch(Rational(1, 2), 1)), UnsupportedRegimeError);
    CHECK_THROWS_AS(seidel_element(LoopClass::even_hirzebruch(Rational(1), 2)),
                    UnsupportedRegimeError);
}

TEST_CASE("gamma_closed_form_odd evaluates the published formulas") {
    CHECK(gamma_closed_form_odd(Rational(1, 3), 7) == Rational(7, 3));   // -2mu + 3
    CHECK(gamma_closed_form_odd(Rational(2), 13) == 3);                  // mu + 1
    CHECK(gamma_closed_form_odd(Rational(3, 4), 14) == Rational(3, 2));  // -2mu + 3
    CHECK_THROWS_AS(gamma_closed_form_odd(Rational(1, 3), 6), OutOfRangeError);
    CHECK_THROWS_AS(gamma_closed_form_odd(Rational(2), 11), OutOfRangeError);
    CHECK_THROWS_AS(gamma_closed_form_odd(Rational(0), 20), InvalidParameterError);
}

TEST_CASE("valuation_closed_form_odd evaluates the three-regime table") {
    CHECK(valuation_closed_form_odd(Rational(2), 5, -1) == 8);                 // 3mu + 2
    CHECK(valuation_closed_form_odd(Rational(3, 4), 12, -1) == Rational(17, 2));  // 6mu + 4
    CHECK(valuation_closed_form_odd(Rational(1, 3), 5, +1) == -1);             // -3mu
    CHECK_THROWS_AS(valuation_closed_form_odd(Rational(1, 3), 2, +1), OutOfRangeError);
    CHECK_THROWS_AS(valuation_closed_form_odd(Rational(3, 4), 6, -1), OutOfRangeError);
    CHECK_THROWS_AS(valuation_closed_form_odd(Rational(1), 5, 2), InvalidParameterError);
}

TEST_CASE("gamma agrees with the closed forms above the thresholds") {
    for (const Rational& mu : {Rational(1, 4), Rational(1, 2)}) {
        auto res = gamma_range(LoopClass::odd_hirzebruch(mu, 0), 7, 30);
        for (long p = 7; p <= 30; ++p)
            CHECK(res[static_cast<std::size_t>(p - 7)].value == gamma_closed_form_odd(mu, p));
    }
    for (const Rational& mu : {Rational(3, 4), Rational(2)}) {
        auto res = gamma_range(LoopClass::odd_hirzebruch(mu, 0), 12, 30);
        for (long p = 12; p <= 30; ++p)
            CHECK(res[static_cast<std::size_t>(p - 12)].value == gamma_closed_form_odd(mu, p));
    }
}

TEST_CASE("batched gamma equals one-shot gamma") {
    LoopClass fam = LoopClass::odd_hirzebruch(Rational(3, 5), 0);
    auto batch = gamma_range(fam, -15, 15);
    for (long p : {-15L, -7L, -1L, 0L, 1L, 7L, 13L, 15L}) {
        LoopClass c = fam;
        c.exponent = p;
        auto one = gamma(c, batch.front().window);
        CHECK(one.value == batch[static_cast<std::size_t>(p + 15)].value);
    }
}

TEST_CASE("walls are flagged non-generic and match both adjacent forms") {
    auto res = gamma_range(LoopClass::odd_hirzebruch(Rational(1, 2), 0), 12, 16);
    for (long p = 12; p <= 16; ++p) {
        const auto& g = res[static_cast<std::size_t>(p - 12)];
        CHECK(g.value == gamma_closed_form_odd(Rational(1, 2), p));  // small form valid at the wall
        CHECK_FALSE(g.generic_mu);
    }
    auto res1 = gamma_range(LoopClass::odd_hirzebruch(Rational(1), 0), 12, 16);
    for (long p = 12; p <= 16; ++p) {
        const auto& g = res1[static_cast<std::size_t>(p - 12)];
        CHECK(g.value == gamma_closed_form_odd(Rational(1), p));
        // at mu = 1 the p = 4q column is shared between the two regimes, so
        // only the other residues are forced to tie
        if (imod(p, 4) != 0) CHECK_FALSE(g.generic_mu);
    }
}

TEST_CASE("gamma values carry their affine form at generic mu") {
    auto g = gamma(LoopClass::odd_hirzebruch(Rational(2), 13));
    REQUIRE(g.affine_form);
    CHECK(*g.affine_form == AffineExponent{1, 1});  // mu + 1
    auto h = gamma(LoopClass::odd_hirzebruch(Rational(1, 3), 13));
    REQUIRE(h.affine_form);
    CHECK(*h.affine_form == AffineExponent{5, -6});  // -6mu + 5
}

TEST_CASE("lemma verifier: negative quadruple powers, base case q = 3") {
    for (const Rational& mu : {Rational(3, 4), Rational(2)}) {
        auto rep = verify_lemma_leading_terms(LemmaFamily::NegQuadruple, mu, 3);
        CHECK(rep.pass);
        REQUIRE(rep.checks.size() == 4);
        CHECK(rep.checks[0].got_coeff == 3);
        CHECK(rep.checks[1].got_coeff == 3);
        CHECK(rep.checks[2].got_coeff == 1);
        CHECK(rep.checks[3].got_coeff == 1);
    }
    CHECK_THROWS_AS(verify_lemma_leading_terms(LemmaFamily::NegQuadruple, Rational(3, 4), 2),
                    OutOfRangeError);
    CHECK_THROWS_AS(verify_lemma_leading_terms(LemmaFamily::NegQuadruple, Rational(1, 3), 3),
                    InvalidParameterError);
}

TEST_CASE("lemma verifier: positive quadruple powers, base case q = 2") {
    for (const Rational& mu : {Rational(3, 4), Rational(2)}) {
        auto rep = verify_lemma_leading_terms(LemmaFamily::PosQuadruple, mu, 2);
        CHECK(rep.pass);
        CHECK(rep.checks[0].got_coeff == -2);
        CHECK(rep.checks[1].got_coeff == -1);
        CHECK(rep.checks[2].got_coeff == 3);
        CHECK(rep.checks[3].got_coeff == 1);
    }
}

TEST_CASE("lemma verifier: small-mu families carry printed coefficients") {
    auto rep = verify_lemma_leading_terms(LemmaFamily::NegTripleSmallMu, Rational(1, 3), 3);
    CHECK(rep.pass);
    // q = 4: P1's leading coefficient is (q-1)(q-2)/2 = 3
    auto rep4 = verify_lemma_leading_terms(LemmaFamily::NegTripleSmallMu, Rational(1, 3), 4);
    CHECK(rep4.pass);
    CHECK(rep4.checks[1].got_coeff == 3);
    auto pos = verify_lemma_leading_terms(LemmaFamily::PosSmallMu, Rational(1, 3), 5);
    CHECK(pos.pass);
    CHECK(pos.checks[0].got_coeff == 1);   // (-1)^{p+1} at p = 5
    CHECK(pos.checks[2].got_coeff == -1);  // (-1)^p
}

TEST_CASE("gamma_circle_action is the moment-map spread") {
    CHECK(gamma_circle_action(Rational(1, 2), Rational(-1, 2)) == 1);
    CHECK(gamma_circle_action(Rational(0), Rational(0)) == 0);
    CHECK_THROWS_AS(gamma_circle_action(Rational(0), Rational(1)), InvalidInputError);
    // cross-check against the algebra route: Gamma(Lambda) = nu(u^{-1}) + nu(u)
    Rational mu(1, 3);
    auto pres = AlgebraPresentation::make_odd_hirzebruch(mu, Rational(-40));
    auto lhs = gamma(LoopClass::odd_hirzebruch(mu, 1)).value;
    Rational rhs = *val(power(pres->basis_element(1), -1)) + *val(power(pres->basis_element(1), 1));
    CHECK(lhs == rhs);
    CHECK(lhs == mu + 1);
}

TEST_CASE("gamma is symmetric, nonnegative, and lattice-valued") {
    for (int n = 1; n <= 4; ++n) {
        auto res = gamma_range(LoopClass::cpn(n, 0), -12, 12);
        for (long p = -12; p <= 12; ++p) {
            const auto& g = res[static_cast<std::size_t>(p + 12)];
            CHECK(g.value >= 0);
            CHECK(g.value == res[static_cast<std::size_t>(12 - p)].value);
            CHECK(g.lattice_ok);
            CHECK(g.value == (imod(p, n + 1) == 0 ? 0 : 1));
        }
    }
}
