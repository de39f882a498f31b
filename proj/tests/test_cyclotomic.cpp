#include "cycloschur/cyclotomic.hpp"
#include "cycloschur/symfunc.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace cycloschur;

TEST(EulerPhi, Examples) {
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(12), 4u);
    EXPECT_EQ(euler_phi(105), 48u);
    EXPECT_THROW(euler_phi(0), std::invalid_argument);
}

TEST(EulerPhi, MatchesGcdCount) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        EXPECT_EQ(euler_phi(n), count) << n;
    }
}

TEST(PrimitiveExponents, Examples) {
    EXPECT_EQ(primitive_exponents(1), std::vector<std::uint64_t>{0});
    EXPECT_EQ(primitive_exponents(6), (std::vector<std::uint64_t>{1, 5}));
    EXPECT_EQ(primitive_exponents(8), (std::vector<std::uint64_t>{1, 3, 5, 7}));
    EXPECT_THROW(primitive_exponents(0), std::invalid_argument);
}

TEST(CyclotomicPoly, SmallCases) {
    EXPECT_EQ(cyclotomic_poly(1), IntPolynomial({-1, 1}));
    EXPECT_EQ(cyclotomic_poly(2), IntPolynomial({1, 1}));
    EXPECT_EQ(cyclotomic_poly(12), IntPolynomial({1, 0, -1, 0, 1}));
    EXPECT_THROW(cyclotomic_poly(0), std::invalid_argument);
}

TEST(CyclotomicPoly, N105HasMinusTwo) {
    const auto& p = cyclotomic_poly(105);
    EXPECT_EQ(p.degree(), 48);
    EXPECT_EQ(p.coeff(7), -2);
    EXPECT_EQ(p.coeff(41), -2);
    EXPECT_EQ(p.leading(), 1);
}

TEST(CyclotomicPoly, MatchesMobiusProduct) {
    for (std::uint64_t n = 1; n <= 210; ++n) EXPECT_EQ(cyclotomic_poly(n).coeffs(), oracle::phi_mobius(n)) << n;
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXnMinusOne) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        IntPolynomial prod({1});
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_poly(d);
        EXPECT_EQ(prod, IntPolynomial::x_pow_minus_one(n)) << n;
        EXPECT_NO_THROW((void)IntPolynomial::x_pow_minus_one(n).divide_exact(cyclotomic_poly(n)));
    }
}

TEST(CyclotomicPoly, UnitCoefficientsBelow105) {
    for (std::uint64_t n = 1; n <= 104; ++n)
        for (const auto& c : cyclotomic_poly(n).coeffs()) EXPECT_LE(abs(c), 1) << n;
}

TEST(IntPolynomial, DivideExactRejectsRemainder) {
    const IntPolynomial a({1, 0, 1});
    EXPECT_THROW((void)a.divide_exact(IntPolynomial({1, 1})), std::domain_error);
    EXPECT_THROW((void)a.divide_exact(IntPolynomial({1, 2})), std::domain_error);
    EXPECT_EQ(IntPolynomial({-1, 0, 1}).divide_exact(IntPolynomial({1, 1})), IntPolynomial({-1, 1}));
}

TEST(IntPolynomial, TrimsAndPrints) {
    EXPECT_TRUE(IntPolynomial({0, 0}).is_zero());
    EXPECT_EQ(IntPolynomial({0, 0}).degree(), -1);
    EXPECT_EQ(IntPolynomial({1, 0, -1, 0, 1}).to_string(), "x^4 - x^2 + 1");
    EXPECT_EQ(IntPolynomial({-1, 1}).to_string(), "x - 1");
}

TEST(InverseSeries, Examples) {
    EXPECT_EQ(inverse_cyclotomic_series(1, 3), (std::vector<Integer>{-1, -1, -1, -1}));
    EXPECT_EQ(inverse_cyclotomic_series(3, 4), (std::vector<Integer>{1, -1, 0, 1, -1}));
    EXPECT_EQ(inverse_cyclotomic_series(2, 2), (std::vector<Integer>{1, -1, 1}));
    EXPECT_THROW(inverse_cyclotomic_series(0, 2), std::invalid_argument);
}

TEST(InverseSeries, ConvolutionGivesOne) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        const auto h = inverse_cyclotomic_series(n, 40);
        const auto& phi = cyclotomic_poly(n).coeffs();
        for (std::size_t k = 0; k <= 40; ++k) {
            Integer s = 0;
            for (std::size_t i = 0; i <= k && i < phi.size(); ++i) s += phi[i] * h[k - i];
            EXPECT_EQ(s, k == 0 ? 1 : 0) << "n=" << n << " k=" << k;
        }
    }
}

TEST(InverseSeries, NewtonStyleIdentity) {
    // sum_i (-1)^i e_i h_{k-i} = 0 for k >= 1
    for (std::uint64_t n = 2; n <= 30; ++n)
        for (long k = 1; k <= 10; ++k) {
            Integer s = 0;
            for (long i = 0; i <= k; ++i) {
                const Integer term = elementary_at_roots(n, i) * complete_at_roots(n, k - i);
                s += (i % 2 == 0) ? term : Integer(-term);
            }
            EXPECT_EQ(s, 0) << "n=" << n << " k=" << k;
        }
}

TEST(CycloElement, Examples) {
    const auto z3 = CycloElement::zeta_power(3, 1);
    EXPECT_EQ(cyclo_mul(z3, z3), CycloElement(3, {-1, -1}));
    const auto z7 = CycloElement::zeta_power(7, 1);
    EXPECT_EQ(cyclo_mul(z7, CycloElement::one(7)), z7);
    const auto z4 = CycloElement::zeta_power(4, 1);
    EXPECT_EQ(z4 * z4, CycloElement::from_integer(4, -1));
    EXPECT_EQ(cyclo_neg(z4) + z4, CycloElement::zero(4));
    EXPECT_EQ(cyclo_add(z3, CycloElement::zeta_power(3, 2)), CycloElement::from_integer(3, -1));
}

TEST(CycloElement, RationalIntegerExtraction) {
    EXPECT_EQ(cyclo_is_rational_integer(CycloElement::from_integer(9, 5)), Integer(5));
    EXPECT_FALSE(cyclo_is_rational_integer(CycloElement::zeta_power(3, 1)));
    EXPECT_EQ(cyclo_is_rational_integer(CycloElement::zeta_power(3, 1) + CycloElement::zeta_power(3, 2)), Integer(-1));
    EXPECT_FALSE(cyclo_is_rational_integer(CycloElement(5, {Rational(1, 2), 0, 0, 0})));
}

TEST(CycloElement, ConductorMismatchThrows) {
    EXPECT_THROW((void)(CycloElement::one(3) + CycloElement::one(5)), std::invalid_argument);
    EXPECT_THROW((void)(CycloElement::one(3) * CycloElement::one(4)), std::invalid_argument);
    // Short coefficient lists are padded; long ones are reduced mod Phi_n.
    EXPECT_EQ(CycloElement(5, {1, 2}), CycloElement(5, {1, 2, 0, 0}));
    EXPECT_EQ(CycloElement(3, {0, 0, 1}), CycloElement(3, {-1, -1}));
    EXPECT_EQ(CycloElement(5, {Rational(2, 4)}), CycloElement(5, {Rational(1, 2)}));
}

TEST(CycloElement, RootOrder) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        const auto z = CycloElement::zeta_power(n, 1);
        auto acc = CycloElement::one(n);
        for (std::uint64_t k = 1; k <= n; ++k) {
            acc *= z;
            if (k < n) {
                EXPECT_NE(acc, CycloElement::one(n)) << n << " " << k;
            }
        }
        EXPECT_EQ(acc, CycloElement::one(n)) << n;
        EXPECT_EQ(CycloElement::zeta_power(n, -1) * z, CycloElement::one(n));
    }
}

TEST(CycloElement, RingAxiomsOnRandomInputs) {
    std::mt19937_64 rng(7);
    for (std::uint64_t n : {3ull, 5ull, 8ull, 12ull, 15ull, 21ull}) {
        const std::size_t d = euler_phi(n);
        auto rand = [&] {
            std::vector<Rational> c(d);
            for (auto& v : c) v = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
            return CycloElement(n, c);
        };
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = rand(), b = rand(), c = rand();
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a + CycloElement::zero(n), a);
            EXPECT_EQ(a * CycloElement::one(n), a);
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), CycloElement::one(n));
            }
        }
    }
    EXPECT_THROW((void)CycloElement::zero(7).inverse(), std::domain_error);
}

TEST(CycloElement, ReduceMatchesZetaPower) {
    for (std::uint64_t n : {5ull, 9ull, 12ull, 30ull}) {
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(2 * n); ++k) {
            std::vector<Integer> mono(static_cast<std::size_t>(k) + 1, 0);
            mono.back() = 1;
            EXPECT_EQ(reduce_mod_cyclotomic(n, mono), zeta_power_coordinates(n, k));
        }
    }
}
