#include "cycloschur/symfunc.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace cycloschur;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(Partition, NormalizesAndValidates) {
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_EQ(Partition({3, 1}).length(), 2u);
    EXPECT_EQ(Partition({3, 1}).weight(), 4);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
    EXPECT_EQ(Partition({4, 2, 1}).conjugate(), Partition({3, 2, 1, 1}));
    EXPECT_EQ(Partition::column(3), Partition({1, 1, 1}));
    EXPECT_EQ(Partition::row(0), Partition());
}

TEST(Partition, ConjugateIsInvolution) {
    for (const auto& p : partitions_in_box(5, 5)) EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(PartitionsInBox, Examples) {
    EXPECT_EQ(partitions_in_box(0, 5), std::vector<Partition>{Partition()});
    const auto b22 = partitions_in_box(2, 2);
    EXPECT_EQ(b22, (std::vector<Partition>{Partition(), Partition({1}), Partition({2}), Partition({1, 1}),
                                           Partition({2, 1}), Partition({2, 2})}));
    EXPECT_EQ(partitions_in_box(3, 1),
              (std::vector<Partition>{Partition(), Partition({1}), Partition({1, 1}), Partition({1, 1, 1})}));
}

TEST(PartitionsInBox, CountAndUniqueness) {
    for (std::size_t l = 0; l <= 6; ++l)
        for (int k = 0; k <= 6; ++k) {
            const auto all = partitions_in_box(l, k);
            EXPECT_EQ(all.size(), binom(l + static_cast<std::size_t>(k), l));
            const std::set<Partition> unique(all.begin(), all.end());
            EXPECT_EQ(unique.size(), all.size());
            for (const auto& p : all) {
                EXPECT_LE(p.length(), l);
                EXPECT_LE(p.largest(), k);
            }
        }
}

TEST(ElementaryAtRoots, Examples) {
    EXPECT_EQ(elementary_at_roots(7, 0), 1);
    EXPECT_EQ(elementary_at_roots(3, 1), -1);
    EXPECT_EQ(elementary_at_roots(105, 7), 2);
    EXPECT_EQ(elementary_at_roots(5, 5), 0);
    EXPECT_THROW(elementary_at_roots(0, 1), std::invalid_argument);
}

TEST(CompleteAtRoots, Examples) {
    EXPECT_EQ(complete_at_roots(9, 0), 1);
    EXPECT_EQ(complete_at_roots(3, 1), -1);
    EXPECT_EQ(complete_at_roots(3, 3), 1);
    EXPECT_EQ(complete_at_roots(3, -2), 0);
}

TEST(SchurAtRoots, Examples) {
    EXPECT_EQ(schur_at_roots(11, Partition()), 1);
    EXPECT_EQ(schur_at_roots(3, Partition({1})), -1);
    EXPECT_EQ(schur_at_roots(105, Partition::column(7)), 2);
    EXPECT_THROW(schur_at_roots(5, Partition::column(5)), std::invalid_argument);
    EXPECT_THROW(schur_at_roots(1, Partition({1})), std::invalid_argument);
}

TEST(SchurAtRoots, RowAndColumnSpecializations) {
    for (std::uint64_t n = 2; n <= 30; ++n)
        for (int k = 0; k <= 12; ++k) {
            EXPECT_EQ(schur_at_roots(n, Partition::row(k)), complete_at_roots(n, k)) << n << " " << k;
            if (static_cast<std::uint64_t>(k) <= euler_phi(n)) {
                EXPECT_EQ(schur_at_roots(n, Partition::column(k)), elementary_at_roots(n, k)) << n << " " << k;
            }
        }
}

TEST(SchurAtRoots, FloatingPointCrossCheck) {
    for (std::uint64_t n : {5ull, 7ull, 12ull, 15ull, 21ull})
        for (const auto& p : partitions_in_box(std::min<std::size_t>(euler_phi(n), 4), 4)) {
            const auto approx = oracle::schur_numeric(n, p.parts());
            EXPECT_NEAR(approx.real(), schur_at_roots(n, p).get_d(), 1e-6) << n << " " << p;
            EXPECT_NEAR(approx.imag(), 0.0, 1e-6);
        }
}

TEST(SchurAtRoots, ConjugateFormsAgree) {
    // s_lambda via the h-form must equal the e-form value computed for the
    // conjugate; compare against the numeric oracle on tall partitions.
    for (std::uint64_t n : {16ull, 20ull, 24ull})
        for (const auto& p : partitions_in_box(euler_phi(n), 2)) {
            const auto approx = oracle::schur_numeric(n, p.parts());
            EXPECT_NEAR(approx.real(), schur_at_roots(n, p).get_d(), 1e-6) << n << " " << p;
        }
}

TEST(Alternant, Examples) {
    const auto z = CycloElement::zeta_power(3, 1);
    EXPECT_EQ(alternant_at_roots(3, Composition({1, 0})), z - z * z);
    EXPECT_TRUE(alternant_at_roots(7, Composition({3, 1, 1, 0, 2, 5})).is_zero());
    EXPECT_FALSE(alternant_at_roots(3, Composition::staircase(2)).is_zero());
    EXPECT_THROW(alternant_at_roots(5, Composition({1, 0})), std::invalid_argument);
    EXPECT_THROW(alternant_at_roots(1, Composition({0})), std::invalid_argument);
}

TEST(Alternant, SwapNegates) {
    std::mt19937_64 rng(4);
    for (std::uint64_t n : {5ull, 7ull, 8ull, 9ull, 12ull}) {
        const std::size_t d = euler_phi(n);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> mu(d);
            for (auto& v : mu) v = static_cast<int>(rng() % 9);
            const std::size_t i = rng() % d, j = (i + 1 + rng() % (d - 1)) % d;
            auto swapped = mu;
            std::swap(swapped[i], swapped[j]);
            EXPECT_EQ(alternant_at_roots(n, Composition(swapped)), -alternant_at_roots(n, Composition(mu)));
        }
    }
}

TEST(Alternant, MatchesLeibniz) {
    for (std::uint64_t n : {5ull, 7ull, 9ull}) {
        const auto exps = primitive_exponents(n);
        const std::size_t d = exps.size();
        const Composition mu = Composition::shifted(Partition({2, 1}), d);
        std::vector<std::vector<CycloElement>> m(d, std::vector<CycloElement>(d, CycloElement::zero(n)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m[i][j] = CycloElement::zeta_power(n, static_cast<std::int64_t>(exps[i]) * mu[j]);
        EXPECT_EQ(alternant_at_roots(n, mu), oracle::leibniz_det(m, n));
    }
}

TEST(Bialternant, Examples) {
    EXPECT_EQ(schur_at_roots_bialternant(9, Partition()), 1);
    EXPECT_EQ(schur_at_roots_bialternant(4, Partition({1})), schur_at_roots(4, Partition({1})));
    EXPECT_EQ(schur_at_roots_bialternant(12, Partition({2, 1})), schur_at_roots(12, Partition({2, 1})));
    EXPECT_EQ(schur_at_roots_bialternant(105, Partition::column(7)), 2);
}

TEST(Bialternant, AgreesWithJacobiTrudiOnSmallBoxes) {
    for (std::uint64_t n = 2; n <= 12; ++n)
        for (const auto& p : partitions_in_box(euler_phi(n), 3))
            EXPECT_EQ(schur_at_roots_bialternant(n, p), schur_at_roots(n, p)) << n << " " << p;
}

TEST(BoxSummary, MatchesPerPartitionEvaluation) {
    for (std::uint64_t n : {7ull, 9ull, 16ull, 30ull, 105ull}) {
        const std::size_t len = std::min<std::size_t>(euler_phi(n), 8);
        for (int part : {0, 3, 6, 9}) {
            const auto summary = schur_box_summary(n, len, part, 1000000);
            std::map<Integer, std::uint64_t> hist;
            std::vector<std::pair<Partition, Integer>> bad;
            for (const auto& p : partitions_in_box(len, part)) {
                const Integer v = schur_at_roots(n, p);
                ++hist[v];
                if (abs(v) > 1) bad.emplace_back(p, v);
            }
            EXPECT_EQ(summary.histogram, hist) << n << " " << part;
            EXPECT_EQ(summary.violations, bad) << n << " " << part;
            EXPECT_EQ(summary.violation_count, bad.size());
            EXPECT_EQ(summary.partitions, binom(len + static_cast<std::size_t>(part), len));
        }
    }
}

TEST(BoxSummary, KeepsFirstViolationsInBoxOrder) {
    const auto summary = schur_box_summary(105, 9, 3, 3);
    ASSERT_EQ(summary.violations.size(), 3u);
    std::vector<Partition> expected;
    for (const auto& p : partitions_in_box(9, 3))
        if (abs(schur_at_roots(105, p)) > 1 && expected.size() < 3) expected.push_back(p);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(summary.violations[i].first, expected[i]);
}

TEST(BoxSummary, RejectsLongBox) {
    EXPECT_THROW((void)schur_box_summary(5, 5, 2), std::invalid_argument);
    EXPECT_THROW((void)schur_box_summary(5, 2, -1), std::invalid_argument);
}
