#include <gtest/gtest.h>

#include <map>

#include "helpers.hpp"

using namespace qgw;
using namespace qgw::test;

namespace {

std::map<std::string, double> as_map(const std::vector<std::pair<std::string, double>>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST(Ubl, HaarGivesZero) {
    const KacPaljutkin kp = kac_paljutkin();
    for (int k : {1, 2, 7}) EXPECT_EQ(ubl(haar_state(kp.group), kp.irreps, k).value, 0.0);
    EXPECT_EQ(lbl(haar_state(kp.group), kp.irreps, 3), 0.0);
}

TEST(Ubl, PeriodicWalk) {
    const KacPaljutkin kp = kac_paljutkin();
    for (int k = 1; k <= 6; ++k) EXPECT_NEAR(ubl(kp_e2(), kp.irreps, k).value, std::sqrt(7.0) / 2.0, 1e-14);
}

TEST(Ubl, IncompleteTableRejected) {
    KacPaljutkin kp = kac_paljutkin();
    kp.irreps.irreps.pop_back();
    EXPECT_THROW(ubl(kp_e2(), kp.irreps, 1), ValidationError);
}

TEST(Ubl, SquaredSumKeepsTheQuarterOut) {
    const KacPaljutkin kp = kac_paljutkin();
    const UblResult r = ubl(kp_example1(), kp.irreps, 3);
    EXPECT_NEAR(r.value * r.value, 0.25 * r.squared_sum, 1e-15);
    EXPECT_EQ(r.contributions.size(), kp.irreps.irreps.size() - 1);
}

TEST(Lbl, KacPaljutkinFirstExample) {
    const KacPaljutkin kp = kac_paljutkin();
    for (int k = 1; k <= 10; ++k) EXPECT_NEAR(lbl(kp_example1(), kp.irreps, k), 0.5 * std::pow(0.5, k), 1e-15);
}

TEST(Lbl, SekineWalk) {
    for (int n : {5, 7}) {
        const IrrepTable t = sekine_irreps(n);
        const Functional nu = sekine_walk_state(n);
        const Irrep* rho = nullptr;
        for (const Irrep& r : t.irreps)
            if (r.name == "rho1+") rho = &r;
        ASSERT_NE(rho, nullptr);
        for (int k = 1; k <= 10; ++k) {
            const double expected = std::pow(std::sqrt(5 + 4 * std::cos(2 * kPi / n)), k) / std::pow(2.0, 2 * k + 1);
            EXPECT_NEAR(0.5 * std::pow(std::abs(nu(rho->elements[0])), k), expected, 1e-15);
            EXPECT_NEAR(sekine_lower(n, k).value, expected, 1e-15);
            EXPECT_LE(expected, lbl(nu, t, k) + 1e-15);
        }
    }
}

TEST(Lbl, MatrixCoefficientBoundDominatesOneDimensional) {
    std::mt19937_64 rng(3);
    const KacPaljutkin kp = kac_paljutkin();
    for (int t = 0; t < 10; ++t) {
        const Functional nu = random_state(kp.group, rng);
        const auto blocks = fourier_blocks(nu, kp.irreps);
        for (int k : {1, 3, 6}) EXPECT_GE(lbl_from_blocks(blocks, k) + 1e-15, lbl(nu, kp.irreps, k));
    }
}

TEST(FamilyBounds, SymmetricKacPaljutkin) {
    KpParams p;
    p.mu = {0, 1, 0, 0, 0};
    for (int k = 1; k <= 5; ++k) EXPECT_NEAR(kp_symmetric_upper(p, k).value, std::sqrt(7.0) / 2.0, 1e-14);
    p.mu = {0.1, 0.2, 0.3, 0.15, 0.25};
    p.x = 0.6;
    const auto [lp, lm] = kp_symmetric_eigenvalues(p);
    const double r = std::sqrt(0.01 + 0.25 * 0.25 * 0.36 / 2);
    EXPECT_NEAR(lp, -0.05 + r, 1e-15);
    EXPECT_NEAR(lm, -0.05 - r, 1e-15);
    p.y = 0.2;
    EXPECT_THROW(kp_symmetric_upper(p, 1), DomainError);
}

TEST(FamilyBounds, FirstExampleClosedForm) {
    KpParams p;
    p.mu = {0, 0.25, 0.25, 0.25, 0.25};
    for (int k = 1; k <= 20; ++k)
        EXPECT_NEAR(kp_symmetric_upper(p, k).value, std::sqrt(1.5 * std::pow(0.25, 2 * k) + 0.25 * std::pow(0.5, 2 * k)), 1e-15);
}

TEST(FamilyBounds, SymmetricKacPaljutkinMatchesGenericUbl) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const KacPaljutkin kp = kac_paljutkin();
    for (int t = 0; t < 20; ++t) {
        KpParams p;
        double total = 0;
        for (double& m : p.mu) total += (m = u(rng));
        for (double& m : p.mu) m /= total;
        p.x = u(rng) - 0.5;
        p.z = u(rng) - 0.5;
        const Functional nu = kp_state(p);
        for (int k = 1; k <= 50; k += 7)
            EXPECT_NEAR(kp_symmetric_upper(p, k).value, ubl(nu, kp.irreps, k).value, 1e-12);
    }
}

TEST(FamilyBounds, SecondExampleValues) {
    EXPECT_NEAR(kp_example2_upper(1).value, (std::sqrt(2.0) + 1) / 4, 1e-15);
    const double a = 2 + std::sqrt(3.0), b = 2 - std::sqrt(3.0);
    EXPECT_NEAR(kp_example2_lower(2).value, (std::pow(8 * b, -1.0) - std::pow(8 * a, -1.0)) / (2 * std::sqrt(6.0)), 1e-15);
    EXPECT_NEAR(kp_example2_lower(3).value, (std::pow(8 * b, -1.5) + std::pow(8 * a, -1.5)) / (2 * std::sqrt(6.0)), 1e-15);
    EXPECT_LE(kp_example2_lower_uniform(3).value, kp_example2_lower(3).value);
}

TEST(FamilyBounds, CyclicGroup) {
    EXPECT_NEAR(zn_upper(9, 3).value, std::exp(-kPi * kPi * 3 / 162), 1e-15);
    EXPECT_THROW(zn_upper(8, 10), DomainError);
    EXPECT_THROW(zn_upper(9, 2), DomainError);
    EXPECT_THROW(zn_lower(5, 10), DomainError);
    EXPECT_FALSE(zn_lower(7, 10).hypothesis.empty());
}

TEST(FamilyBounds, Cube) {
    EXPECT_NEAR(cube_upper_squared(6, 2.0).value, 0.5 * (std::exp(std::exp(-2.0)) - 1), 1e-15);
    EXPECT_THROW(cube_upper_squared(6, 0.0), DomainError);
    EXPECT_THROW(cube_upper_squared(1, 1.0), DomainError);
}

TEST(FamilyBounds, DualSymmetricGroup) {
    EXPECT_THROW(dual_sn_upper_squared(3, 1.0), DomainError);
    const double v = dual_sn_upper_squared(4, 1.0).value;
    const double direct = std::exp(2.0) / 4 * std::pow(3.0, 3.5) * std::exp(-4.0) * std::exp(-6.0) * (1 + 3.0);
    EXPECT_NEAR(v, direct, 1e-12 * direct);
    // Log-domain evaluation stays finite far beyond where nⁿ overflows.
    EXPECT_TRUE(std::isfinite(dual_sn_upper_squared(200, 1.0).value));
    EXPECT_GT(dual_sn_upper_squared(40, 0.05).value, 0.0);
    EXPECT_TRUE(std::isfinite(dual_sn_lower_squared(200, 1e-3).value));
    const double lower = dual_sn_lower_squared(4, 1.0).value;
    EXPECT_NEAR(lower, 0.25 * std::exp(-2.0 * (9.0 / 255.0 + 3.0)), 1e-15);
}

TEST(FamilyBounds, Sekine) {
    EXPECT_THROW(sekine_upper(5, 1.0), DomainError);
    EXPECT_THROW(sekine_upper(7, 0.5), DomainError);
    for (int n : {7, 9, 11, 21})
        for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
            const double k = n * n / 80.0 + alpha * n * n;
            EXPECT_LE(sekine_upper_chain(n, k), sekine_upper(n, alpha).value);
        }
}

TEST(FamilyBounds, DualSymmetricStateIsPositive) {
    const GroupAlgebra ga = group_algebra(symmetric_group(4));
    const Functional u = ga.functional_from_values(dual_sn_values(4));
    const StateReport r = is_state(u, ga.group);
    EXPECT_TRUE(r.valid);
    // Only the trivial and standard blocks are nonzero.
    EXPECT_GE(r.min_eigenvalue, -1e-12);
}

TEST(ClosedForms, CyclicContributionsMatchGeneric) {
    for (int n : {5, 7}) {
        const CayleyTable g = cyclic_group(n);
        const QuantumGroup qg = function_algebra(g);
        const IrrepTable t = classical_irreps(qg, g);
        const Functional nu = zn_simple_state(qg);
        for (int k = 1; k <= 50; ++k) {
            const auto generic = as_map(ubl(nu, t, k).contributions);
            const auto closed = zn_contributions(n, k);
            ASSERT_EQ(generic.size(), closed.size());
            for (const auto& [name, v] : closed) EXPECT_NEAR(generic.at(name), v, 1e-8) << name;
        }
    }
}

TEST(ClosedForms, SekineContributionsMatchGeneric) {
    for (int n : {5, 7}) {
        const IrrepTable t = sekine_irreps(n);
        const Functional nu = sekine_walk_state(n);
        const auto blocks = fourier_blocks(nu, t);
        for (int k = 1; k <= 50; ++k) {
            const auto generic = as_map(ubl_from_blocks(blocks, t, k).contributions);
            const auto closed = sekine_contributions(n, k);
            ASSERT_EQ(generic.size(), closed.size());
            for (const auto& [name, v] : closed) EXPECT_NEAR(generic.at(name), v, 1e-8) << n << ' ' << k << ' ' << name;
        }
    }
}

TEST(Lemmasum, HandValues) {
    const double a = 2 + std::sqrt(3.0), b = 2 - std::sqrt(3.0);
    EXPECT_NEAR((a - b) / (2 * std::sqrt(3.0)), 1.0, 1e-15);
    EXPECT_NEAR((a * a - b * b) / (2 * std::sqrt(3.0)), 4.0, 1e-14);
    EXPECT_LE(lemmasum_check(1).odd, 1e-15);
    EXPECT_LE(lemmasum_check(2).odd, 1e-15);
    for (int N = 1; N <= 20; ++N) {
        EXPECT_LE(lemmasum_check(N).odd, 1e-9) << N;
        EXPECT_LE(lemmasum_check(N).even, 1e-9) << N;
    }
    EXPECT_THROW(lemmasum_check(31), DomainError);
}

TEST(PathOracle, FirstStep) {
    const PathOracle o = kp_example2_path_oracle(1);
    EXPECT_NEAR(std::abs(o.direct - 1 / (2 * std::sqrt(2.0))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(o.combinatorial - 1 / (2 * std::sqrt(2.0))), 0.0, 1e-15);
}

TEST(PathOracle, AgreesWithClosedForm) {
    for (int k = 1; k <= 20; ++k) {
        const PathOracle o = kp_example2_path_oracle(k);
        EXPECT_LE(o.difference, 1e-10) << k;
        EXPECT_NEAR(0.5 * std::abs(o.direct), kp_example2_lower(k).value, 1e-9) << k;
        EXPECT_GE(0.5 * std::abs(o.direct) + 1e-12, kp_example2_lower_uniform(k).value) << k;
    }
}

TEST(Experiment, PeriodicWalk) {
    const KacPaljutkin kp = kac_paljutkin();
    const BoundSeries s = run_experiment(kp.group, kp.irreps, kp_e2(), 6);
    ASSERT_EQ(s.rows.size(), 6u);
    for (const BoundRow& r : s.rows) {
        EXPECT_NEAR(*r.exact_tv, 7.0 / 8.0, 1e-14);
        EXPECT_NEAR(r.ubl, std::sqrt(7.0) / 2.0, 1e-14);
    }
}

TEST(Experiment, CyclicWalkMatchesClassicalFormula) {
    const CayleyTable g = cyclic_group(5);
    const QuantumGroup qg = function_algebra(g);
    const BoundSeries s = run_experiment(qg, classical_irreps(qg, g), zn_simple_state(qg), 30);
    for (const BoundRow& r : s.rows) {
        double sum = 0;
        for (int a = 1; a < 5; ++a) sum += std::pow(std::cos(2 * kPi * a / 5), 2 * r.k);
        EXPECT_NEAR(r.ubl, 0.5 * std::sqrt(sum), 1e-12);
    }
}

TEST(Experiment, SekineSevenReachesTheBound) {
    const int n = 7;
    const int kmax = static_cast<int>(std::ceil(n * n / 80.0 + n * n));
    const BoundSeries s = run_experiment(sekine(n), sekine_irreps(n), sekine_walk_state(n), kmax);
    EXPECT_LE(s.rows.back().ubl, 1.11 * std::exp(-kPi * kPi));
}

TEST(Experiment, SandwichAndPlancherel) {
    std::mt19937_64 rng(5);
    const KacPaljutkin kp = kac_paljutkin();
    const std::vector<std::pair<QuantumGroup, IrrepTable>> cases{{kp.group, kp.irreps}, {sekine(3), sekine_irreps(3)}};
    for (const auto& [qg, t] : cases)
        for (int trial = 0; trial < 5; ++trial) {
            const Functional nu = random_state(qg, rng);
            const BoundSeries s = run_experiment(qg, t, nu, 12);
            for (const BoundRow& r : s.rows) {
                EXPECT_LE(r.lbl, *r.exact_tv + 1e-9);
                EXPECT_LE(*r.exact_tv, r.ubl + 1e-9);
                EXPECT_NEAR(r.ubl * r.ubl, 0.25 * r.l2 * r.l2, 1e-8);
            }
        }
}
