#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace qgw;
using namespace qgw::test;

TEST(Convolve, CounitIsTheUnit) {
    std::mt19937_64 rng(1);
    for (const auto& [name, qg] : catalog_sample()) {
        const Functional phi = random_functional(qg.shape, rng);
        EXPECT_LE(max_diff(convolve(qg.counit, phi, qg), phi), 1e-12) << name;
        EXPECT_LE(max_diff(convolve(phi, qg.counit, qg), phi), 1e-12) << name;
    }
}

TEST(Convolve, HaarAbsorbs) {
    std::mt19937_64 rng(2);
    for (const auto& [name, qg] : catalog_sample()) {
        const Functional phi = random_state(qg, rng);
        const Functional pi = haar_state(qg);
        EXPECT_LE(max_diff(convolve(pi, phi, qg), pi), 1e-12) << name;
        EXPECT_LE(max_diff(convolve(phi, pi, qg), pi), 1e-12) << name;
    }
}

TEST(Convolve, GroupAlgebraOfZ3Example) {
    // On F(ℤ₃), μ = ½δ⁰ + ⅓δ¹ + ⅙δ² is an element of ℂℤ₃.
    const QuantumGroup z3 = function_algebra(cyclic_group(3));
    Vec c(3);
    c << 1.0 / 2, 1.0 / 3, 1.0 / 6;
    const Functional mu(z3.shape, c);
    const Functional m = convolve(functional_adjoint(mu, z3), mu, z3);
    EXPECT_NEAR(std::abs(m.coeffs()(0) - 7.0 / 18), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m.coeffs()(1) - 11.0 / 36), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m.coeffs()(2) - 11.0 / 36), 0.0, 1e-15);
}

TEST(ConvolutionPower, ZeroIsCounit) {
    const QuantumGroup kp = kac_paljutkin().group;
    EXPECT_LE(max_diff(convolution_power(kp_example2(), 0, kp), kp.counit), 0.0);
}

TEST(ConvolutionPower, PeriodicKacPaljutkinWalk) {
    const QuantumGroup kp = kac_paljutkin().group;
    const Functional e2 = kp_e2();
    for (int k = 1; k <= 9; ++k) {
        const Functional p = convolution_power(e2, k, kp);
        EXPECT_LE(max_diff(p, k % 2 ? e2 : kp.counit), 1e-14) << k;
    }
}

TEST(ConvolutionPower, SimpleWalkOnZ5) {
    const QuantumGroup z5 = function_algebra(cyclic_group(5));
    const Functional p = convolution_power(zn_simple_state(z5), 2, z5);
    Vec expected(5);
    expected << 0.5, 0, 0.25, 0.25, 0;
    EXPECT_LE(max_abs(Vec(p.coeffs() - expected)), 1e-15);
}

TEST(ConvolutionPower, AgreesWithSequence) {
    const QuantumGroup k3 = sekine(3);
    const Functional nu = sekine_walk_state(3);
    const auto seq = convolution_powers(nu, 12, k3);
    for (int k : {1, 5, 12}) EXPECT_LE(max_diff(seq[k - 1], convolution_power(nu, k, k3)), 1e-12);
}

TEST(StochasticOperator, CounitGivesIdentity) {
    for (const auto& [name, qg] : catalog_sample())
        EXPECT_LE(max_abs(Mat(stochastic_operator(qg.counit, qg).matrix() - Mat::Identity(qg.dim(), qg.dim()))), 1e-15)
            << name;
}

TEST(StochasticOperator, UnitalAndPositive) {
    std::mt19937_64 rng(3);
    for (const auto& [name, qg] : catalog_sample()) {
        const Functional nu = random_state(qg, rng);
        const LinearMap p = stochastic_operator(nu, qg);
        const AlgebraElement one = AlgebraElement::unit(qg.shape);
        EXPECT_LE(max_abs(Vec(p.apply(one.coeffs()) - one.coeffs())), 1e-12) << name;
        const AlgebraElement b = random_element(qg.shape, rng);
        const AlgebraElement pos = mul(b.adjoint(), b);
        const AlgebraElement img = AlgebraElement::from_coeffs(qg.shape, p.apply(pos.coeffs()));
        EXPECT_GE(min_eigenvalue(img), -1e-10 * (1 + pos.max_abs())) << name;
    }
}

TEST(IsState, CounitAndPal) {
    const QuantumGroup kp = kac_paljutkin().group;
    EXPECT_TRUE(is_state(kp.counit, kp).valid);
    EXPECT_TRUE(is_state(kp_pal(), kp).valid);
    EXPECT_TRUE(is_state(haar_state(kp), kp).valid);
}

TEST(IsState, RejectsNonStates) {
    const QuantumGroup kp = kac_paljutkin().group;
    Vec c = kp_e2().coeffs();
    c(1) = 2.0;
    EXPECT_FALSE(is_state(Functional(kp.shape, c), kp).valid);
    c(1) = 1.5;
    c(0) = -0.5;
    const StateReport r = is_state(Functional(kp.shape, c), kp);
    EXPECT_FALSE(r.valid);
    EXPECT_LT(r.min_eigenvalue, 0.0);
    EXPECT_THROW(require_state(Functional(kp.shape, c), kp), ValidationError);
}

TEST(Cesaro, OneStepAndPeriodicWalk) {
    const QuantumGroup kp = kac_paljutkin().group;
    const Functional e2 = kp_e2();
    EXPECT_LE(max_diff(cesaro(e2, 1, kp), e2), 1e-15);
    for (int n : {2, 4, 10}) EXPECT_LE(max_diff(cesaro(e2, n, kp), 0.5 * (e2 + kp.counit)), 1e-14) << n;
}

TEST(KpState, Presets) {
    const QuantumGroup kp = kac_paljutkin().group;
    KpParams p;
    p.mu = {1, 0, 0, 0, 0};
    EXPECT_LE(max_diff(kp_state(p), kp.counit), 0.0);
    const Functional e2 = kp_e2();
    EXPECT_EQ(e2.coeffs()(1), cplx(1.0));
    EXPECT_NEAR(e2.coeffs().cwiseAbs().sum(), 1.0, 0.0);
}

TEST(KpState, SecondExampleKillsOneDimensionalIrreps) {
    const KacPaljutkin kp = kac_paljutkin();
    const Functional nu = kp_example2();
    for (std::size_t a = 1; a < 4; ++a) EXPECT_NEAR(std::abs(nu(kp.irreps.irreps[a].elements[0])), 0.0, 1e-15);
}

TEST(KpState, Validation) {
    KpParams p;
    p.mu = {0.5, 0.5, 0.5, 0, 0};
    EXPECT_THROW(kp_state(p), ValidationError);
    p.mu = {0, 0, 0, 0, 1};
    p.x = 1;
    p.z = 1;
    EXPECT_THROW(kp_state(p), ValidationError);
}

TEST(Properties, ConvolutionIsAssociative) {
    std::mt19937_64 rng(5);
    for (const auto& [name, qg] : catalog_sample())
        for (int t = 0; t < 5; ++t) {
            const Functional a = random_functional(qg.shape, rng), b = random_functional(qg.shape, rng),
                             c = random_functional(qg.shape, rng);
            const Functional l = convolve(convolve(a, b, qg), c, qg), r = convolve(a, convolve(b, c, qg), qg);
            EXPECT_LE(max_diff(l, r), 1e-10 * (1 + l.coeffs().cwiseAbs().maxCoeff())) << name;
        }
}

TEST(Properties, StatesAreClosedUnderConvolution) {
    std::mt19937_64 rng(6);
    for (const auto& [name, qg] : catalog_sample())
        for (int t = 0; t < 10; ++t) {
            const StateReport r = is_state(convolve(random_state(qg, rng), random_state(qg, rng), qg), qg, 1e-9);
            EXPECT_TRUE(r.valid) << name;
            EXPECT_GE(r.min_eigenvalue, -1e-9) << name;
        }
}

TEST(Properties, StochasticOperatorIsHomomorphism) {
    std::mt19937_64 rng(7);
    for (const auto& [name, qg] : catalog_sample()) {
        const Functional nu = random_state(qg, rng), mu = random_state(qg, rng);
        const Mat lhs = stochastic_operator(nu, qg).matrix().transpose() * stochastic_operator(mu, qg).matrix().transpose();
        const Mat rhs = stochastic_operator(convolve(nu, mu, qg), qg).matrix().transpose();
        EXPECT_LE(max_abs(Mat(lhs - rhs)), 1e-10) << name;
        // P_νᵀ μ = ν ⋆ μ and P_νᵀ π = π
        const Vec moved = stochastic_operator(nu, qg).matrix().transpose() * mu.coeffs();
        EXPECT_LE(max_abs(Vec(moved - convolve(nu, mu, qg).coeffs())), 1e-12) << name;
        const Vec fixed = stochastic_operator(nu, qg).matrix().transpose() * haar_state(qg).coeffs();
        EXPECT_LE(max_abs(Vec(fixed - haar_state(qg).coeffs())), 1e-10) << name;
    }
}

TEST(Properties, PalIdempotent) {
    const QuantumGroup kp = kac_paljutkin().group;
    const Functional phi = kp_pal();
    EXPECT_LE(max_diff(convolve(phi, phi, kp), phi), 1e-10);
}

TEST(Properties, RandomStatesAreStates) {
    std::mt19937_64 rng(8);
    for (const auto& [name, qg] : catalog_sample())
        for (int t = 0; t < 20; ++t) EXPECT_TRUE(is_state(random_state(qg, rng), qg).valid) << name;
}

TEST(Symmetry, SymmetricAndNonsymmetricStates) {
    const QuantumGroup kp = kac_paljutkin().group;
    EXPECT_TRUE(is_symmetric(kp_example2(), kp));
    KpParams p;
    p.mu = {0, 0, 0, 0, 1};
    p.y = 1;
    EXPECT_FALSE(is_symmetric(kp_state(p), kp));
    EXPECT_TRUE(is_symmetric(zn_simple_state(function_algebra(cyclic_group(7))), function_algebra(cyclic_group(7))));
}

TEST(SekineState, Validation) {
    std::vector<double> x(9, 0.0);
    Mat a = Mat::Zero(3, 3);
    a(0, 0) = 1.0;
    EXPECT_NO_THROW(sekine_state(3, x, a));
    a(0, 1) = 2.0;
    EXPECT_THROW(sekine_state(3, x, a), ValidationError);
    EXPECT_TRUE(is_state(sekine_walk_state(5), sekine(5)).valid);
}
