#pragma once
//
// States, convolution and the stochastic operator.
//

#include <array>
#include <random>
#include <vector>

#include "qgw/hopf.hpp"

namespace qgw {

// (φ ⊗ ψ) ∘ Δ
Functional convolve(const Functional& phi, const Functional& psi, const QuantumGroup& qg);

// P_ν = (ν ⊗ I) ∘ Δ.  Its transpose acts on coefficient vectors as ν ⋆ ·.
LinearMap stochastic_operator(const Functional& nu, const QuantumGroup& qg);

// ν^{⋆k} by binary powering of P_νᵀ applied to ε.  When ν is a state the
// result is re-validated and NumericalError is thrown if it drifts by more
// than 1e-8.
Functional convolution_power(const Functional& nu, int k, const QuantumGroup& qg);

// ν, ν^{⋆2}, ..., ν^{⋆kmax}, one multiplication per step.
std::vector<Functional> convolution_powers(const Functional& nu, int kmax, const QuantumGroup& qg);

struct StateReport {
    double min_eigenvalue = 0;        // over all blocks of the Riesz element
    std::vector<double> block_min_eigenvalues;
    double hermitian_residual = 0;    // ‖a − a*‖ for the Riesz element a
    double normalisation = 0;         // |φ(1) − 1|
    bool valid = false;
};

StateReport is_state(const Functional& phi, const QuantumGroup& qg, double tol = 1e-10);
// Throws ValidationError naming the failing condition.
void require_state(const Functional& phi, const QuantumGroup& qg, double tol = 1e-10);

// ν_n = (1/n) Σ_{k=1}^n ν^{⋆k}
Functional cesaro(const Functional& nu, int n, const QuantumGroup& qg);

// max |ν − ν∘S| over the basis.
double symmetry_residual(const Functional& nu, const QuantumGroup& qg);
bool is_symmetric(const Functional& nu, const QuantumGroup& qg, double tol = 1e-10);

Functional haar_state(const QuantumGroup& qg);

// Riesz element b*b per block for Gaussian b, normalised by its Haar integral.
Functional random_state(const QuantumGroup& qg, std::mt19937_64& rng);
// Gaussian coefficients, not a state.
Functional random_functional(const BlockShape& shape, std::mt19937_64& rng);
AlgebraElement random_element(const BlockShape& shape, std::mt19937_64& rng);

// States on the Kac–Paljutkin algebra, parameterised by convex weights
// μ₁..μ₅ and a Bloch vector (x, y, z) for the matrix factor.
struct KpParams {
    std::array<double, 5> mu{};
    double x = 0, y = 0, z = 0;
};
Functional kp_state(const KpParams& p);

// States on the Sekine algebra of order n: weights x_(i,j) on the
// one-dimensional blocks (row-major, n² entries) and a density matrix A on
// the matrix block, with Σx + Tr A = 1.
Functional sekine_state(int n, const std::vector<double>& point_weights, const Mat& density);

} // namespace qgw
