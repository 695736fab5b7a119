#pragma once
//
// The Fourier map between an algebra and its dual, Fourier transforms at
// irreps, distances to random, and residual checks of the inversion,
// Plancherel and convolution theorems.
//

#include <cstdint>
#include <string>

#include "qgw/catalog.hpp"

namespace qgw {

// ℱ(a) = haar(· a).  Coefficient on E^{(b)}_pq is w_b (a_b)_qp.
Functional fourier_map(const AlgebraElement& a, const QuantumGroup& qg);
// Exact inverse: (a_b)_qp = c_pq / w_b.  This is the Riesz element of φ.
AlgebraElement fourier_inverse(const Functional& phi, const QuantumGroup& qg);

// Unnormalised dual Haar functional φ ↦ ε(ℱ⁻¹(φ)).
cplx dual_haar(const Functional& phi, const QuantumGroup& qg);

struct FourierBlock {
    std::string name;
    Mat matrix;  // M_ij = φ(ρ_ij*)
};

FourierBlock fourier_at_irrep(const Functional& phi, const Irrep& irrep);

struct DistanceReport {
    int k = 0;
    double tv = 0;
    double l2 = 0;
    double sep = 0;
    std::string reference;
};

double tv_distance(const Functional& nu, const Functional& mu, const QuantumGroup& qg);
double l2_distance(const Functional& nu, const Functional& mu, const QuantumGroup& qg);
double separation_distance(const Functional& nu, const Functional& mu, const QuantumGroup& qg);
// All three from one inverse transform.
DistanceReport distances(const Functional& nu, const Functional& mu, const QuantumGroup& qg);

// |ν(p) − π(p)| for a projection p; a lower bound for tv(ν, π).
double tv_lower_via_projection(const Functional& nu, const AlgebraElement& p, const QuantumGroup& qg);

// a ⋆_A b = Σ b_(2) haar(S(b_(1)) a).
AlgebraElement star_A(const AlgebraElement& a, const AlgebraElement& b, const QuantumGroup& qg);

struct TheoremResiduals {
    double plancherel = 0;       // ∫̂(ℱ(a)*⋆ℱ(a)) vs haar(a*a)
    double inversion = 0;        // ε(a) vs Σ d Tr â(α), and full reconstruction of a
    double convolution = 0;      // (φ⋆ψ)^(α) vs φ̂(α)ψ̂(α)
    double van_daele = 0;        // ℱ(a)⋆ℱ(b) vs ℱ(a ⋆_A b)
    double fourier_star = 0;     // (φ*)^(α) vs φ̂(α)*

    double worst() const;
};

// Deterministic pseudo-random sampling (fixed seed) over `samples` draws.
double verify_plancherel(const QuantumGroup& qg, int samples = 50, std::uint64_t seed = 1);
double verify_inversion(const QuantumGroup& qg, const IrrepTable& irreps, int samples = 50, std::uint64_t seed = 2);
double verify_convolution(const QuantumGroup& qg, const IrrepTable& irreps, int samples = 50, std::uint64_t seed = 3);
double verify_van_daele(const QuantumGroup& qg, int samples = 50, std::uint64_t seed = 4);
double verify_fourier_star(const QuantumGroup& qg, const IrrepTable& irreps, int samples = 50, std::uint64_t seed = 5);
TheoremResiduals verify_theorems(const QuantumGroup& qg, const IrrepTable& irreps, int samples = 50);

} // namespace qgw
