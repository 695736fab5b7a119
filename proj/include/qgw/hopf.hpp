#pragma once
//
// Hopf descriptors and the axiom checks.
//
// A QuantumGroup lives on a block algebra and carries a tracial Haar state.
// A HopfDescriptor is the looser object the checks actually run on: an
// algebra given by structure constants, which is what lets non-semisimple
// examples be loaded and rejected with a full report.
//

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgw/blockalg.hpp"
#include "qgw/functional.hpp"

namespace qgw {

struct QuantumGroup {
    BlockShape shape;
    LinearMap delta;      // dim -> dim²
    Functional counit;
    LinearMap antipode;   // dim -> dim
    HaarWeights haar;
    std::string label;

    int dim() const { return shape.dim(); }
    // Throws StructuralError if the components do not fit the shape.
    void check_structure() const;

    Vec comultiply(const AlgebraElement& a) const { return delta.apply(a.coeffs()); }
    AlgebraElement antipode_of(const AlgebraElement& a) const {
        return AlgebraElement::from_coeffs(shape, antipode.apply(a.coeffs()));
    }
    Functional haar_functional() const;
};

using SparseVec = std::vector<std::pair<int, cplx>>;

struct HopfDescriptor {
    std::string label;
    int dim = 0;
    // products[a * dim + b] lists the coefficients of e_a e_b.
    std::vector<SparseVec> products;
    Vec unit;
    // Conjugate-linear involution: (Σ c_i e_i)* = Σ conj(c_i) star_of_basis.col(i).
    Mat star_of_basis;
    LinearMap delta;
    Vec counit;
    LinearMap antipode;
    // Absent when the algebra carries no normalised invariant state.
    std::optional<Vec> haar;
};

HopfDescriptor to_descriptor(const QuantumGroup& qg);

struct AxiomReport {
    double coassociativity = 0;
    double counit_left = 0;
    double counit_right = 0;
    double antipode_left = 0;
    double antipode_right = 0;
    double delta_homomorphism = 0;
    double delta_star = 0;
    double haar_left_invariance = 0;
    double haar_right_invariance = 0;
    double haar_traciality = 0;
    double kac = 0;
    double commutativity = 0;    // residual behind `commutative`
    double cocommutativity = 0;  // residual behind `cocommutative`
    bool commutative = false;
    bool cocommutative = false;

    // Named residuals, in a fixed order, for reporting.
    std::vector<std::pair<std::string, double>> residuals() const;
    double worst() const;
    // True when every axiom residual is at most tol (S² = I included).
    bool accepted(double tol = 1e-9) const;
};

inline constexpr double kAxiomTolerance = 1e-9;

AxiomReport verify(const HopfDescriptor& d);
AxiomReport verify(const QuantumGroup& qg);

// Iterated comultiplication Δ^{(k)}: dim -> dim^{k+1}.  Δ^{(0)} is the
// identity.  Throws ResourceError when the dense matrix would hold more than
// 1e7 coefficients.
LinearMap delta_power(const QuantumGroup& qg, int k);

// The dual quantum group, realised on blocks.  to_blocks sends coefficient
// vectors of functionals on qg to block coordinates of the dual algebra, and
// from_blocks is its inverse.
struct DualGroup {
    QuantumGroup group;
    Mat to_blocks;
    Mat from_blocks;
};

DualGroup dual(const QuantumGroup& qg);

// Sparse column view of a dense map, dropping exact zeros.
std::vector<SparseVec> sparse_columns(const Mat& m, double drop = 0.0);

// φ*(a) = conj(φ(S(a)*)).
Functional functional_adjoint(const Functional& phi, const QuantumGroup& qg);

} // namespace qgw
