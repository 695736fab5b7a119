#pragma once
//
// Builders for the quantum groups used throughout the library, their
// irreducible corepresentations, and classical Cayley tables.
//

#include <optional>
#include <string>
#include <vector>

#include "qgw/hopf.hpp"

namespace qgw {

struct CayleyTable {
    int order = 0;
    std::vector<int> product;  // product[a * order + b] = index of ab
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;

    int mul(int a, int b) const { return product[a * order + b]; }
    bool is_abelian() const;

    // Validates the Latin-square property, identity, inverses and (for order
    // <= 128) associativity.  Throws ValidationError naming the failure.
    static CayleyTable from_product(int order, std::vector<int> product,
                                    std::vector<std::string> labels = {});
};

CayleyTable cyclic_group(int n);
// ℤ₂ⁿ with elements indexed by bit vectors.
CayleyTable power_of_z2(int n);
// Permutations of {0..n-1} in lexicographic order (identity first), with
// (στ)(i) = σ(τ(i)).  n <= 6.
CayleyTable symmetric_group(int n);
std::vector<std::vector<int>> permutations_of(int n);
// Order 2n: rotations r^k (index k) then reflections r^k s (index n + k).
CayleyTable dihedral_group(int n);
CayleyTable quaternion_group();

struct Irrep {
    int dim = 1;
    std::vector<AlgebraElement> elements;  // row-major, dim × dim
    std::string name;

    const AlgebraElement& at(int i, int j) const { return elements[i * dim + j]; }
};

struct IrrepTable {
    std::vector<Irrep> irreps;  // trivial first
    int sum_dim_squared() const;
};

struct IrrepDiagnostics {
    double corepresentation = 0;
    double counit = 0;
    double unitarity = 0;
    double character = 0;      // max |haar(χ*χ) - 1|
    double orthogonality = 0;
    int sum_dim_squared = 0;
    bool complete = false;
    bool trivial_first = false;

    double worst() const;
    bool accepted(double tol = 1e-8) const;
};

IrrepDiagnostics check_irreps(const QuantumGroup& qg, const IrrepTable& table);
// Throws ValidationError unless check_irreps accepts the table.
void validate_irreps(const QuantumGroup& qg, const IrrepTable& table);

// Δ, ε, S determined by a complete table via Δ(ρ_ij) = Σ_k ρ_ik ⊗ ρ_kj,
// ε(ρ_ij) = δ_ij and S(ρ_ij) = ρ_ji*.
struct CoalgebraData {
    LinearMap delta;
    Vec counit;
    LinearMap antipode;
};
CoalgebraData reconstruct_from_irreps(const BlockShape& shape, const IrrepTable& table);

QuantumGroup function_algebra(const CayleyTable& g);

// ℂG realised in block form.  point_images[s] is δ^s as an element of the
// block algebra.
struct GroupAlgebra {
    QuantumGroup group;
    CayleyTable table;
    Mat to_blocks;
    Mat from_blocks;
    std::vector<AlgebraElement> point_images;

    // The functional on ℂG taking the value values[s] on δ^s.
    Functional functional_from_values(const std::vector<cplx>& values) const;
    // Its values on the δ^s.
    std::vector<cplx> values_of(const Functional& phi) const;
    // The one-dimensional irreps κ_s, one per group element.
    IrrepTable irreps() const;
};

GroupAlgebra group_algebra(const CayleyTable& g);

struct KacPaljutkin {
    QuantumGroup group;
    IrrepTable irreps;
};
KacPaljutkin kac_paljutkin();

QuantumGroup sekine(int n);
// n odd >= 3; throws UnsupportedError for even n.
IrrepTable sekine_irreps(int n);
// Basis indices of e_(i,j) (i, j mod n) and E_{p,q} (p, q in 1..n mod n).
int sekine_point_index(int n, int i, int j);
int sekine_matrix_index(int n, int p, int q);
// Δ from the explicit phase formulas, for cross-checking the reconstruction.
LinearMap sekine_delta_explicit(int n);

// Characters of an abelian group, trivial first, as functions on G.
std::vector<std::vector<cplx>> abelian_characters(const CayleyTable& g);

// Irreps of F(G): characters for abelian G, or a user table (validated).
IrrepTable classical_irreps(const QuantumGroup& qg, const CayleyTable& g,
                            const std::optional<IrrepTable>& user_table = std::nullopt);

// The four-dimensional Sweedler Hopf algebra on 1, g, x, gx.  Not Kac, so
// not a quantum group; available for rejection tests.
HopfDescriptor sweedler();

} // namespace qgw
