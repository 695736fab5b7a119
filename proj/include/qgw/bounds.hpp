#pragma once
//
// Upper and lower bound lemmas, the closed-form bounds for the catalog
// walks, and the experiment driver that sandwiches exact distances between
// them.
//

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgw/fourier.hpp"
#include "qgw/walks.hpp"

namespace qgw {

struct UblResult {
    double value = 0;          // sqrt(¼ Σ contributions)
    double squared_sum = 0;    // Σ contributions, without the ¼
    // d_α Tr[(ν̂(α)^k)* ν̂(α)^k] per nontrivial irrep, in table order.
    std::vector<std::pair<std::string, double>> contributions;
};

// Fourier blocks of ν at every irrep, in table order.
std::vector<FourierBlock> fourier_blocks(const Functional& nu, const IrrepTable& irreps);

// Throws ValidationError unless Σd² equals the algebra dimension.
UblResult ubl(const Functional& nu, const IrrepTable& irreps, int k);
UblResult ubl_from_blocks(const std::vector<FourierBlock>& blocks, const IrrepTable& irreps, int k);

// max over nontrivial one-dimensional irreps of ½|ν(ρ)|^k; 0 if none.
double lbl(const Functional& nu, const IrrepTable& irreps, int k);
// ½ max |ν^{⋆k}(ρ_ij)| over every matrix coefficient of every nontrivial
// irrep.  Valid because |φ(a)| <= 2 tv ‖a‖ and unitary coefficients have
// norm at most 1; reduces to lbl on one-dimensional irreps.
double lbl_from_blocks(const std::vector<FourierBlock>& blocks, int k);

// A closed-form bound together with the hypothesis it was evaluated under.
struct FamilyBound {
    double value = 0;
    std::string hypothesis;
};

// Simple walk ½(δ¹ + δ⁻¹) on ℤₙ.
FamilyBound zn_upper(int n, int k);   // n odd, k >= n²/40
FamilyBound zn_lower(int n, int k);   // n >= 7
// Nearest-neighbour walk on ℤ₂ⁿ at k = (n+1)(ln n + c)/4: bound on tv².
FamilyBound cube_upper_squared(int n, double c);  // n > 1, c > 0
// Permutation-representation walk on the dual of Sₙ: bounds on tv².
FamilyBound dual_sn_upper_squared(int n, double alpha);  // n >= 4, k = α nⁿ
FamilyBound dual_sn_lower_squared(int n, double beta);   // k = β(nⁿ − 1)
// Symmetric walks on KP (y = 0 or μ₅ = 0): bound on tv.
FamilyBound kp_symmetric_upper(const KpParams& p, int k);
// λ± = μ₁ − μ₄ ± sqrt((μ₂ − μ₃)² + μ₅²x²/2)
std::pair<double, double> kp_symmetric_eigenvalues(const KpParams& p);
// The second worked KP walk: ((√2+1)/4)^k and the α, β lower bound.
FamilyBound kp_example2_upper(int k);
FamilyBound kp_example2_lower(int k);          // parity-exact (∓ sign by k even / odd)
FamilyBound kp_example2_lower_uniform(int k);  // the (8β)^{-k/2} − (8α)^{-k/2} form for all k
// Sekine walk ¼(e^(0,1) + e^(1,0) + E¹¹ + E¹² + E²¹ + E²²).
FamilyBound sekine_upper(int n, double alpha);  // n >= 7, α >= 1, k = n²/80 + αn²
FamilyBound sekine_lower(int n, int k);
// sqrt(f(k,n)[1 + ½(γ/4)^{2k} + (n² − ½)(¾γ)^{2k} + (2n − 4)(√γ/2)^{2k}]), k >= 49.
double sekine_upper_chain(int n, double k);

// Closed-form per-irrep contributions d_α Tr[(ν̂^k)*ν̂^k] for the two
// catalog walks, keyed by the irrep names used in the catalog tables.
std::vector<std::pair<std::string, double>> zn_contributions(int n, int k);
std::vector<std::pair<std::string, double>> sekine_contributions(int n, int k);

// The Sekine walk state, and the classical walks of the catalog.
Functional sekine_walk_state(int n);
Functional zn_simple_state(const QuantumGroup& fzn);
Functional cube_walk_state(const QuantumGroup& fcube, int n);
// u(σ) = Σ αᵢ α_σ(i) with αᵢ = sqrt(n^{n−i}(n−1)/(nⁿ−1)), as a functional on ℂSₙ.
std::vector<cplx> dual_sn_values(int n);

struct LemmasumResidual {
    double odd = 0;   // Σ C(N+w, 2w+1) 2^w vs (αᴺ − βᴺ)/(2√3)
    double even = 0;  // Σ C(N+w, 2w) 2^w vs ((5α−1)αᴺ + (α+1)βᴺ)/(6α)
};
LemmasumResidual lemmasum_check(int N);

struct PathOracle {
    cplx direct;         // ν^{⋆k}(ρ₁₂) from the convolution power
    cplx combinatorial;  // loop / return / go path sum
    double difference = 0;
};
PathOracle kp_example2_path_oracle(int k);

struct BoundRow {
    int k = 0;
    std::optional<double> exact_tv;
    double l2 = 0;
    double sep = 0;
    double ubl = 0;
    double lbl = 0;  // lbl_from_blocks
    std::vector<std::pair<std::string, double>> contributions;
};

struct BoundSeries {
    std::vector<BoundRow> rows;
};

// Exact distances, ubl and lbl for k = 1..kmax.  Throws NumericalError if
// lbl ≤ tv ≤ ubl + 1e-9 fails at any step.
BoundSeries run_experiment(const QuantumGroup& qg, const IrrepTable& irreps, const Functional& nu, int kmax);

} // namespace qgw
