#pragma once
//
// Finite-dimensional C*-algebras written as direct sums of full matrix
// blocks, M_{n_1} ⊕ ... ⊕ M_{n_m}, over the complex numbers.
//
// Every vector of coefficients in this library refers to the canonical basis
// of matrix units, ordered block-major and row-major inside a block.  The
// tensor square uses left-factor-major order, (i, j) -> i * dim + j.
//

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qgw/errors.hpp"

namespace qgw {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

class BlockShape {
public:
    struct Unit {
        int block;
        int row;
        int col;
    };

    BlockShape() = default;
    explicit BlockShape(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int num_blocks() const { return static_cast<int>(dims_.size()); }
    int block_dim(int b) const { return dims_[b]; }
    int offset(int b) const { return offsets_[b]; }
    // Σ n_i², the dimension of the algebra as a vector space.
    int dim() const { return dim_; }

    int index(int block, int row, int col) const {
        return offsets_[block] + row * dims_[block] + col;
    }
    const Unit& unit(int i) const { return units_[i]; }
    // Index of the adjoint matrix unit, E_pq -> E_qp.
    int adjoint_index(int i) const {
        const Unit& u = units_[i];
        return index(u.block, u.col, u.row);
    }

    bool operator==(const BlockShape& other) const { return dims_ == other.dims_; }
    bool operator!=(const BlockShape& other) const { return !(*this == other); }

private:
    std::vector<int> dims_;
    std::vector<int> offsets_;
    std::vector<Unit> units_;
    int dim_ = 0;
};

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(BlockShape shape, std::vector<Mat> blocks);

    static AlgebraElement zero(const BlockShape& shape);
    static AlgebraElement unit(const BlockShape& shape);
    static AlgebraElement basis(const BlockShape& shape, int index);
    static AlgebraElement from_coeffs(const BlockShape& shape, const Vec& coeffs);

    const BlockShape& shape() const { return shape_; }
    const std::vector<Mat>& blocks() const { return blocks_; }
    const Mat& block(int b) const { return blocks_[b]; }
    Mat& block(int b) { return blocks_[b]; }

    Vec coeffs() const;
    AlgebraElement adjoint() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(cplx s);

    // Largest absolute coefficient.
    double max_abs() const;

private:
    BlockShape shape_;
    std::vector<Mat> blocks_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(cplx s, AlgebraElement a);

// Blockwise matrix product.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

// Structure table of the matrix-unit basis: E_a E_b is either 0 or a single
// matrix unit.  Returns that index or -1.
int unit_product(const BlockShape& shape, int a, int b);

class HaarWeights {
public:
    HaarWeights() = default;
    // Throws ValidationError unless every weight is positive and Σ w_i n_i = 1.
    HaarWeights(BlockShape shape, std::vector<double> weights);

    const BlockShape& shape() const { return shape_; }
    const std::vector<double>& weights() const { return weights_; }
    double weight(int b) const { return weights_[b]; }

    // haar(a) = Σ_b w_b Tr(a_b)
    cplx operator()(const AlgebraElement& a) const;
    cplx apply_coeffs(const Vec& coeffs) const;
    // The weight attached to each basis index (diagonal of the Gram matrix
    // of matrix units under the Haar inner product).
    Eigen::VectorXd basis_weights() const;

private:
    BlockShape shape_;
    std::vector<double> weights_;
};

class LinearMap {
public:
    LinearMap() = default;
    LinearMap(int source_dim, int target_dim);
    explicit LinearMap(Mat matrix);

    static LinearMap identity(int dim);

    int source_dim() const { return static_cast<int>(m_.cols()); }
    int target_dim() const { return static_cast<int>(m_.rows()); }
    const Mat& matrix() const { return m_; }
    Mat& matrix() { return m_; }

    Vec apply(const Vec& v) const;
    // this ∘ inner
    LinearMap compose(const LinearMap& inner) const;

private:
    Mat m_;
};

// Tensor product of two maps in the left-factor-major convention.
LinearMap kron(const LinearMap& f, const LinearMap& g);
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

// (a*a)^{1/2}, one Hermitian eigendecomposition per block.  Eigenvalues of
// a*a smaller in magnitude than 1e-12 (1 + ‖a*a‖_∞) are clamped to zero.
AlgebraElement op_abs(const AlgebraElement& a);

enum class PNorm { one, two, inf };

// (haar |a|^p)^{1/p}; for p = ∞ the largest block operator norm.
double p_norm(const AlgebraElement& a, const HaarWeights& h, PNorm p);

// Coefficients of a ⊗ b in the tensor-square basis.
Vec tensor(const AlgebraElement& a, const AlgebraElement& b);

// Smallest eigenvalue over all blocks of the Hermitian part of a.
double min_eigenvalue(const AlgebraElement& a);

} // namespace qgw
