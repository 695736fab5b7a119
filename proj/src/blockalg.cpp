#include "qgw/blockalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qgw {

BlockShape::BlockShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw StructuralError("block shape needs at least one block");
    offsets_.reserve(dims_.size());
    for (int n : dims_) {
        if (n < 1) throw StructuralError("block dimensions must be positive");
        offsets_.push_back(dim_);
        dim_ += n * n;
    }
    units_.reserve(dim_);
    for (int b = 0; b < num_blocks(); ++b)
        for (int p = 0; p < dims_[b]; ++p)
            for (int q = 0; q < dims_[b]; ++q) units_.push_back({b, p, q});
}

AlgebraElement::AlgebraElement(BlockShape shape, std::vector<Mat> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != shape_.num_blocks())
        throw StructuralError("block count does not match shape");
    for (int b = 0; b < shape_.num_blocks(); ++b) {
        const int n = shape_.block_dim(b);
        if (blocks_[b].rows() != n || blocks_[b].cols() != n)
            throw StructuralError("block " + std::to_string(b) + " has wrong size");
    }
}

AlgebraElement AlgebraElement::zero(const BlockShape& shape) {
    std::vector<Mat> blocks;
    for (int n : shape.dims()) blocks.push_back(Mat::Zero(n, n));
    return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::unit(const BlockShape& shape) {
    std::vector<Mat> blocks;
    for (int n : shape.dims()) blocks.push_back(Mat::Identity(n, n));
    return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::basis(const BlockShape& shape, int index) {
    AlgebraElement e = zero(shape);
    const auto& u = shape.unit(index);
    e.blocks_[u.block](u.row, u.col) = 1.0;
    return e;
}

AlgebraElement AlgebraElement::from_coeffs(const BlockShape& shape, const Vec& coeffs) {
    if (coeffs.size() != shape.dim()) throw StructuralError("coefficient vector has wrong length");
    std::vector<Mat> blocks;
    for (int b = 0; b < shape.num_blocks(); ++b) {
        const int n = shape.block_dim(b);
        Mat m(n, n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) m(p, q) = coeffs(shape.index(b, p, q));
        blocks.push_back(std::move(m));
    }
    return AlgebraElement(shape, std::move(blocks));
}

Vec AlgebraElement::coeffs() const {
    Vec v(shape_.dim());
    for (int b = 0; b < shape_.num_blocks(); ++b) {
        const int n = shape_.block_dim(b);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) v(shape_.index(b, p, q)) = blocks_[b](p, q);
    }
    return v;
}

AlgebraElement AlgebraElement::adjoint() const {
    std::vector<Mat> blocks;
    for (const auto& m : blocks_) blocks.push_back(m.adjoint());
    return AlgebraElement(shape_, std::move(blocks));
}

static void check_same(const BlockShape& a, const BlockShape& b) {
    if (a != b) throw StructuralError("algebra elements have different shapes");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    check_same(shape_, o.shape_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] += o.blocks_[b];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    check_same(shape_, o.shape_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] -= o.blocks_[b];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(cplx s) {
    for (auto& m : blocks_) m *= s;
    return *this;
}

double AlgebraElement::max_abs() const {
    double r = 0.0;
    for (const auto& m : blocks_)
        if (m.size() > 0) r = std::max(r, m.cwiseAbs().maxCoeff());
    return r;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(cplx s, AlgebraElement a) { return a *= s; }

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    check_same(a.shape(), b.shape());
    std::vector<Mat> blocks;
    for (int i = 0; i < a.shape().num_blocks(); ++i) blocks.push_back(a.block(i) * b.block(i));
    return AlgebraElement(a.shape(), std::move(blocks));
}

int unit_product(const BlockShape& shape, int a, int b) {
    const auto& ua = shape.unit(a);
    const auto& ub = shape.unit(b);
    if (ua.block != ub.block || ua.col != ub.row) return -1;
    return shape.index(ua.block, ua.row, ub.col);
}

HaarWeights::HaarWeights(BlockShape shape, std::vector<double> weights)
    : shape_(std::move(shape)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != shape_.num_blocks())
        throw StructuralError("one Haar weight per block is required");
    double total = 0.0;
    for (int b = 0; b < shape_.num_blocks(); ++b) {
        if (!(weights_[b] > 0.0)) throw ValidationError("Haar weights must be positive");
        total += weights_[b] * shape_.block_dim(b);
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw ValidationError("Haar weights do not normalise the unit (Σ w n = " +
                              std::to_string(total) + ")");
}

cplx HaarWeights::operator()(const AlgebraElement& a) const {
    check_same(shape_, a.shape());
    cplx s = 0.0;
    for (int b = 0; b < shape_.num_blocks(); ++b) s += weights_[b] * a.block(b).trace();
    return s;
}

cplx HaarWeights::apply_coeffs(const Vec& c) const {
    cplx s = 0.0;
    for (int b = 0; b < shape_.num_blocks(); ++b)
        for (int p = 0; p < shape_.block_dim(b); ++p) s += weights_[b] * c(shape_.index(b, p, p));
    return s;
}

Eigen::VectorXd HaarWeights::basis_weights() const {
    Eigen::VectorXd w(shape_.dim());
    for (int i = 0; i < shape_.dim(); ++i) w(i) = weights_[shape_.unit(i).block];
    return w;
}

LinearMap::LinearMap(int source_dim, int target_dim) : m_(Mat::Zero(target_dim, source_dim)) {}

LinearMap::LinearMap(Mat matrix) : m_(std::move(matrix)) {}

LinearMap LinearMap::identity(int dim) { return LinearMap(Mat::Identity(dim, dim)); }

Vec LinearMap::apply(const Vec& v) const {
    if (v.size() != m_.cols()) throw StructuralError("linear map applied to vector of wrong length");
    return m_ * v;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.target_dim() != source_dim()) throw StructuralError("composition dimensions disagree");
    return LinearMap(Mat(m_ * inner.m_));
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) { return LinearMap(kron(f.matrix(), g.matrix())); }

AlgebraElement op_abs(const AlgebraElement& a) {
    std::vector<Mat> blocks;
    for (const auto& m : a.blocks()) {
        const Mat h = m.adjoint() * m;
        Eigen::SelfAdjointEigenSolver<Mat> es(h);
        Eigen::VectorXd ev = es.eigenvalues();
        for (Eigen::Index i = 0; i < ev.size(); ++i)
            ev(i) = std::sqrt(std::max(ev(i), 0.0));
        blocks.push_back(es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint());
    }
    return AlgebraElement(a.shape(), std::move(blocks));
}

namespace {

// Singular values of each block.
std::vector<Eigen::VectorXd> singular_values(const AlgebraElement& a) {
    std::vector<Eigen::VectorXd> out;
    for (const auto& m : a.blocks()) out.push_back(Eigen::JacobiSVD<Mat>(m).singularValues());
    return out;
}

} // namespace

double p_norm(const AlgebraElement& a, const HaarWeights& h, PNorm p) {
    check_same(a.shape(), h.shape());
    if (p == PNorm::two) {
        double s = 0.0;
        for (int b = 0; b < a.shape().num_blocks(); ++b) s += h.weight(b) * a.block(b).squaredNorm();
        return std::sqrt(s);
    }
    const auto sv = singular_values(a);
    if (p == PNorm::inf) {
        double r = 0.0;
        for (const auto& v : sv) r = std::max(r, v.maxCoeff());
        return r;
    }
    double s = 0.0;
    for (int b = 0; b < a.shape().num_blocks(); ++b) s += h.weight(b) * sv[b].sum();
    return s;
}

Vec tensor(const AlgebraElement& a, const AlgebraElement& b) { return kron(a.coeffs(), b.coeffs()); }

double min_eigenvalue(const AlgebraElement& a) {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& m : a.blocks()) {
        const Mat herm = 0.5 * (m + m.adjoint());
        Eigen::SelfAdjointEigenSolver<Mat> es(herm, Eigen::EigenvaluesOnly);
        r = std::min(r, es.eigenvalues().minCoeff());
    }
    return r;
}

} // namespace qgw

// Functional lives with the algebra kernel: every module pairs against it.
#include "qgw/functional.hpp"

namespace qgw {

Functional::Functional(BlockShape shape, Vec coeffs) : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != shape_.dim()) throw StructuralError("functional has wrong number of coefficients");
}

Functional Functional::zero(const BlockShape& shape) { return Functional(shape, Vec::Zero(shape.dim())); }

Functional Functional::dual_basis(const BlockShape& shape, int index) {
    Vec c = Vec::Zero(shape.dim());
    c(index) = 1.0;
    return Functional(shape, c);
}

cplx Functional::operator()(const AlgebraElement& a) const {
    check_same(shape_, a.shape());
    return coeffs_.transpose() * a.coeffs();
}

cplx Functional::apply(const Vec& c) const {
    if (c.size() != coeffs_.size()) throw StructuralError("functional applied to vector of wrong length");
    return coeffs_.transpose() * c;
}

Functional& Functional::operator+=(const Functional& o) {
    check_same(shape_, o.shape_);
    coeffs_ += o.coeffs_;
    return *this;
}

Functional& Functional::operator-=(const Functional& o) {
    check_same(shape_, o.shape_);
    coeffs_ -= o.coeffs_;
    return *this;
}

Functional& Functional::operator*=(cplx s) {
    coeffs_ *= s;
    return *this;
}

Functional operator+(Functional a, const Functional& b) { return a += b; }
Functional operator-(Functional a, const Functional& b) { return a -= b; }
Functional operator*(cplx s, Functional a) { return a *= s; }

double max_diff(const Functional& a, const Functional& b) {
    check_same(a.shape(), b.shape());
    return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

} // namespace qgw
