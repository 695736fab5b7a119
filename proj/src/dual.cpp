// Numerical Wedderburn decomposition of the convolution algebra of
// functionals, and transport of the dual Hopf structure into block form.
//
// Functionals are coefficient vectors c with φ(E_i) = c_i.  The coordinates
// x_i = c_i / sqrt(w_i) make the dual Haar inner product the standard one,
// so left convolution operators are a *-representation and Hermitian
// eigensolvers apply.

#include <algorithm>
#include <cmath>
#include <random>

#include "qgw/hopf.hpp"

namespace qgw {

namespace {

class ConvolutionAlgebra {
public:
    explicit ConvolutionAlgebra(const QuantumGroup& qg)
        : qg_(qg), n_(qg.dim()), cols_(sparse_columns(qg.delta.matrix())) {
        const Eigen::VectorXd bw = qg.haar.basis_weights();
        sqrt_w_ = bw.cwiseSqrt();
    }

    int dim() const { return n_; }

    Vec conv(const Vec& a, const Vec& b) const {
        Vec out = Vec::Zero(n_);
        for (int c = 0; c < n_; ++c) {
            cplx s = 0.0;
            for (const auto& [t, v] : cols_[c]) s += a(t / n_) * b(t % n_) * v;
            out(c) = s;
        }
        return out;
    }

    Vec star(const Vec& a) const {
        return functional_adjoint(Functional(qg_.shape, a), qg_).coeffs();
    }

    // Left convolution by h in Hermitian coordinates.
    Mat left_hermitian(const Vec& h) const {
        Mat l = Mat::Zero(n_, n_);
        for (int c = 0; c < n_; ++c)
            for (const auto& [t, v] : cols_[c]) l(c, t % n_) += h(t / n_) * v;
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) l(r, c) *= sqrt_w_(c) / sqrt_w_(r);
        return l;
    }

    Vec to_x(const Vec& c) const { return c.cwiseQuotient(sqrt_w_.cast<cplx>()); }
    Vec from_x(const Vec& x) const { return x.cwiseProduct(sqrt_w_.cast<cplx>()); }

    // Basis of the centre: the common kernel of L_{e_a} - R_{e_a} over all a.
    Mat centre_basis() const {
        Mat k = Mat::Zero(static_cast<Eigen::Index>(n_) * n_, n_);
        const Mat& d = qg_.delta.matrix();
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    k(static_cast<Eigen::Index>(a) * n_ + c, b) = d(a * n_ + b, c) - d(b * n_ + a, c);
        const Mat gram = k.adjoint() * k;
        Eigen::SelfAdjointEigenSolver<Mat> es(gram);
        const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
        std::vector<int> null;
        for (int i = 0; i < n_; ++i)
            if (es.eigenvalues()(i) < 1e-10 * scale) null.push_back(i);
        Mat out(n_, static_cast<Eigen::Index>(null.size()));
        for (std::size_t i = 0; i < null.size(); ++i) out.col(i) = es.eigenvectors().col(null[i]);
        return out;
    }

private:
    const QuantumGroup& qg_;
    int n_;
    std::vector<SparseVec> cols_;
    Eigen::VectorXd sqrt_w_;
};

// Groups the indices of sorted eigenvalues into runs of near-equal values.
std::vector<std::vector<int>> cluster(const Eigen::VectorXd& ev, double tol) {
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < ev.size(); ++i) {
        if (groups.empty() || ev(i) - ev(groups.back().back()) > tol) groups.emplace_back();
        groups.back().push_back(i);
    }
    return groups;
}

int exact_sqrt(std::size_t m) {
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
    return static_cast<std::size_t>(r) * r == m ? r : -1;
}

Vec random_vec(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
    return v;
}

double cluster_tolerance(const Eigen::VectorXd& ev) {
    return 1e-7 * (1.0 + ev.cwiseAbs().maxCoeff());
}

struct WedderburnBlock {
    int d;
    std::vector<Vec> units;  // coefficient vectors of e_kl, row-major
};

constexpr int kMaxAttempts = 8;

std::vector<WedderburnBlock> decompose(const QuantumGroup& qg) {
    ConvolutionAlgebra alg(qg);
    const int n = alg.dim();
    std::mt19937_64 rng(0x5eed'd0a1ULL);

    const Mat centre = alg.centre_basis();
    const int num_blocks = static_cast<int>(centre.cols());
    if (num_blocks == 0) throw NumericalError("dual: convolution algebra has trivial centre");

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Vec g = centre * random_vec(num_blocks, rng);
        Vec z = g + alg.star(g);
        Mat lz = alg.left_hermitian(z);
        if ((lz - lz.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * (1.0 + lz.cwiseAbs().maxCoeff()))
            throw NumericalError("dual: left convolution is not a *-representation; Haar weights inconsistent");
        lz = 0.5 * (lz + lz.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Mat> es(lz);
        const auto groups = cluster(es.eigenvalues(), cluster_tolerance(es.eigenvalues()));
        if (static_cast<int>(groups.size()) != num_blocks) continue;
        bool square = true;
        for (const auto& gr : groups) square = square && exact_sqrt(gr.size()) > 0;
        if (!square) continue;

        const Vec unit_x = alg.to_x(qg.counit.coeffs());
        std::vector<WedderburnBlock> blocks;
        bool ok = true;
        for (const auto& gr : groups) {
            const int d = exact_sqrt(gr.size());
            Mat basis(n, static_cast<Eigen::Index>(gr.size()));
            for (std::size_t i = 0; i < gr.size(); ++i) basis.col(i) = es.eigenvectors().col(gr[i]);
            const Vec pj = alg.from_x(basis * (basis.adjoint() * unit_x));

            // Minimal projections inside the block.
            std::vector<Vec> minimal;
            if (d == 1) {
                minimal.push_back(pj);
            } else {
                Vec hr = random_vec(n, rng);
                Vec h = alg.conv(pj, hr + alg.star(hr));
                Mat lh = basis.adjoint() * alg.left_hermitian(h) * basis;
                lh = 0.5 * (lh + lh.adjoint()).eval();
                Eigen::SelfAdjointEigenSolver<Mat> inner(lh);
                const auto sub = cluster(inner.eigenvalues(), cluster_tolerance(inner.eigenvalues()));
                if (static_cast<int>(sub.size()) != d) { ok = false; break; }
                const Vec pj_local = basis.adjoint() * alg.to_x(pj);
                for (const auto& s : sub) {
                    if (static_cast<int>(s.size()) != d) { ok = false; break; }
                    Mat y(static_cast<Eigen::Index>(gr.size()), d);
                    for (int i = 0; i < d; ++i) y.col(i) = inner.eigenvectors().col(s[i]);
                    minimal.push_back(alg.from_x(basis * (y * (y.adjoint() * pj_local))));
                }
                if (!ok) break;
            }

            // Column of matrix units e_k1, then e_kl = e_k1 e_l1*.
            std::vector<Vec> col1(d);
            col1[0] = minimal[0];
            const Vec q1x = alg.to_x(minimal[0]);
            for (int k = 1; k < d; ++k) {
                Vec x = alg.conv(alg.conv(minimal[k], random_vec(n, rng)), minimal[0]);
                Vec y = alg.conv(alg.star(x), x);
                const double c = (q1x.dot(alg.to_x(y)) / q1x.squaredNorm()).real();
                if (!(c > 1e-10)) { ok = false; break; }
                col1[k] = x / std::sqrt(c);
            }
            if (!ok) break;
            WedderburnBlock wb{d, {}};
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    wb.units.push_back(l == 0 ? col1[k] : alg.conv(col1[k], alg.star(col1[l])));
            blocks.push_back(std::move(wb));
        }
        if (!ok) continue;
        std::stable_sort(blocks.begin(), blocks.end(),
                         [](const WedderburnBlock& a, const WedderburnBlock& b) { return a.d < b.d; });
        return blocks;
    }
    throw NumericalError("dual: block diagonalisation did not separate the convolution algebra");
}

} // namespace

DualGroup dual(const QuantumGroup& qg) {
    qg.check_structure();
    const int n = qg.dim();
    const auto blocks = decompose(qg);

    std::vector<int> dims;
    for (const auto& b : blocks) dims.push_back(b.d);
    BlockShape shape(dims);
    if (shape.dim() != n) throw NumericalError("dual: block dimensions do not add up");

    Mat u(n, n);
    int col = 0;
    for (const auto& b : blocks)
        for (const auto& e : b.units) u.col(col++) = e;
    Eigen::FullPivLU<Mat> lu(u);
    if (!lu.isInvertible()) throw NumericalError("dual: matrix units are linearly dependent");
    const Mat t = lu.inverse();

    // Δ̂(φ)(E_a ⊗ E_b) = φ(E_a E_b).
    Mat delta = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
    for (int f = 0; f < n; ++f) {
        Mat x = Mat::Zero(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int c = unit_product(qg.shape, a, b);
                if (c >= 0) x(a, b) = u(c, f);
            }
        const Mat y = t * x * t.transpose();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) delta(i * n + j, f) = y(i, j);
    }

    const Vec unit = AlgebraElement::unit(qg.shape).coeffs();
    const Vec counit = u.transpose() * unit;
    const Mat antipode = t * qg.antipode.matrix().transpose() * u;

    // Normalised dual Haar: φ ↦ ε(ℱ⁻¹φ) / dim.
    const Eigen::VectorXd bw = qg.haar.basis_weights();
    std::vector<double> weights;
    for (int j = 0; j < shape.num_blocks(); ++j) {
        const Vec e11 = u.col(shape.index(j, 0, 0));
        cplx s = 0.0;
        for (int i = 0; i < n; ++i) s += qg.counit.coeffs()(i) * e11(qg.shape.adjoint_index(i)) / bw(i);
        weights.push_back(s.real() / n);
    }
    double total = 0.0;
    for (int j = 0; j < shape.num_blocks(); ++j) total += weights[j] * shape.block_dim(j);
    if (std::abs(total - 1.0) > 1e-8) throw NumericalError("dual: Haar weights failed to normalise");
    for (double& w : weights) w /= total;

    // Snap rounding noise to exact zeros so sparse exports stay small.
    auto clean = [](Mat m) {
        for (Eigen::Index i = 0; i < m.size(); ++i) {
            cplx& v = m.data()[i];
            if (std::abs(v.real()) < 1e-13) v.real(0.0);
            if (std::abs(v.imag()) < 1e-13) v.imag(0.0);
        }
        return m;
    };

    DualGroup out;
    out.group.shape = shape;
    out.group.delta = LinearMap(clean(delta));
    out.group.counit = Functional(shape, clean(counit));
    out.group.antipode = LinearMap(clean(antipode));
    out.group.haar = HaarWeights(shape, weights);
    out.group.label = "dual(" + qg.label + ")";
    out.to_blocks = t;
    out.from_blocks = u;
    return out;
}

} // namespace qgw
