#include "qgw/walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qgw/catalog.hpp"
#include "qgw/fourier.hpp"

namespace qgw {

namespace {

void check_shapes(const Functional& f, const QuantumGroup& qg) {
    if (f.shape() != qg.shape) throw StructuralError("functional lives on a different algebra");
}

} // namespace

Functional convolve(const Functional& phi, const Functional& psi, const QuantumGroup& qg) {
    check_shapes(phi, qg);
    check_shapes(psi, qg);
    const Vec pair = kron(phi.coeffs(), psi.coeffs());
    return Functional(qg.shape, qg.delta.matrix().transpose() * pair);
}

LinearMap stochastic_operator(const Functional& nu, const QuantumGroup& qg) {
    check_shapes(nu, qg);
    const int n = qg.dim();
    const Mat& d = qg.delta.matrix();
    Mat p = Mat::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        const cplx va = nu.coeffs()(a);
        if (va == cplx(0.0)) continue;
        p += va * d.middleRows(static_cast<Eigen::Index>(a) * n, n);
    }
    return LinearMap(std::move(p));
}

Functional convolution_power(const Functional& nu, int k, const QuantumGroup& qg) {
    if (k < 0) throw DomainError("convolution_power needs k >= 0");
    const bool state = is_state(nu, qg).valid;
    Mat base = stochastic_operator(nu, qg).matrix().transpose();
    Vec acc = qg.counit.coeffs();
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) acc = base * acc;
        if (e > 1) base = base * base;
    }
    Functional out(qg.shape, acc);
    if (state) {
        const StateReport r = is_state(out, qg, 1e-8);
        if (!r.valid) throw NumericalError("convolution power drifted away from the state space");
    }
    return out;
}

std::vector<Functional> convolution_powers(const Functional& nu, int kmax, const QuantumGroup& qg) {
    if (kmax < 1) throw DomainError("convolution_powers needs kmax >= 1");
    const Mat pt = stochastic_operator(nu, qg).matrix().transpose();
    std::vector<Functional> out;
    Vec cur = nu.coeffs();
    out.emplace_back(qg.shape, cur);
    for (int k = 2; k <= kmax; ++k) {
        cur = pt * cur;
        out.emplace_back(qg.shape, cur);
    }
    return out;
}

StateReport is_state(const Functional& phi, const QuantumGroup& qg, double tol) {
    check_shapes(phi, qg);
    StateReport r;
    const AlgebraElement a = fourier_inverse(phi, qg);
    r.hermitian_residual = (a - a.adjoint()).max_abs();
    r.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (int b = 0; b < qg.shape.num_blocks(); ++b) {
        const Mat h = 0.5 * (a.block(b) + a.block(b).adjoint());
        const double m = Eigen::SelfAdjointEigenSolver<Mat>(h, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
        r.block_min_eigenvalues.push_back(m);
        r.min_eigenvalue = std::min(r.min_eigenvalue, m);
    }
    r.normalisation = std::abs(phi(AlgebraElement::unit(qg.shape)) - 1.0);
    // The Riesz element scales like 1/w, so compare against its size.
    const double scale = 1.0 + a.max_abs();
    r.valid = r.min_eigenvalue >= -tol * scale && r.hermitian_residual <= tol * scale && r.normalisation <= tol;
    return r;
}

void require_state(const Functional& phi, const QuantumGroup& qg, double tol) {
    const StateReport r = is_state(phi, qg, tol);
    if (r.valid) return;
    if (r.normalisation > tol) throw ValidationError("not a state: value on the unit is not 1");
    if (r.hermitian_residual > tol) throw ValidationError("not a state: functional is not self-adjoint");
    throw ValidationError("not a state: density has a negative eigenvalue " + std::to_string(r.min_eigenvalue));
}

Functional cesaro(const Functional& nu, int n, const QuantumGroup& qg) {
    if (n < 1) throw DomainError("cesaro needs n >= 1");
    const auto powers = convolution_powers(nu, n, qg);
    Vec sum = Vec::Zero(qg.dim());
    for (const auto& p : powers) sum += p.coeffs();
    return Functional(qg.shape, sum / static_cast<double>(n));
}

double symmetry_residual(const Functional& nu, const QuantumGroup& qg) {
    check_shapes(nu, qg);
    const Vec composed = qg.antipode.matrix().transpose() * nu.coeffs();
    return (composed - nu.coeffs()).cwiseAbs().maxCoeff();
}

bool is_symmetric(const Functional& nu, const QuantumGroup& qg, double tol) {
    return symmetry_residual(nu, qg) <= tol;
}

Functional haar_state(const QuantumGroup& qg) { return qg.haar_functional(); }

AlgebraElement random_element(const BlockShape& shape, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vec c(shape.dim());
    for (int i = 0; i < shape.dim(); ++i) c(i) = cplx(g(rng), g(rng));
    return AlgebraElement::from_coeffs(shape, c);
}

Functional random_functional(const BlockShape& shape, std::mt19937_64& rng) {
    return Functional(shape, random_element(shape, rng).coeffs());
}

Functional random_state(const QuantumGroup& qg, std::mt19937_64& rng) {
    const AlgebraElement b = random_element(qg.shape, rng);
    AlgebraElement density = mul(b.adjoint(), b);
    const double mass = qg.haar(density).real();
    density *= cplx(1.0 / mass);
    return fourier_map(density, qg);
}

Functional kp_state(const KpParams& p) {
    double total = 0.0;
    for (double m : p.mu) {
        if (m < -1e-12) throw ValidationError("kp_state: weights must be nonnegative");
        total += m;
    }
    if (std::abs(total - 1.0) > 1e-10) throw ValidationError("kp_state: weights must sum to 1");
    if (p.x * p.x + p.y * p.y + p.z * p.z > 1.0 + 1e-12)
        throw ValidationError("kp_state: x² + y² + z² must not exceed 1");
    const BlockShape shape({1, 1, 1, 1, 2});
    Vec c(8);
    for (int i = 0; i < 4; ++i) c(i) = p.mu[i];
    const double h = p.mu[4] / 2.0;
    c(4) = h * (1.0 + p.z);
    c(5) = h * cplx(p.x, -p.y);
    c(6) = h * cplx(p.x, p.y);
    c(7) = h * (1.0 - p.z);
    return Functional(shape, c);
}

Functional sekine_state(int n, const std::vector<double>& point_weights, const Mat& density) {
    if (n < 1) throw DomainError("sekine_state needs n >= 1");
    if (static_cast<int>(point_weights.size()) != n * n) throw ValidationError("sekine_state: expected n² point weights");
    if (density.rows() != n || density.cols() != n) throw ValidationError("sekine_state: density must be n × n");
    double total = density.trace().real();
    for (double x : point_weights) {
        if (x < -1e-12) throw ValidationError("sekine_state: point weights must be nonnegative");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-10) throw ValidationError("sekine_state: total mass must be 1");
    if ((density - density.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw ValidationError("sekine_state: density must be Hermitian");
    if (Eigen::SelfAdjointEigenSolver<Mat>(density, Eigen::EigenvaluesOnly).eigenvalues().minCoeff() < -1e-12)
        throw ValidationError("sekine_state: density must be positive semidefinite");
    std::vector<int> dims(static_cast<std::size_t>(n) * n, 1);
    dims.push_back(n);
    const BlockShape shape(dims);
    Vec c(shape.dim());
    for (int i = 0; i < n * n; ++i) c(i) = point_weights[i];
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) c(n * n + p * n + q) = density(p, q);
    return Functional(shape, c);
}

} // namespace qgw
