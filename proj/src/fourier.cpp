#include "qgw/fourier.hpp"

#include <algorithm>
#include <random>

#include "qgw/walks.hpp"

namespace qgw {

Functional fourier_map(const AlgebraElement& a, const QuantumGroup& qg) {
    if (a.shape() != qg.shape) throw StructuralError("fourier_map: element lives on a different algebra");
    const Vec c = a.coeffs();
    const Eigen::VectorXd w = qg.haar.basis_weights();
    Vec out(qg.dim());
    for (int i = 0; i < qg.dim(); ++i) out(i) = w(i) * c(qg.shape.adjoint_index(i));
    return Functional(qg.shape, out);
}

AlgebraElement fourier_inverse(const Functional& phi, const QuantumGroup& qg) {
    if (phi.shape() != qg.shape) throw StructuralError("fourier_inverse: functional lives on a different algebra");
    const Vec& c = phi.coeffs();
    const Eigen::VectorXd w = qg.haar.basis_weights();
    Vec out(qg.dim());
    for (int i = 0; i < qg.dim(); ++i) out(qg.shape.adjoint_index(i)) = c(i) / w(i);
    return AlgebraElement::from_coeffs(qg.shape, out);
}

cplx dual_haar(const Functional& phi, const QuantumGroup& qg) {
    return qg.counit(fourier_inverse(phi, qg));
}

FourierBlock fourier_at_irrep(const Functional& phi, const Irrep& irrep) {
    FourierBlock out{irrep.name, Mat(irrep.dim, irrep.dim)};
    for (int i = 0; i < irrep.dim; ++i)
        for (int j = 0; j < irrep.dim; ++j) {
            if (irrep.at(i, j).shape() != phi.shape())
                throw StructuralError("fourier_at_irrep: irrep belongs to a different quantum group");
            out.matrix(i, j) = phi(irrep.at(i, j).adjoint());
        }
    return out;
}

DistanceReport distances(const Functional& nu, const Functional& mu, const QuantumGroup& qg) {
    const AlgebraElement d = fourier_inverse(nu - mu, qg);
    DistanceReport r;
    r.tv = 0.5 * p_norm(d, qg.haar, PNorm::one);
    r.l2 = p_norm(d, qg.haar, PNorm::two);
    r.sep = p_norm(d, qg.haar, PNorm::inf);
    return r;
}

double tv_distance(const Functional& nu, const Functional& mu, const QuantumGroup& qg) {
    return 0.5 * p_norm(fourier_inverse(nu - mu, qg), qg.haar, PNorm::one);
}

double l2_distance(const Functional& nu, const Functional& mu, const QuantumGroup& qg) {
    return p_norm(fourier_inverse(nu - mu, qg), qg.haar, PNorm::two);
}

double separation_distance(const Functional& nu, const Functional& mu, const QuantumGroup& qg) {
    return p_norm(fourier_inverse(nu - mu, qg), qg.haar, PNorm::inf);
}

double tv_lower_via_projection(const Functional& nu, const AlgebraElement& p, const QuantumGroup& qg) {
    if (p.shape() != qg.shape) throw StructuralError("projection lives on a different algebra");
    const double scale = 1.0 + p.max_abs();
    if ((mul(p, p) - p).max_abs() > 1e-10 * scale || (p.adjoint() - p).max_abs() > 1e-10 * scale)
        throw ValidationError("tv_lower_via_projection needs p = p² = p*");
    return std::abs(nu(p) - qg.haar(p));
}

AlgebraElement star_A(const AlgebraElement& a, const AlgebraElement& b, const QuantumGroup& qg) {
    // v_x = haar(S(E_x) a), then Σ_{x,y} c_xy v_x E_y = P_v(b).
    const int n = qg.dim();
    Vec v(n);
    for (int x = 0; x < n; ++x) {
        const AlgebraElement sx = AlgebraElement::from_coeffs(qg.shape, qg.antipode.matrix().col(x));
        v(x) = qg.haar(mul(sx, a));
    }
    const LinearMap p = stochastic_operator(Functional(qg.shape, v), qg);
    return AlgebraElement::from_coeffs(qg.shape, p.apply(b.coeffs()));
}

double TheoremResiduals::worst() const {
    return std::max({plancherel, inversion, convolution, van_daele, fourier_star});
}

double verify_plancherel(const QuantumGroup& qg, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double r = 0.0;
    for (int s = 0; s < samples; ++s) {
        const AlgebraElement a = random_element(qg.shape, rng);
        const Functional fa = fourier_map(a, qg);
        const Functional fa_star = functional_adjoint(fa, qg);
        const cplx lhs = dual_haar(convolve(fa_star, fa, qg), qg);
        const cplx rhs = qg.haar(mul(a.adjoint(), a));
        r = std::max(r, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    return r;
}

double verify_inversion(const QuantumGroup& qg, const IrrepTable& irreps, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double r = 0.0;
    for (int s = 0; s < samples; ++s) {
        const AlgebraElement a = random_element(qg.shape, rng);
        const Functional fa = fourier_map(a, qg);
        cplx trace_sum = 0.0;
        AlgebraElement rebuilt = AlgebraElement::zero(qg.shape);
        for (const Irrep& irrep : irreps.irreps) {
            const FourierBlock fb = fourier_at_irrep(fa, irrep);
            trace_sum += static_cast<double>(irrep.dim) * fb.matrix.trace();
            for (int i = 0; i < irrep.dim; ++i)
                for (int j = 0; j < irrep.dim; ++j)
                    rebuilt += static_cast<double>(irrep.dim) * fb.matrix(i, j) * irrep.at(i, j);
        }
        r = std::max(r, std::abs(trace_sum - qg.counit(a)));
        r = std::max(r, (rebuilt - a).max_abs());
    }
    return r;
}

double verify_convolution(const QuantumGroup& qg, const IrrepTable& irreps, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double r = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Functional phi = random_state(qg, rng);
        const Functional psi = random_state(qg, rng);
        const Functional both = convolve(phi, psi, qg);
        for (const Irrep& irrep : irreps.irreps) {
            const Mat lhs = fourier_at_irrep(both, irrep).matrix;
            const Mat rhs = fourier_at_irrep(phi, irrep).matrix * fourier_at_irrep(psi, irrep).matrix;
            r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    }
    return r;
}

double verify_van_daele(const QuantumGroup& qg, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double r = 0.0;
    for (int s = 0; s < samples; ++s) {
        const AlgebraElement a = random_element(qg.shape, rng);
        const AlgebraElement b = random_element(qg.shape, rng);
        const Functional lhs = convolve(fourier_map(a, qg), fourier_map(b, qg), qg);
        const Functional rhs = fourier_map(star_A(a, b, qg), qg);
        r = std::max(r, max_diff(lhs, rhs));
    }
    return r;
}

double verify_fourier_star(const QuantumGroup& qg, const IrrepTable& irreps, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double r = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Functional phi = random_state(qg, rng);
        const Functional phi_star = functional_adjoint(phi, qg);
        for (const Irrep& irrep : irreps.irreps) {
            const Mat lhs = fourier_at_irrep(phi_star, irrep).matrix;
            const Mat rhs = fourier_at_irrep(phi, irrep).matrix.adjoint();
            r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    }
    return r;
}

TheoremResiduals verify_theorems(const QuantumGroup& qg, const IrrepTable& irreps, int samples) {
    TheoremResiduals t;
    t.plancherel = verify_plancherel(qg, samples);
    t.inversion = verify_inversion(qg, irreps, samples);
    t.convolution = verify_convolution(qg, irreps, samples);
    t.van_daele = verify_van_daele(qg, samples);
    t.fourier_star = verify_fourier_star(qg, irreps, samples);
    return t;
}

} // namespace qgw
