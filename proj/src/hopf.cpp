#include "qgw/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace qgw {

void QuantumGroup::check_structure() const {
    const int d = shape.dim();
    if (delta.source_dim() != d || delta.target_dim() != d * d)
        throw StructuralError("comultiplication must map dim -> dim²");
    if (antipode.source_dim() != d || antipode.target_dim() != d)
        throw StructuralError("antipode must map dim -> dim");
    if (counit.shape() != shape) throw StructuralError("counit shape differs from algebra shape");
    if (haar.shape() != shape) throw StructuralError("Haar weights shape differs from algebra shape");
}

Functional QuantumGroup::haar_functional() const {
    Vec c = Vec::Zero(dim());
    for (int b = 0; b < shape.num_blocks(); ++b)
        for (int p = 0; p < shape.block_dim(b); ++p) c(shape.index(b, p, p)) = haar.weight(b);
    return Functional(shape, c);
}

std::vector<SparseVec> sparse_columns(const Mat& m, double drop) {
    std::vector<SparseVec> cols(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const cplx v = m(i, j);
            if (std::abs(v) > drop) cols[j].emplace_back(static_cast<int>(i), v);
        }
    return cols;
}

HopfDescriptor to_descriptor(const QuantumGroup& qg) {
    qg.check_structure();
    const int d = qg.dim();
    HopfDescriptor out;
    out.label = qg.label;
    out.dim = d;
    out.products.resize(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const int c = unit_product(qg.shape, a, b);
            if (c >= 0) out.products[a * d + b].emplace_back(c, 1.0);
        }
    out.unit = AlgebraElement::unit(qg.shape).coeffs();
    out.star_of_basis = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i) out.star_of_basis(qg.shape.adjoint_index(i), i) = 1.0;
    out.delta = qg.delta;
    out.counit = qg.counit.coeffs();
    out.antipode = qg.antipode;
    out.haar = qg.haar_functional().coeffs();
    return out;
}

std::vector<std::pair<std::string, double>> AxiomReport::residuals() const {
    return {{"coassociativity", coassociativity},
            {"counit_left", counit_left},
            {"counit_right", counit_right},
            {"antipode_left", antipode_left},
            {"antipode_right", antipode_right},
            {"delta_homomorphism", delta_homomorphism},
            {"delta_star", delta_star},
            {"haar_left_invariance", haar_left_invariance},
            {"haar_right_invariance", haar_right_invariance},
            {"haar_traciality", haar_traciality},
            {"kac", kac}};
}

double AxiomReport::worst() const {
    double r = 0.0;
    for (const auto& [name, v] : residuals()) r = std::max(r, v);
    return r;
}

bool AxiomReport::accepted(double tol) const {
    for (const auto& [name, v] : residuals())
        if (!(v <= tol)) return false;
    return true;
}

namespace {

// Dense accumulator that remembers which entries it touched, so repeated
// use over many basis pairs costs only the nonzeros.
class Accumulator {
public:
    explicit Accumulator(std::size_t n) : v_(n, cplx(0.0)), seen_(n, false) {}
    void add(std::size_t i, cplx c) {
        if (!seen_[i]) {
            seen_[i] = true;
            touched_.push_back(i);
        }
        v_[i] += c;
    }
    cplx get(std::size_t i) const { return v_[i]; }
    const std::vector<std::size_t>& touched() const { return touched_; }
    void clear() {
        for (std::size_t i : touched_) {
            v_[i] = 0.0;
            seen_[i] = false;
        }
        touched_.clear();
    }

private:
    std::vector<cplx> v_;
    std::vector<bool> seen_;
    std::vector<std::size_t> touched_;
};

double diff_against(const Accumulator& acc, const SparseVec& expected, std::size_t n) {
    // Compare acc with a sparse vector, looking at the union of supports.
    std::unordered_map<std::size_t, cplx> e;
    for (const auto& [i, v] : expected) e[static_cast<std::size_t>(i)] += v;
    double r = 0.0;
    for (std::size_t i : acc.touched()) {
        auto it = e.find(i);
        const cplx want = it == e.end() ? cplx(0.0) : it->second;
        r = std::max(r, std::abs(acc.get(i) - want));
    }
    for (const auto& [i, v] : e) {
        (void)n;
        if (std::find(acc.touched().begin(), acc.touched().end(), i) == acc.touched().end())
            r = std::max(r, std::abs(v));
    }
    return r;
}

double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

} // namespace

AxiomReport verify(const HopfDescriptor& d) {
    const int n = d.dim;
    if (n <= 0 || d.delta.source_dim() != n || d.delta.target_dim() != n * n ||
        d.antipode.source_dim() != n || d.antipode.target_dim() != n || d.counit.size() != n ||
        d.unit.size() != n || static_cast<int>(d.products.size()) != n * n ||
        d.star_of_basis.rows() != n || d.star_of_basis.cols() != n)
        throw StructuralError("Hopf descriptor components have inconsistent dimensions");

    AxiomReport rep;
    const auto dcol = sparse_columns(d.delta.matrix());
    const auto scol = sparse_columns(d.antipode.matrix());
    const auto starcol = sparse_columns(d.star_of_basis);
    const std::size_t nn = static_cast<std::size_t>(n) * n;

    // Coassociativity: (Δ⊗I)Δ = (I⊗Δ)Δ on each basis vector.
    {
        Accumulator left(nn * n), right(nn * n);
        for (int a = 0; a < n; ++a) {
            for (const auto& [xy, c] : dcol[a]) {
                const int x = xy / n, y = xy % n;
                for (const auto& [uv, c2] : dcol[x]) left.add(static_cast<std::size_t>(uv) * n + y, c * c2);
                for (const auto& [uv, c2] : dcol[y]) right.add(static_cast<std::size_t>(x) * nn + uv, c * c2);
            }
            for (std::size_t i : left.touched()) rep.coassociativity = std::max(rep.coassociativity, std::abs(left.get(i) - right.get(i)));
            for (std::size_t i : right.touched()) rep.coassociativity = std::max(rep.coassociativity, std::abs(left.get(i) - right.get(i)));
            left.clear();
            right.clear();
        }
    }

    // Counit laws.
    for (int a = 0; a < n; ++a) {
        Vec l = Vec::Zero(n), r = Vec::Zero(n);
        for (const auto& [xy, c] : dcol[a]) {
            const int x = xy / n, y = xy % n;
            l(y) += d.counit(x) * c;
            r(x) += d.counit(y) * c;
        }
        l(a) -= 1.0;
        r(a) -= 1.0;
        rep.counit_left = std::max(rep.counit_left, max_abs(l));
        rep.counit_right = std::max(rep.counit_right, max_abs(r));
    }

    // Antipode laws: M(S⊗I)Δ = ηε = M(I⊗S)Δ.
    for (int a = 0; a < n; ++a) {
        Vec l = Vec::Zero(n), r = Vec::Zero(n);
        for (const auto& [xy, c] : dcol[a]) {
            const int x = xy / n, y = xy % n;
            for (const auto& [i, s] : scol[x])
                for (const auto& [k, p] : d.products[i * n + y]) l(k) += c * s * p;
            for (const auto& [i, s] : scol[y])
                for (const auto& [k, p] : d.products[x * n + i]) r(k) += c * s * p;
        }
        l -= d.counit(a) * d.unit;
        r -= d.counit(a) * d.unit;
        rep.antipode_left = std::max(rep.antipode_left, max_abs(l));
        rep.antipode_right = std::max(rep.antipode_right, max_abs(r));
    }

    // Δ(e_a e_b) = Δ(e_a)Δ(e_b).
    {
        Accumulator rhs(nn);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                for (const auto& [xy, c1] : dcol[a]) {
                    const int x = xy / n, y = xy % n;
                    for (const auto& [uv, c2] : dcol[b]) {
                        const auto& p1 = d.products[x * n + uv / n];
                        if (p1.empty()) continue;
                        const auto& p2 = d.products[y * n + uv % n];
                        for (const auto& [i, v1] : p1)
                            for (const auto& [j, v2] : p2)
                                rhs.add(static_cast<std::size_t>(i) * n + j, c1 * c2 * v1 * v2);
                    }
                }
                SparseVec lhs;
                for (const auto& [k, p] : d.products[a * n + b])
                    for (const auto& [t, v] : dcol[k]) lhs.emplace_back(t, p * v);
                rep.delta_homomorphism = std::max(rep.delta_homomorphism, diff_against(rhs, lhs, nn));
                rhs.clear();
            }
    }

    // Δ(a*) = Δ(a)*, with (x⊗y)* = x*⊗y*.
    {
        Accumulator rhs(nn);
        for (int a = 0; a < n; ++a) {
            for (const auto& [xy, c] : dcol[a]) {
                const int x = xy / n, y = xy % n;
                for (const auto& [i, v1] : starcol[x])
                    for (const auto& [j, v2] : starcol[y])
                        rhs.add(static_cast<std::size_t>(i) * n + j, std::conj(c) * v1 * v2);
            }
            SparseVec lhs;
            for (const auto& [k, s] : starcol[a])
                for (const auto& [t, v] : dcol[k]) lhs.emplace_back(t, s * v);
            rep.delta_star = std::max(rep.delta_star, diff_against(rhs, lhs, nn));
            rhs.clear();
        }
    }

    if (d.haar) {
        const Vec& h = *d.haar;
        for (int a = 0; a < n; ++a) {
            Vec l = Vec::Zero(n), r = Vec::Zero(n);
            for (const auto& [xy, c] : dcol[a]) {
                const int x = xy / n, y = xy % n;
                l(y) += h(x) * c;
                r(x) += h(y) * c;
            }
            l -= h(a) * d.unit;
            r -= h(a) * d.unit;
            rep.haar_left_invariance = std::max(rep.haar_left_invariance, max_abs(l));
            rep.haar_right_invariance = std::max(rep.haar_right_invariance, max_abs(r));
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                cplx ab = 0.0, ba = 0.0;
                for (const auto& [k, p] : d.products[a * n + b]) ab += p * h(k);
                for (const auto& [k, p] : d.products[b * n + a]) ba += p * h(k);
                rep.haar_traciality = std::max(rep.haar_traciality, std::abs(ab - ba));
            }
    } else {
        const double inf = std::numeric_limits<double>::infinity();
        rep.haar_left_invariance = rep.haar_right_invariance = rep.haar_traciality = inf;
    }

    const Mat& s = d.antipode.matrix();
    rep.kac = (s * s - Mat::Identity(n, n)).cwiseAbs().maxCoeff();

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec diff = Vec::Zero(n);
            for (const auto& [k, p] : d.products[a * n + b]) diff(k) += p;
            for (const auto& [k, p] : d.products[b * n + a]) diff(k) -= p;
            rep.commutativity = std::max(rep.commutativity, max_abs(diff));
        }
    const Mat& dm = d.delta.matrix();
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                rep.cocommutativity = std::max(rep.cocommutativity, std::abs(dm(x * n + y, a) - dm(y * n + x, a)));
    rep.commutative = rep.commutativity <= kAxiomTolerance;
    rep.cocommutative = rep.cocommutativity <= kAxiomTolerance;
    return rep;
}

AxiomReport verify(const QuantumGroup& qg) { return verify(to_descriptor(qg)); }

LinearMap delta_power(const QuantumGroup& qg, int k) {
    if (k < 0) throw DomainError("delta_power needs k >= 0");
    const int n = qg.dim();
    double total = n;
    for (int i = 0; i <= k; ++i) total *= n;
    if (total > 1e7) throw ResourceError("iterated comultiplication exceeds 1e7 coefficients");
    if (k == 0) return LinearMap::identity(n);
    const auto dcol = sparse_columns(qg.delta.matrix());
    Mat cur = qg.delta.matrix();
    long long width = static_cast<long long>(n) * n;  // dim^{j+1}
    for (int j = 2; j <= k; ++j) {
        // Apply Δ to the first tensor factor: (Δ⊗I) ∘ Δ^{(j-1)}.
        const long long rest = width / n;
        Mat next = Mat::Zero(width * n, n);
        for (int col = 0; col < n; ++col)
            for (long long idx = 0; idx < width; ++idx) {
                const cplx v = cur(idx, col);
                if (v == cplx(0.0)) continue;
                const int first = static_cast<int>(idx / rest);
                const long long tail = idx % rest;
                for (const auto& [pq, c] : dcol[first]) next(static_cast<long long>(pq) * rest + tail, col) += v * c;
            }
        cur = std::move(next);
        width *= n;
    }
    return LinearMap(std::move(cur));
}

Functional functional_adjoint(const Functional& phi, const QuantumGroup& qg) {
    const int n = qg.dim();
    // ψ = φ∘S as a coefficient vector: ψ_j = Σ_i φ_i S(i, j).
    const Vec psi = qg.antipode.matrix().transpose() * phi.coeffs();
    Vec out(n);
    for (int c = 0; c < n; ++c) out(c) = std::conj(psi(qg.shape.adjoint_index(c)));
    return Functional(qg.shape, out);
}

} // namespace qgw
