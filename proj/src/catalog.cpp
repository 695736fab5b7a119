#include "qgw/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace qgw {

// ---------------------------------------------------------------------------
// Cayley tables

bool CayleyTable::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

CayleyTable CayleyTable::from_product(int order, std::vector<int> product, std::vector<std::string> labels) {
    if (order < 1) throw ValidationError("Cayley table: order must be positive");
    if (static_cast<long long>(product.size()) != static_cast<long long>(order) * order)
        throw ValidationError("Cayley table: expected order² entries");
    for (int v : product)
        if (v < 0 || v >= order) throw ValidationError("Cayley table: entry out of range");
    for (int r = 0; r < order; ++r) {
        std::vector<bool> row(order, false), col(order, false);
        for (int c = 0; c < order; ++c) {
            if (row[product[r * order + c]]) throw ValidationError("Cayley table: row " + std::to_string(r) + " is not a permutation");
            if (col[product[c * order + r]]) throw ValidationError("Cayley table: column " + std::to_string(r) + " is not a permutation");
            row[product[r * order + c]] = col[product[c * order + r]] = true;
        }
    }
    CayleyTable t;
    t.order = order;
    t.product = std::move(product);
    t.identity = -1;
    for (int e = 0; e < order && t.identity < 0; ++e) {
        bool ok = true;
        for (int s = 0; s < order && ok; ++s) ok = t.mul(e, s) == s && t.mul(s, e) == s;
        if (ok) t.identity = e;
    }
    if (t.identity < 0) throw ValidationError("Cayley table: no identity element");
    if (order <= 128)
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)))
                        throw ValidationError("Cayley table: associativity fails");
    t.inverse.assign(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (t.mul(a, b) == t.identity) t.inverse[a] = b;
    for (int a = 0; a < order; ++a)
        if (t.mul(t.inverse[a], a) != t.identity) throw ValidationError("Cayley table: inverses are not two-sided");
    if (labels.empty()) {
        for (int a = 0; a < order; ++a) labels.push_back(std::to_string(a));
    } else if (static_cast<int>(labels.size()) != order) {
        throw ValidationError("Cayley table: label count differs from order");
    }
    t.labels = std::move(labels);
    return t;
}

CayleyTable cyclic_group(int n) {
    if (n < 1) throw DomainError("cyclic group needs n >= 1");
    std::vector<int> p(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) p[a * n + b] = (a + b) % n;
    return CayleyTable::from_product(n, std::move(p));
}

CayleyTable power_of_z2(int n) {
    if (n < 0 || n > 10) throw DomainError("power_of_z2 supports 0 <= n <= 10");
    const int order = 1 << n;
    std::vector<int> p(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) p[a * order + b] = a ^ b;
    return CayleyTable::from_product(order, std::move(p));
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

CayleyTable symmetric_group(int n) {
    if (n < 1 || n > 6) throw DomainError("symmetric group supported for 1 <= n <= 6");
    const auto perms = permutations_of(n);
    const int order = static_cast<int>(perms.size());
    std::vector<int> p(static_cast<std::size_t>(order) * order);
    std::vector<std::string> labels;
    for (int a = 0; a < order; ++a) {
        std::string l;
        for (int v : perms[a]) l += std::to_string(v);
        labels.push_back(l);
        for (int b = 0; b < order; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            p[a * order + b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return CayleyTable::from_product(order, std::move(p), std::move(labels));
}

CayleyTable dihedral_group(int n) {
    if (n < 1) throw DomainError("dihedral group needs n >= 1");
    const int order = 2 * n;
    auto idx = [n](int rot, bool refl) { return ((rot % n) + n) % n + (refl ? n : 0); };
    std::vector<int> p(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            const int ra = a % n, rb = b % n;
            const bool sa = a >= n, sb = b >= n;
            // r^a s^x · r^b s^y = r^{a ± b} s^{x+y}
            p[a * order + b] = idx(sa ? ra - rb : ra + rb, sa != sb);
        }
    return CayleyTable::from_product(order, std::move(p));
}

CayleyTable quaternion_group() {
    // Index 2u + (negative ? 1 : 0) with u ∈ {1, i, j, k}.
    static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<int> p(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int ua = a / 2, ub = b / 2;
            int sign = unit_sign[ua][ub] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
            p[a * 8 + b] = 2 * unit_prod[ua][ub] + (sign < 0 ? 1 : 0);
        }
    return CayleyTable::from_product(8, std::move(p), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

// ---------------------------------------------------------------------------
// Irrep tables

int IrrepTable::sum_dim_squared() const {
    int s = 0;
    for (const auto& r : irreps) s += r.dim * r.dim;
    return s;
}

double IrrepDiagnostics::worst() const {
    return std::max({corepresentation, counit, unitarity, character, orthogonality});
}

bool IrrepDiagnostics::accepted(double tol) const { return complete && trivial_first && worst() <= tol; }

IrrepDiagnostics check_irreps(const QuantumGroup& qg, const IrrepTable& table) {
    IrrepDiagnostics out;
    const int n = qg.dim();
    const AlgebraElement one = AlgebraElement::unit(qg.shape);
    out.sum_dim_squared = table.sum_dim_squared();
    out.complete = out.sum_dim_squared == n;
    out.trivial_first = !table.irreps.empty() && table.irreps[0].dim == 1 &&
                        (table.irreps[0].elements[0] - one).max_abs() <= 1e-10;

    std::vector<const AlgebraElement*> all;
    std::vector<int> owner, row, col;
    for (std::size_t a = 0; a < table.irreps.size(); ++a) {
        const Irrep& r = table.irreps[a];
        if (r.dim < 1 || static_cast<int>(r.elements.size()) != r.dim * r.dim)
            throw StructuralError("irrep " + r.name + " has the wrong number of matrix elements");
        for (const auto& e : r.elements)
            if (e.shape() != qg.shape) throw StructuralError("irrep " + r.name + " lives on a different algebra");
        const int d = r.dim;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Vec lhs = qg.comultiply(r.at(i, j));
                for (int k = 0; k < d; ++k) lhs -= tensor(r.at(i, k), r.at(k, j));
                out.corepresentation = std::max(out.corepresentation, lhs.cwiseAbs().maxCoeff());
                out.counit = std::max(out.counit, std::abs(qg.counit(r.at(i, j)) - (i == j ? 1.0 : 0.0)));
                AlgebraElement u = AlgebraElement::zero(qg.shape);
                for (int k = 0; k < d; ++k) u += mul(r.at(k, i).adjoint(), r.at(k, j));
                if (i == j) u -= one;
                out.unitarity = std::max(out.unitarity, u.max_abs());
                all.push_back(&r.at(i, j));
                owner.push_back(static_cast<int>(a));
                row.push_back(i);
                col.push_back(j);
            }
        AlgebraElement chi = AlgebraElement::zero(qg.shape);
        for (int i = 0; i < d; ++i) chi += r.at(i, i);
        out.character = std::max(out.character, std::abs(qg.haar(mul(chi.adjoint(), chi)) - 1.0));
    }

    // Gram matrix under the Haar inner product: Bᴴ W B.
    const int m = static_cast<int>(all.size());
    Mat b(n, m);
    for (int i = 0; i < m; ++i) b.col(i) = all[i]->coeffs();
    const Eigen::VectorXd w = qg.haar.basis_weights();
    const Mat gram = b.adjoint() * w.cast<cplx>().asDiagonal() * b;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const double want = (owner[p] == owner[q] && row[p] == row[q] && col[p] == col[q])
                                    ? 1.0 / table.irreps[owner[p]].dim
                                    : 0.0;
            out.orthogonality = std::max(out.orthogonality, std::abs(gram(p, q) - want));
        }
    return out;
}

void validate_irreps(const QuantumGroup& qg, const IrrepTable& table) {
    const IrrepDiagnostics d = check_irreps(qg, table);
    if (!d.complete)
        throw ValidationError("irrep table incomplete: Σd² = " + std::to_string(d.sum_dim_squared) +
                              " but dim = " + std::to_string(qg.dim()));
    if (!d.trivial_first) throw ValidationError("irrep table must list the trivial irrep first");
    if (d.worst() > 1e-8) throw ValidationError("irrep table fails its invariants (worst residual " + std::to_string(d.worst()) + ")");
}

CoalgebraData reconstruct_from_irreps(const BlockShape& shape, const IrrepTable& table) {
    const int n = shape.dim();
    if (table.sum_dim_squared() != n) throw ValidationError("reconstruction needs a complete irrep table");
    Mat b(n, n), d(static_cast<Eigen::Index>(n) * n, n), s(n, n);
    Eigen::RowVectorXcd e(n);
    int c = 0;
    for (const auto& r : table.irreps)
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < r.dim; ++j, ++c) {
                b.col(c) = r.at(i, j).coeffs();
                Vec t = Vec::Zero(static_cast<Eigen::Index>(n) * n);
                for (int k = 0; k < r.dim; ++k) t += tensor(r.at(i, k), r.at(k, j));
                d.col(c) = t;
                s.col(c) = r.at(j, i).adjoint().coeffs();
                e(c) = i == j ? 1.0 : 0.0;
            }
    Eigen::FullPivLU<Mat> lu(b);
    if (!lu.isInvertible()) throw ValidationError("matrix elements are not a basis of the algebra");
    const Mat inv = lu.inverse();
    CoalgebraData out;
    out.delta = LinearMap(Mat(d * inv));
    out.counit = (e * inv).transpose();
    out.antipode = LinearMap(Mat(s * inv));
    return out;
}

// ---------------------------------------------------------------------------
// Classical groups

QuantumGroup function_algebra(const CayleyTable& g) {
    const int n = g.order;
    QuantumGroup qg;
    qg.shape = BlockShape(std::vector<int>(n, 1));
    Mat delta = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
    Mat s = Mat::Zero(n, n);
    Vec eps = Vec::Zero(n);
    for (int a = 0; a < n; ++a) {
        for (int t = 0; t < n; ++t) delta(g.mul(a, g.inverse[t]) * n + t, a) = 1.0;
        s(g.inverse[a], a) = 1.0;
    }
    eps(g.identity) = 1.0;
    qg.delta = LinearMap(std::move(delta));
    qg.antipode = LinearMap(std::move(s));
    qg.counit = Functional(qg.shape, eps);
    qg.haar = HaarWeights(qg.shape, std::vector<double>(n, 1.0 / n));
    qg.label = "F(G" + std::to_string(n) + ")";
    return qg;
}

GroupAlgebra group_algebra(const CayleyTable& g) {
    DualGroup d = dual(function_algebra(g));
    GroupAlgebra out;
    out.group = std::move(d.group);
    out.group.label = "CG" + std::to_string(g.order);
    out.table = g;
    out.to_blocks = std::move(d.to_blocks);
    out.from_blocks = std::move(d.from_blocks);
    for (int s = 0; s < g.order; ++s)
        out.point_images.push_back(AlgebraElement::from_coeffs(out.group.shape, out.to_blocks.col(s)));
    return out;
}

Functional GroupAlgebra::functional_from_values(const std::vector<cplx>& values) const {
    if (static_cast<int>(values.size()) != table.order) throw StructuralError("one value per group element expected");
    Vec u(table.order);
    for (int s = 0; s < table.order; ++s) u(s) = values[s];
    return Functional(group.shape, from_blocks.transpose() * u);
}

std::vector<cplx> GroupAlgebra::values_of(const Functional& phi) const {
    const Vec u = to_blocks.transpose() * phi.coeffs();
    return std::vector<cplx>(u.data(), u.data() + u.size());
}

IrrepTable GroupAlgebra::irreps() const {
    IrrepTable t;
    std::vector<int> order{table.identity};
    for (int s = 0; s < table.order; ++s)
        if (s != table.identity) order.push_back(s);
    for (int s : order) t.irreps.push_back({1, {point_images[s]}, "kappa_" + table.labels[s]});
    return t;
}

std::vector<std::vector<cplx>> abelian_characters(const CayleyTable& g) {
    if (!g.is_abelian()) throw UnsupportedError("characters requested for a nonabelian group");
    const int n = g.order;
    std::vector<int> subgroup{g.identity};
    std::vector<bool> in(n, false);
    in[g.identity] = true;
    std::vector<std::vector<cplx>> chars{std::vector<cplx>(n, 0.0)};
    chars[0][g.identity] = 1.0;
    while (static_cast<int>(subgroup.size()) < n) {
        int gen = 0;
        while (in[gen]) ++gen;
        int m = 1, power = gen;
        while (!in[power]) {
            power = g.mul(power, gen);
            ++m;
        }
        std::vector<int> gpow(m);
        gpow[0] = g.identity;
        for (int j = 1; j < m; ++j) gpow[j] = g.mul(gpow[j - 1], gen);
        std::vector<int> extended;
        for (int j = 0; j < m; ++j)
            for (int h : subgroup) extended.push_back(g.mul(h, gpow[j]));
        std::vector<std::vector<cplx>> next;
        for (const auto& chi : chars) {
            const double base = std::arg(chi[power]);
            for (int r = 0; r < m; ++r) {
                const double angle = (base + 2.0 * std::numbers::pi * r) / m;
                std::vector<cplx> c = chi;
                for (int j = 1; j < m; ++j)
                    for (int h : subgroup) c[g.mul(h, gpow[j])] = chi[h] * std::polar(1.0, angle * j);
                next.push_back(std::move(c));
            }
        }
        chars = std::move(next);
        for (int x : extended) in[x] = true;
        subgroup = std::move(extended);
    }
    return chars;
}

IrrepTable classical_irreps(const QuantumGroup& qg, const CayleyTable& g, const std::optional<IrrepTable>& user_table) {
    if (qg.dim() != g.order) throw StructuralError("group table does not match the function algebra");
    if (user_table) {
        validate_irreps(qg, *user_table);
        return *user_table;
    }
    if (!g.is_abelian())
        throw UnsupportedError("irreps of a nonabelian F(G) must be supplied as a table");
    IrrepTable t;
    const auto chars = abelian_characters(g);
    for (std::size_t a = 0; a < chars.size(); ++a) {
        Vec c(g.order);
        for (int s = 0; s < g.order; ++s) c(s) = chars[a][s];
        t.irreps.push_back({1, {AlgebraElement::from_coeffs(qg.shape, c)}, "chi_" + std::to_string(a)});
    }
    return t;
}

// ---------------------------------------------------------------------------
// Kac–Paljutkin

namespace {

AlgebraElement kp_element(const BlockShape& shape, std::array<cplx, 4> scalars, const Mat& m2) {
    std::vector<Mat> blocks;
    for (cplx s : scalars) blocks.push_back(Mat::Constant(1, 1, s));
    blocks.push_back(m2);
    return AlgebraElement(shape, std::move(blocks));
}

} // namespace

KacPaljutkin kac_paljutkin() {
    const BlockShape shape({1, 1, 1, 1, 2});
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    auto diag = [](cplx a, cplx b) {
        Mat m = Mat::Zero(2, 2);
        m(0, 0) = a;
        m(1, 1) = b;
        return m;
    };
    auto off = [](cplx a, cplx b) {
        Mat m = Mat::Zero(2, 2);
        m(0, 1) = a;
        m(1, 0) = b;
        return m;
    };
    const Mat zero2 = Mat::Zero(2, 2);

    IrrepTable t;
    t.irreps.push_back({1, {AlgebraElement::unit(shape)}, "trivial"});
    t.irreps.push_back({1, {kp_element(shape, {1, -1, -1, 1}, diag(-1, 1))}, "rho_a"});
    t.irreps.push_back({1, {kp_element(shape, {1, -1, -1, 1}, diag(1, -1))}, "rho_b"});
    t.irreps.push_back({1, {kp_element(shape, {1, 1, 1, 1}, diag(-1, -1))}, "rho_c"});
    t.irreps.push_back({2,
                        {kp_element(shape, {1, 1, -1, -1}, zero2),
                         kp_element(shape, {0, 0, 0, 0}, off((1.0 + i) * r, (1.0 - i) * r)),
                         kp_element(shape, {0, 0, 0, 0}, off((1.0 - i) * r, (1.0 + i) * r)),
                         kp_element(shape, {1, -1, 1, -1}, zero2)},
                        "rho"});

    const CoalgebraData c = reconstruct_from_irreps(shape, t);
    QuantumGroup qg;
    qg.shape = shape;
    qg.delta = c.delta;
    qg.counit = Functional(shape, c.counit);
    qg.antipode = c.antipode;
    qg.haar = HaarWeights(shape, {1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 4});
    qg.label = "KP";
    return {std::move(qg), std::move(t)};
}

// ---------------------------------------------------------------------------
// Sekine family

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

cplx root_of_unity(int n, long long k) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(((k % n) + n) % n) / n);
}

} // namespace

int sekine_point_index(int n, int i, int j) { return mod(i, n) * n + mod(j, n); }

int sekine_matrix_index(int n, int p, int q) { return n * n + mod(p - 1, n) * n + mod(q - 1, n); }

LinearMap sekine_delta_explicit(int n) {
    const int dim = 2 * n * n;
    Mat d = Mat::Zero(static_cast<Eigen::Index>(dim) * dim, dim);
    auto e = [n](int i, int j) { return sekine_point_index(n, i, j); };
    auto E = [n](int p, int q) { return sekine_matrix_index(n, p, q); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int c = e(i, j);
            for (int l = 0; l < n; ++l)
                for (int m = 0; m < n; ++m) d(e(l, m) * dim + e(i - l, j - m), c) += 1.0;
            for (int l = 1; l <= n; ++l)
                for (int m = 1; m <= n; ++m)
                    d(E(l, m) * dim + E(l + j, m + j), c) += root_of_unity(n, static_cast<long long>(i) * (l - m)) / static_cast<double>(n);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int c = E(i, j);
            for (int l = 0; l < n; ++l)
                for (int m = 0; m < n; ++m) {
                    d(e(-l, -m) * dim + E(i - m, j - m), c) += root_of_unity(n, static_cast<long long>(l) * (i - j));
                    d(E(i - m, j - m) * dim + e(l, m), c) += root_of_unity(n, static_cast<long long>(l) * (j - i));
                }
        }
    return LinearMap(std::move(d));
}

QuantumGroup sekine(int n) {
    if (n < 1) throw DomainError("Sekine family needs n >= 1");
    const int dim = 2 * n * n;
    std::vector<int> dims(static_cast<std::size_t>(n) * n, 1);
    dims.push_back(n);
    QuantumGroup qg;
    qg.shape = BlockShape(dims);
    qg.delta = sekine_delta_explicit(n);
    Mat s = Mat::Zero(dim, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(sekine_point_index(n, -i, -j), sekine_point_index(n, i, j)) = 1.0;
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) s(sekine_matrix_index(n, q, p), sekine_matrix_index(n, p, q)) = 1.0;
    qg.antipode = LinearMap(std::move(s));
    Vec eps = Vec::Zero(dim);
    eps(sekine_point_index(n, 0, 0)) = 1.0;
    qg.counit = Functional(qg.shape, eps);
    std::vector<double> w(static_cast<std::size_t>(n) * n, 1.0 / (2.0 * n * n));
    w.push_back(1.0 / (2.0 * n));
    qg.haar = HaarWeights(qg.shape, w);
    qg.label = "KP" + std::to_string(n);
    return qg;
}

IrrepTable sekine_irreps(int n) {
    if (n < 3 || n % 2 == 0) throw UnsupportedError("Sekine irreps are available for odd n >= 3 only");
    std::vector<int> dims(static_cast<std::size_t>(n) * n, 1);
    dims.push_back(n);
    const BlockShape shape(dims);
    const int dim = shape.dim();
    auto e = [n](int i, int j) { return sekine_point_index(n, i, j); };
    auto E = [n](int p, int q) { return sekine_matrix_index(n, p, q); };
    auto element = [&](const Vec& c) { return AlgebraElement::from_coeffs(shape, c); };

    IrrepTable t;
    auto one_dim = [&](int l, double sign) {
        Vec c = Vec::Zero(dim);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c(e(i, j)) = root_of_unity(n, static_cast<long long>(i) * l);
        for (int m = 1; m <= n; ++m) c(E(m, m + l)) = sign;
        return element(c);
    };
    t.irreps.push_back({1, {one_dim(0, 1.0)}, "rho0+"});
    t.irreps.push_back({1, {one_dim(0, -1.0)}, "rho0-"});
    for (int l = 1; l < n; ++l) {
        t.irreps.push_back({1, {one_dim(l, 1.0)}, "rho" + std::to_string(l) + "+"});
        t.irreps.push_back({1, {one_dim(l, -1.0)}, "rho" + std::to_string(l) + "-"});
    }
    for (int u = 0; u < n; ++u)
        for (int v = 1; v <= (n - 1) / 2; ++v) {
            Vec r11 = Vec::Zero(dim), r12 = Vec::Zero(dim), r21 = Vec::Zero(dim), r22 = Vec::Zero(dim);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    r11(e(i, j)) = root_of_unity(n, static_cast<long long>(i) * u + static_cast<long long>(j) * v);
                    r22(e(i, j)) = root_of_unity(n, static_cast<long long>(i) * u - static_cast<long long>(j) * v);
                }
            for (int m = 1; m <= n; ++m) {
                r12(E(m, m + u)) = root_of_unity(n, -static_cast<long long>(m) * v);
                r21(E(m, m + u)) = root_of_unity(n, static_cast<long long>(m) * v);
            }
            t.irreps.push_back({2, {element(r11), element(r12), element(r21), element(r22)},
                                "kappa" + std::to_string(u) + "_" + std::to_string(v)});
        }
    return t;
}

// ---------------------------------------------------------------------------
// Sweedler

HopfDescriptor sweedler() {
    // Basis order: 1, g, x, gx.
    HopfDescriptor d;
    d.label = "sweedler";
    d.dim = 4;
    d.products.resize(16);
    auto set = [&](int a, int b, int c, double s) { d.products[a * 4 + b] = {{c, s}}; };
    for (int a = 0; a < 4; ++a) {
        set(0, a, a, 1);
        set(a, 0, a, 1);
    }
    set(1, 1, 0, 1);
    set(1, 2, 3, 1);
    set(1, 3, 2, 1);
    set(2, 1, 3, -1);
    set(3, 1, 2, -1);
    d.unit = Vec::Zero(4);
    d.unit(0) = 1.0;
    d.star_of_basis = Mat::Identity(4, 4);
    d.star_of_basis(3, 3) = -1.0;
    Mat delta = Mat::Zero(16, 4);
    delta(0 * 4 + 0, 0) = 1;
    delta(1 * 4 + 1, 1) = 1;
    delta(0 * 4 + 2, 2) = 1;  // 1 ⊗ x
    delta(2 * 4 + 1, 2) = 1;  // x ⊗ g
    delta(1 * 4 + 3, 3) = 1;  // g ⊗ gx
    delta(3 * 4 + 0, 3) = 1;  // gx ⊗ 1
    d.delta = LinearMap(std::move(delta));
    d.counit = Vec::Zero(4);
    d.counit(0) = d.counit(1) = 1.0;
    Mat s = Mat::Zero(4, 4);
    s(0, 0) = 1;
    s(1, 1) = 1;
    s(3, 2) = 1;   // S(x) = gx
    s(2, 3) = -1;  // S(gx) = -x
    d.antipode = LinearMap(std::move(s));
    return d;
}

} // namespace qgw
