#include "qgw/bounds.hpp"

#include "qgw/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace qgw {

namespace {

constexpr double kPi = std::numbers::pi;
const double kAlpha = 2.0 + std::sqrt(3.0);
const double kBeta = 2.0 - std::sqrt(3.0);

std::string format_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Mat matrix_power(Mat base, int k) {
    Mat acc = Mat::Identity(base.rows(), base.cols());
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
    }
    return acc;
}

void require(bool ok, const std::string& hypothesis) {
    if (!ok) throw DomainError("hypothesis violated: " + hypothesis);
}

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    double b = 1.0;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

cplx zeta(int n, long long k) {
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(((k % n) + n) % n) / n);
}

} // namespace

std::vector<FourierBlock> fourier_blocks(const Functional& nu, const IrrepTable& irreps) {
    std::vector<FourierBlock> out;
    for (const Irrep& r : irreps.irreps) out.push_back(fourier_at_irrep(nu, r));
    return out;
}

UblResult ubl_from_blocks(const std::vector<FourierBlock>& blocks, const IrrepTable& irreps, int k) {
    if (k < 1) throw DomainError("ubl needs k >= 1");
    UblResult r;
    for (std::size_t a = 1; a < blocks.size(); ++a) {
        const Mat p = matrix_power(blocks[a].matrix, k);
        const double c = irreps.irreps[a].dim * p.squaredNorm();
        r.contributions.emplace_back(blocks[a].name, c);
        r.squared_sum += c;
    }
    r.value = std::sqrt(0.25 * r.squared_sum);
    return r;
}

UblResult ubl(const Functional& nu, const IrrepTable& irreps, int k) {
    if (irreps.sum_dim_squared() != nu.dim())
        throw ValidationError("ubl needs a complete irrep table (Σd² = dim)");
    return ubl_from_blocks(fourier_blocks(nu, irreps), irreps, k);
}

double lbl(const Functional& nu, const IrrepTable& irreps, int k) {
    double best = 0.0;
    for (std::size_t a = 1; a < irreps.irreps.size(); ++a) {
        const Irrep& r = irreps.irreps[a];
        if (r.dim != 1) continue;
        best = std::max(best, 0.5 * std::pow(std::abs(nu(r.elements[0])), k));
    }
    return best;
}

double lbl_from_blocks(const std::vector<FourierBlock>& blocks, int k) {
    double best = 0.0;
    for (std::size_t a = 1; a < blocks.size(); ++a)
        best = std::max(best, 0.5 * matrix_power(blocks[a].matrix, k).cwiseAbs().maxCoeff());
    return best;
}

// ---------------------------------------------------------------------------
// Closed forms

FamilyBound zn_upper(int n, int k) {
    const std::string h = "n odd and k >= n²/40";
    require(n >= 3 && n % 2 == 1 && 40.0 * k >= static_cast<double>(n) * n, h);
    return {std::exp(-kPi * kPi * k / (2.0 * n * n)), h};
}

FamilyBound zn_lower(int n, int k) {
    const std::string h = "n >= 7";
    require(n >= 7 && k >= 0, h);
    const double n2 = static_cast<double>(n) * n;
    return {0.5 * std::exp(-kPi * kPi * k / (2.0 * n2) - std::pow(kPi, 4) * k / (2.0 * n2 * n2)), h};
}

FamilyBound cube_upper_squared(int n, double c) {
    const std::string h = "n > 1, c > 0, k = (n+1)(ln n + c)/4";
    require(n > 1 && c > 0, h);
    return {0.5 * (std::exp(std::exp(-c)) - 1.0), h};
}

FamilyBound dual_sn_upper_squared(int n, double alpha) {
    const std::string h = "n >= 4, alpha > 0, k = alpha nⁿ";
    require(n >= 4 && alpha > 0, h);
    const double nd = n, rn = std::sqrt(nd);
    // The maximum of S over non-identity permutations fixing 1 (f0) and
    // moving 1 (f1), with f1 <= 2 f0 / sqrt(n) for n >= 4.
    const double tail = 1.0 - std::pow(nd, 2.0 - nd);
    const double f0 = tail / (nd - 1.0) + 2.0 * rn * std::pow(nd, -nd);
    const double f1 = 2.0 * rn / (nd * nd) + tail / ((nd - 1.0) * nd * nd);
    if (!(f1 <= 2.0 * f0 / rn)) throw NumericalError("dual Sn bound: f1 <= 2 f0 / sqrt(n) failed");
    const double log_npow = (nd - 1.0) * std::log(nd);  // log n^{n-1}
    const double extra = (nd - 1.0) * std::exp(-(nd - 4.0) * std::exp(log_npow) * alpha);
    const double log_value = 2.0 - std::log(4.0) + (nd - 0.5) * std::log(nd - 1.0) - nd -
                             2.0 * (nd - 1.0) * (rn - 1.0) * (rn - 1.0) * alpha + std::log1p(extra);
    return {std::exp(log_value), h};
}

FamilyBound dual_sn_lower_squared(int n, double beta) {
    const std::string h = "n >= 2, beta > 0, k = beta(nⁿ - 1), nⁿ - 1 > 2(n-1)(sqrt(n)-1)²";
    const double nd = n, rn = std::sqrt(nd);
    const double x = (nd - 1.0) * (rn - 1.0) * (rn - 1.0);
    const double log_m = nd * std::log(nd) + std::log1p(-std::pow(nd, -nd));  // log(nⁿ − 1)
    require(n >= 2 && beta > 0 && log_m > std::log(2.0 * x), h);
    const double ratio = std::exp(2.0 * std::log(x) - log_m);  // x² / (nⁿ − 1)
    return {0.25 * std::exp(-2.0 * (ratio + x) * beta), h};
}

std::pair<double, double> kp_symmetric_eigenvalues(const KpParams& p) {
    const auto& m = p.mu;
    const double r = std::sqrt((m[1] - m[2]) * (m[1] - m[2]) + m[4] * m[4] * p.x * p.x / 2.0);
    return {m[0] - m[3] + r, m[0] - m[3] - r};
}

FamilyBound kp_symmetric_upper(const KpParams& p, int k) {
    const std::string h = "symmetric state: y = 0 or mu5 = 0";
    require(k >= 1 && (std::abs(p.y) <= 1e-12 || std::abs(p.mu[4]) <= 1e-12), h);
    kp_state(p);  // validates the parameters
    const auto& m = p.mu;
    const double a = m[0] - m[1] - m[2] + m[3] - p.z * m[4];
    const double b = m[0] - m[1] - m[2] + m[3] + p.z * m[4];
    const double c = m[0] + m[1] + m[2] + m[3] - m[4];
    const auto [lp, lm] = kp_symmetric_eigenvalues(p);
    const int e = 2 * k;
    const double sq = 0.25 * (std::pow(a, e) + std::pow(b, e) + std::pow(c, e)) + 0.5 * (std::pow(lp, e) + std::pow(lm, e));
    return {std::sqrt(sq), h};
}

FamilyBound kp_example2_upper(int k) {
    require(k >= 1, "k >= 1");
    return {std::pow((std::sqrt(2.0) + 1.0) / 4.0, k), "k >= 1"};
}

FamilyBound kp_example2_lower(int k) {
    require(k >= 1, "k >= 1");
    const double sign = k % 2 == 0 ? -1.0 : 1.0;
    const double v = (std::pow(8.0 * kBeta, -k / 2.0) + sign * std::pow(8.0 * kAlpha, -k / 2.0)) / (2.0 * std::sqrt(6.0));
    return {v, "k >= 1"};
}

FamilyBound kp_example2_lower_uniform(int k) {
    require(k >= 1, "k >= 1");
    const double v = (std::pow(8.0 * kBeta, -k / 2.0) - std::pow(8.0 * kAlpha, -k / 2.0)) / (2.0 * std::sqrt(6.0));
    return {v, "k >= 1"};
}

double sekine_upper_chain(int n, double k) {
    require(n >= 3 && n % 2 == 1 && k >= 49 && 40.0 * k >= static_cast<double>(n) * n,
            "n odd, k >= 49 and k >= n²/40");
    const double n2 = static_cast<double>(n) * n;
    const double gamma = std::exp(kPi * kPi / n2);
    const double f = std::exp(-kPi * kPi * (2.0 * k - 1.0) / n2);
    const double bracket = 1.0 + 0.5 * std::pow(gamma / 4.0, 2.0 * k) + (n2 - 0.5) * std::pow(0.75 * gamma, 2.0 * k) +
                           (2.0 * n - 4.0) * std::pow(std::sqrt(gamma) / 2.0, 2.0 * k);
    return std::sqrt(f * bracket);
}

FamilyBound sekine_upper(int n, double alpha) {
    const std::string h = "n >= 7 odd, alpha >= 1, k = n²/80 + alpha n²";
    require(n >= 7 && n % 2 == 1 && alpha >= 1.0, h);
    const double n2 = static_cast<double>(n) * n;
    const double k = n2 / 80.0 + alpha * n2;
    const double value = 1.11 * std::exp(-alpha * kPi * kPi);
    if (!(sekine_upper_chain(n, k) <= value))
        throw NumericalError("Sekine bound: the intermediate chain exceeds 1.11 e^{-alpha pi²}");
    return {value, h};
}

FamilyBound sekine_lower(int n, int k) {
    const std::string h = "n >= 3 odd";
    require(n >= 3 && n % 2 == 1 && k >= 0, h);
    const double log_v = -(2.0 * k + 1.0) * std::log(2.0) + 0.5 * k * std::log(5.0 + 4.0 * std::cos(2.0 * kPi / n));
    return {std::exp(log_v), h};
}

std::vector<std::pair<std::string, double>> zn_contributions(int n, int k) {
    std::vector<std::pair<std::string, double>> out;
    for (int a = 1; a < n; ++a) out.emplace_back("chi_" + std::to_string(a), std::pow(std::cos(2.0 * kPi * a / n), 2 * k));
    return out;
}

std::vector<std::pair<std::string, double>> sekine_contributions(int n, int k) {
    if (n < 3 || n % 2 == 0) throw UnsupportedError("Sekine contributions need odd n >= 3");
    std::vector<std::pair<std::string, double>> out;
    auto one_dim = [&](int l, double sign) {
        double extra = 0.0;
        if (l == 0) extra = 2.0;
        else if (l == 1 || l == n - 1) extra = 1.0;
        return std::pow(std::abs((1.0 + zeta(n, l) + sign * extra) / 4.0), 2 * k);
    };
    out.emplace_back("rho0-", one_dim(0, -1.0));
    for (int l = 1; l < n; ++l) {
        out.emplace_back("rho" + std::to_string(l) + "+", one_dim(l, 1.0));
        out.emplace_back("rho" + std::to_string(l) + "-", one_dim(l, -1.0));
    }
    const cplx z = zeta(n, 1);
    for (int u = 0; u < n; ++u)
        for (int v = 1; v <= (n - 1) / 2; ++v) {
            double c;
            if (u == 0) {
                c = 2.0 * std::pow(std::cos(kPi * v / n), 4 * k - 2);
            } else if (u == 1 || u == n - 1) {
                const cplx av = zeta(n, v) + zeta(n, -v) + zeta(n, -1);
                const double s = std::sin(2.0 * kPi * v / n);
                const double sec2 = 1.0 / std::pow(std::cos(2.0 * kPi * v / n), 2);
                const double quarter_k = std::pow(0.25, k);
                const double bracket = 4.0 * quarter_k * quarter_k + 4.0 * std::pow(std::abs(av) / 4.0, 2 * k) -
                                       8.0 * s * s * std::pow(av * z / 4.0, k).real() * quarter_k;
                c = 0.5 * sec2 * bracket;
            } else {
                const double a = std::abs(zeta(n, -v) + zeta(n, -u)) / 4.0;
                const double b = std::abs(zeta(n, v) + zeta(n, -u)) / 4.0;
                c = 2.0 * (std::pow(a, 2 * k) + std::pow(b, 2 * k));
            }
            out.emplace_back("kappa" + std::to_string(u) + "_" + std::to_string(v), c);
        }
    return out;
}

// ---------------------------------------------------------------------------
// States of the catalog walks

Functional sekine_walk_state(int n) {
    if (n < 2) throw DomainError("the Sekine walk needs n >= 2");
    std::vector<double> x(static_cast<std::size_t>(n) * n, 0.0);
    x[sekine_point_index(n, 0, 1)] = 0.25;
    x[sekine_point_index(n, 1, 0)] = 0.25;
    Mat a = Mat::Zero(n, n);
    a.topLeftCorner(2, 2).setConstant(0.25);
    return sekine_state(n, x, a);
}

Functional zn_simple_state(const QuantumGroup& fzn) {
    const int n = fzn.dim();
    if (n < 2) throw DomainError("the simple walk needs n >= 2");
    Vec c = Vec::Zero(n);
    c(1) += 0.5;
    c(n - 1) += 0.5;
    return Functional(fzn.shape, c);
}

Functional cube_walk_state(const QuantumGroup& fcube, int n) {
    if (fcube.dim() != (1 << n)) throw StructuralError("cube walk: algebra is not F(ℤ₂ⁿ)");
    Vec c = Vec::Zero(fcube.dim());
    c(0) = 1.0 / (n + 1);
    for (int i = 0; i < n; ++i) c(1 << i) = 1.0 / (n + 1);
    return Functional(fcube.shape, c);
}

std::vector<cplx> dual_sn_values(int n) {
    const double nd = n;
    std::vector<double> alpha(n);
    for (int i = 1; i <= n; ++i)
        alpha[i - 1] = std::sqrt(std::exp((nd - i) * std::log(nd)) * (nd - 1.0) / (std::pow(nd, nd) - 1.0));
    std::vector<cplx> out;
    for (const auto& perm : permutations_of(n)) {
        double u = 0.0;
        for (int i = 0; i < n; ++i) u += alpha[i] * alpha[perm[i]];
        out.emplace_back(u);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path counting for the second KP walk

LemmasumResidual lemmasum_check(int N) {
    if (N < 1 || N > 30) throw DomainError("lemmasum_check needs 1 <= N <= 30");
    double odd = 0.0, even = 0.0;
    for (int w = 0; w <= N; ++w) {
        odd += binomial(N + w, 2 * w + 1) * std::pow(2.0, w);
        even += binomial(N + w, 2 * w) * std::pow(2.0, w);
    }
    const double odd_rhs = (std::pow(kAlpha, N) - std::pow(kBeta, N)) / (2.0 * std::sqrt(3.0));
    const double even_rhs = ((5.0 * kAlpha - 1.0) * std::pow(kAlpha, N) + (kAlpha + 1.0) * std::pow(kBeta, N)) / (6.0 * kAlpha);
    return {std::abs(odd - odd_rhs) / std::abs(odd_rhs), std::abs(even - even_rhs) / std::abs(even_rhs)};
}

PathOracle kp_example2_path_oracle(int k) {
    if (k < 1) throw DomainError("path oracle needs k >= 1");
    const KacPaljutkin kp = kac_paljutkin();
    KpParams p;
    p.mu = {0.0, 0.0, 0.25, 0.25, 0.5};
    p.x = 1.0;
    const Functional nu = kp_state(p);
    const Irrep& rho = kp.irreps.irreps.back();

    PathOracle out;
    out.direct = convolution_power(nu, k, kp.group)(rho.at(0, 1));

    // Paths 1 → ... → 1 built from loops (1→1) and returns (1→2→1), then a
    // final go (1→2); staying at 2 is impossible because ν(ρ₂₂) = 0.
    const cplx loop = nu(rho.at(0, 0));
    const cplx ret = nu(rho.at(0, 1)) * nu(rho.at(1, 0));
    const cplx go = nu(rho.at(0, 1));
    if (std::abs(nu(rho.at(1, 1))) > 1e-14) throw NumericalError("path oracle assumes ν(ρ₂₂) = 0");
    cplx sum = 0.0;
    for (int l = (k - 1) % 2; l <= k - 1; l += 2) {
        const int returns = (k - 1 - l) / 2;
        sum += binomial(l + returns, l) * std::pow(loop, l) * std::pow(ret, returns);
    }
    out.combinatorial = sum * go;
    out.difference = std::abs(out.direct - out.combinatorial);
    return out;
}

// ---------------------------------------------------------------------------

BoundSeries run_experiment(const QuantumGroup& qg, const IrrepTable& irreps, const Functional& nu, int kmax) {
    if (kmax < 1) throw DomainError("run_experiment needs kmax >= 1");
    if (irreps.sum_dim_squared() != qg.dim()) throw ValidationError("run_experiment needs a complete irrep table");
    require_state(nu, qg, 1e-9);
    const auto powers = convolution_powers(nu, kmax, qg);
    const Functional pi = haar_state(qg);
    const auto blocks = fourier_blocks(nu, irreps);
    BoundSeries series;
    for (int k = 1; k <= kmax; ++k) {
        const DistanceReport d = distances(powers[k - 1], pi, qg);
        UblResult u = ubl_from_blocks(blocks, irreps, k);
        BoundRow row;
        row.k = k;
        row.exact_tv = d.tv;
        row.l2 = d.l2;
        row.sep = d.sep;
        row.ubl = u.value;
        row.lbl = lbl_from_blocks(blocks, k);
        row.contributions = std::move(u.contributions);
        if (row.lbl > d.tv + 1e-9 || d.tv > row.ubl + 1e-9)
            throw NumericalError("sandwich lbl <= tv <= ubl violated at k = " + std::to_string(k) + " (lbl " +
                                 format_g(row.lbl) + ", tv " + format_g(d.tv) + ", ubl " +
                                 format_g(row.ubl) + ")");
        series.rows.push_back(std::move(row));
    }
    return series;
}

} // namespace qgw
