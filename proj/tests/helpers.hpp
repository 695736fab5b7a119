#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qgw/bounds.hpp"
#include "qgw/catalog.hpp"

namespace qgw::test {

inline constexpr double kPi = std::numbers::pi;

inline double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
inline double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline cplx zeta(int n, int k) { return std::polar(1.0, 2.0 * kPi * k / n); }

// The small catalog every property test sweeps over.
struct NamedGroup {
    std::string name;
    QuantumGroup group;
};

inline std::vector<NamedGroup> catalog_sample() {
    return {{"F(Z5)", function_algebra(cyclic_group(5))},
            {"F(S3)", function_algebra(symmetric_group(3))},
            {"CS3", group_algebra(symmetric_group(3)).group},
            {"KP", kac_paljutkin().group},
            {"KP2", sekine(2)},
            {"KP3", sekine(3)}};
}

inline Functional kp_e2() {
    KpParams p;
    p.mu = {0, 1, 0, 0, 0};
    return kp_state(p);
}

inline Functional kp_example1() {
    KpParams p;
    p.mu = {0, 0.25, 0.25, 0.25, 0.25};
    return kp_state(p);
}

inline Functional kp_example2() {
    KpParams p;
    p.mu = {0, 0, 0.25, 0.25, 0.5};
    p.x = 1.0;
    return kp_state(p);
}

inline Functional kp_pal() {
    KpParams p;
    p.mu = {0.25, 0, 0, 0.25, 0.5};
    p.z = 1.0;
    return kp_state(p);
}

} // namespace qgw::test
