#pragma once

#include "qgw/blockalg.hpp"

namespace qgw {

// Linear functional on a block algebra.  Entry i of coeffs is the value on
// the i-th matrix unit, so evaluation is the plain bilinear pairing.
class Functional {
public:
    Functional() = default;
    Functional(BlockShape shape, Vec coeffs);

    static Functional zero(const BlockShape& shape);
    // Dual basis functional: 1 on matrix unit i, 0 elsewhere.
    static Functional dual_basis(const BlockShape& shape, int index);

    const BlockShape& shape() const { return shape_; }
    const Vec& coeffs() const { return coeffs_; }
    int dim() const { return shape_.dim(); }

    cplx operator()(const AlgebraElement& a) const;
    cplx apply(const Vec& coeffs) const;

    Functional& operator+=(const Functional& o);
    Functional& operator-=(const Functional& o);
    Functional& operator*=(cplx s);

private:
    BlockShape shape_;
    Vec coeffs_;
};

Functional operator+(Functional a, const Functional& b);
Functional operator-(Functional a, const Functional& b);
Functional operator*(cplx s, Functional a);

// max_i |φ_i - ψ_i|
double max_diff(const Functional& a, const Functional& b);

} // namespace qgw
