#pragma once

#include <vector>

#include <Eigen/Dense>

#include "curvetk/jet.hpp"

namespace curvetk {

using Vec3 = Eigen::Vector3d;

// Jet of an R^3-valued function: coefficient k is the k-th derivative
// vector. Same truncation and error semantics as the scalar Jet.
class VecJet {
public:
    VecJet() : coeff_(1, Vec3::Zero()) {}

    static VecJet constant(const Vec3& value, int order);
    static VecJet from_derivatives(std::vector<Vec3> derivatives);
    static VecJet from_components(const Jet& x, const Jet& y, const Jet& z);

    int order() const noexcept { return static_cast<int>(coeff_.size()) - 1; }
    const Vec3& value() const noexcept { return coeff_[0]; }
    const Vec3& derivative(int k) const;
    const std::vector<Vec3>& coefficients() const noexcept { return coeff_; }

    Jet component(int axis) const;

    VecJet differentiate() const;
    VecJet truncated(int order) const;

    VecJet operator-() const;
    friend VecJet operator+(const VecJet& a, const VecJet& b);
    friend VecJet operator-(const VecJet& a, const VecJet& b);
    friend VecJet operator*(const Jet& s, const VecJet& v);
    friend VecJet operator*(const VecJet& v, const Jet& s);
    friend VecJet operator*(double s, const VecJet& v);
    friend VecJet operator*(const VecJet& v, double s);
    friend VecJet operator/(const VecJet& v, const Jet& s);

    friend Jet dot(const VecJet& a, const VecJet& b);
    friend VecJet cross(const VecJet& a, const VecJet& b);

private:
    explicit VecJet(std::vector<Vec3> coeff) : coeff_(std::move(coeff)) {}

    std::vector<Vec3> coeff_;
};

Jet squared_norm(const VecJet& v);
Jet norm(const VecJet& v);

} // namespace curvetk
