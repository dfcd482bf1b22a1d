#include "curvetk/vecjet.hpp"

#include <algorithm>
#include <string>

namespace curvetk {

VecJet VecJet::constant(const Vec3& value, int order) {
    if (order < 0)
        raise(errc::domain_error, "vector jet order must be non-negative");
    std::vector<Vec3> c(order + 1, Vec3::Zero());
    c[0] = value;
    return VecJet(std::move(c));
}

VecJet VecJet::from_derivatives(std::vector<Vec3> derivatives) {
    if (derivatives.empty())
        raise(errc::domain_error, "vector jet needs at least the value coefficient");
    return VecJet(std::move(derivatives));
}

VecJet VecJet::from_components(const Jet& x, const Jet& y, const Jet& z) {
    const int n = std::min({x.order(), y.order(), z.order()});
    std::vector<Vec3> c(n + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = Vec3(x.derivative(k), y.derivative(k), z.derivative(k));
    return VecJet(std::move(c));
}

const Vec3& VecJet::derivative(int k) const {
    if (k < 0 || k > order())
        raise(errc::jet_order_exhausted,
              "derivative " + std::to_string(k) + " requested from an order-" + std::to_string(order()) +
                  " vector jet");
    return coeff_[k];
}

Jet VecJet::component(int axis) const {
    std::vector<double> c(coeff_.size());
    for (std::size_t k = 0; k < coeff_.size(); ++k) c[k] = coeff_[k][axis];
    return Jet::from_derivatives(std::move(c));
}

VecJet VecJet::differentiate() const {
    if (order() == 0)
        raise(errc::jet_order_exhausted, "cannot differentiate an order-0 vector jet");
    std::vector<Vec3> c(coeff_.begin() + 1, coeff_.end());
    return VecJet(std::move(c));
}

VecJet VecJet::truncated(int order) const {
    if (order < 0)
        raise(errc::jet_order_exhausted, "truncation below order 0");
    if (order >= this->order()) return *this;
    std::vector<Vec3> c(coeff_.begin(), coeff_.begin() + order + 1);
    return VecJet(std::move(c));
}

VecJet VecJet::operator-() const {
    VecJet r = *this;
    for (Vec3& v : r.coeff_) v = -v;
    return r;
}

VecJet operator+(const VecJet& a, const VecJet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Vec3> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.coeff_[k] + b.coeff_[k];
    return VecJet(std::move(c));
}

VecJet operator-(const VecJet& a, const VecJet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Vec3> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.coeff_[k] - b.coeff_[k];
    return VecJet(std::move(c));
}

VecJet operator*(const Jet& s, const VecJet& v) {
    const int n = std::min(s.order(), v.order());
    std::vector<Vec3> c(n + 1, Vec3::Zero());
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
            c[k] += binomial(k, i) * s.derivative(i) * v.coeff_[k - i];
    return VecJet(std::move(c));
}

VecJet operator*(const VecJet& v, const Jet& s) { return s * v; }

VecJet operator*(double s, const VecJet& v) {
    VecJet r = v;
    for (Vec3& x : r.coeff_) x *= s;
    return r;
}

VecJet operator*(const VecJet& v, double s) { return s * v; }

VecJet operator/(const VecJet& v, const Jet& s) {
    const int n = std::min(s.order(), v.order());
    return VecJet::from_components(v.component(0) / s, v.component(1) / s, v.component(2) / s).truncated(n);
}

Jet dot(const VecJet& a, const VecJet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<double> c(n + 1, 0.0);
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
            c[k] += binomial(k, i) * a.coeff_[i].dot(b.coeff_[k - i]);
    return Jet::from_derivatives(std::move(c));
}

VecJet cross(const VecJet& a, const VecJet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Vec3> c(n + 1, Vec3::Zero());
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
            c[k] += binomial(k, i) * a.coeff_[i].cross(b.coeff_[k - i]);
    return VecJet(std::move(c));
}

Jet squared_norm(const VecJet& v) { return dot(v, v); }

Jet norm(const VecJet& v) { return sqrt(dot(v, v)); }

} // namespace curvetk
