#pragma once

#include <vector>

#include "curvetk/error.hpp"

namespace curvetk {

// Truncated jet of a scalar function at a point: coefficient k holds the
// k-th derivative value d^k f / dt^k (not the Taylor coefficient, which
// differs by k!). Arithmetic propagates derivatives exactly through the
// Leibniz and chain rules, so a jet of order K is exact calculus up to
// order K; there is no step-size error anywhere in this type.
//
// Operations on jets of different orders truncate to the smaller order,
// which is how orders naturally shrink as expressions compose (alpha'
// has one order less than alpha, and so on). Taking the derivative of an
// order-0 jet is a hard error (jet_order_exhausted), never silent garbage.
class Jet {
public:
    Jet() : coeff_(1, 0.0) {}

    static Jet constant(double value, int order);
    // The evaluation parameter itself: value t, first derivative 1.
    static Jet variable(double t, int order);
    static Jet from_derivatives(std::vector<double> derivatives);

    int order() const noexcept { return static_cast<int>(coeff_.size()) - 1; }
    double value() const noexcept { return coeff_[0]; }

    // d^k value; throws jet_order_exhausted when the jet is too short.
    double derivative(int k) const;

    const std::vector<double>& coefficients() const noexcept { return coeff_; }

    // Jet of f' with order reduced by one.
    Jet differentiate() const;

    // Copy truncated to a lower order (no-op when already at or below it).
    Jet truncated(int order) const;

    Jet operator-() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet operator+(const Jet& a, double b);
    friend Jet operator+(double a, const Jet& b);
    friend Jet operator-(const Jet& a, double b);
    friend Jet operator-(double a, const Jet& b);
    friend Jet operator*(const Jet& a, double b);
    friend Jet operator*(double a, const Jet& b);
    friend Jet operator/(const Jet& a, double b);
    friend Jet operator/(double a, const Jet& b);

    friend Jet sin(const Jet& u);
    friend Jet cos(const Jet& u);
    friend Jet exp(const Jet& u);
    friend Jet sqrt(const Jet& u);
    friend Jet pow(const Jet& u, long long n);

private:
    explicit Jet(std::vector<double> coeff) : coeff_(std::move(coeff)) {}

    std::vector<double> coeff_;
};

// Binomial coefficient as a double; n capped well above any usable jet order.
double binomial(int n, int k);

} // namespace curvetk
