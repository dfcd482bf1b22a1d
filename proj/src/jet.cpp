#include "curvetk/jet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "curvetk/tolerances.hpp"

namespace curvetk {

namespace {

constexpr int max_order = 32;

// Pascal's triangle, built once. Exact in double up to n = 32.
const std::array<std::array<double, max_order + 1>, max_order + 1>& binomial_table() {
    static const auto table = [] {
        std::array<std::array<double, max_order + 1>, max_order + 1> c{};
        for (int n = 0; n <= max_order; ++n) {
            c[n][0] = 1.0;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
        }
        return c;
    }();
    return table;
}

int common_order(const Jet& a, const Jet& b) {
    return std::min(a.order(), b.order());
}

} // namespace

double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > max_order)
        raise(errc::domain_error, "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
    return binomial_table()[n][k];
}

Jet Jet::constant(double value, int order) {
    if (order < 0 || order > max_order)
        raise(errc::domain_error, "jet order " + std::to_string(order) + " out of range");
    std::vector<double> c(order + 1, 0.0);
    c[0] = value;
    return Jet(std::move(c));
}

Jet Jet::variable(double t, int order) {
    Jet j = constant(t, order);
    if (order >= 1) j.coeff_[1] = 1.0;
    return j;
}

Jet Jet::from_derivatives(std::vector<double> derivatives) {
    if (derivatives.empty() || derivatives.size() > max_order + 1)
        raise(errc::domain_error, "jet needs between 1 and 33 coefficients");
    return Jet(std::move(derivatives));
}

double Jet::derivative(int k) const {
    if (k < 0 || k > order())
        raise(errc::jet_order_exhausted,
              "derivative " + std::to_string(k) + " requested from an order-" + std::to_string(order()) + " jet");
    return coeff_[k];
}

Jet Jet::differentiate() const {
    if (order() == 0)
        raise(errc::jet_order_exhausted, "cannot differentiate an order-0 jet");
    std::vector<double> c(coeff_.begin() + 1, coeff_.end());
    return Jet(std::move(c));
}

Jet Jet::truncated(int order) const {
    if (order < 0)
        raise(errc::jet_order_exhausted, "truncation below order 0");
    if (order >= this->order()) return *this;
    std::vector<double> c(coeff_.begin(), coeff_.begin() + order + 1);
    return Jet(std::move(c));
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (double& x : r.coeff_) x = -x;
    return r;
}

Jet operator+(const Jet& a, const Jet& b) {
    const int n = common_order(a, b);
    std::vector<double> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.coeff_[k] + b.coeff_[k];
    return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
    const int n = common_order(a, b);
    std::vector<double> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.coeff_[k] - b.coeff_[k];
    return Jet(std::move(c));
}

// (fg)^(k) = sum_i C(k,i) f^(i) g^(k-i)
Jet operator*(const Jet& a, const Jet& b) {
    const int n = common_order(a, b);
    std::vector<double> c(n + 1, 0.0);
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
            c[k] += binomial(k, i) * a.coeff_[i] * b.coeff_[k - i];
    return Jet(std::move(c));
}

// h = f/g solved from f = h g: h^(k) = (f^(k) - sum_{i<k} C(k,i) h^(i) g^(k-i)) / g
Jet operator/(const Jet& a, const Jet& b) {
    if (std::abs(b.value()) <= eps_div)
        raise(errc::guard_violation, "jet division by value " + format_value(b.value()));
    const int n = common_order(a, b);
    std::vector<double> h(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double acc = a.coeff_[k];
        for (int i = 0; i < k; ++i)
            acc -= binomial(k, i) * h[i] * b.coeff_[k - i];
        h[k] = acc / b.coeff_[0];
    }
    return Jet(std::move(h));
}

Jet operator+(const Jet& a, double b) { return a + Jet::constant(b, a.order()); }
Jet operator+(double a, const Jet& b) { return Jet::constant(a, b.order()) + b; }
Jet operator-(const Jet& a, double b) { return a - Jet::constant(b, a.order()); }
Jet operator-(double a, const Jet& b) { return Jet::constant(a, b.order()) - b; }

Jet operator*(const Jet& a, double b) {
    Jet r = a;
    for (double& x : r.coeff_) x *= b;
    return r;
}
Jet operator*(double a, const Jet& b) { return b * a; }
Jet operator/(const Jet& a, double b) {
    if (std::abs(b) <= eps_div)
        raise(errc::guard_violation, "jet division by scalar " + format_value(b));
    return a * (1.0 / b);
}
Jet operator/(double a, const Jet& b) { return Jet::constant(a, b.order()) / b; }

// sin and cos advance together: s' = c u', c' = -s u', so
// s^(k) = (c u')^(k-1) needs only coefficients already filled.
Jet sin(const Jet& u) {
    const int n = u.order();
    std::vector<double> s(n + 1), c(n + 1);
    s[0] = std::sin(u.coeff_[0]);
    c[0] = std::cos(u.coeff_[0]);
    for (int k = 1; k <= n; ++k) {
        double ds = 0.0, dc = 0.0;
        for (int i = 0; i < k; ++i) {
            const double w = binomial(k - 1, i) * u.coeff_[k - i];
            ds += w * c[i];
            dc -= w * s[i];
        }
        s[k] = ds;
        c[k] = dc;
    }
    return Jet(std::move(s));
}

Jet cos(const Jet& u) {
    const int n = u.order();
    std::vector<double> s(n + 1), c(n + 1);
    s[0] = std::sin(u.coeff_[0]);
    c[0] = std::cos(u.coeff_[0]);
    for (int k = 1; k <= n; ++k) {
        double ds = 0.0, dc = 0.0;
        for (int i = 0; i < k; ++i) {
            const double w = binomial(k - 1, i) * u.coeff_[k - i];
            ds += w * c[i];
            dc -= w * s[i];
        }
        s[k] = ds;
        c[k] = dc;
    }
    return Jet(std::move(c));
}

// e' = e u'  =>  e^(k) = sum_{i<k} C(k-1,i) e^(i) u^(k-i)
Jet exp(const Jet& u) {
    const int n = u.order();
    std::vector<double> e(n + 1);
    e[0] = std::exp(u.coeff_[0]);
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int i = 0; i < k; ++i)
            acc += binomial(k - 1, i) * e[i] * u.coeff_[k - i];
        e[k] = acc;
    }
    return Jet(std::move(e));
}

// r r = u  =>  r^(k) = (u^(k) - sum_{0<i<k} C(k,i) r^(i) r^(k-i)) / (2 r)
Jet sqrt(const Jet& u) {
    if (u.value() < 0.0)
        raise(errc::domain_error, "sqrt of negative value " + format_value(u.value()));
    if (u.value() <= eps_div)
        raise(errc::guard_violation, "sqrt leading value " + format_value(u.value()) + " below guard");
    const int n = u.order();
    std::vector<double> r(n + 1);
    r[0] = std::sqrt(u.coeff_[0]);
    for (int k = 1; k <= n; ++k) {
        double acc = u.coeff_[k];
        for (int i = 1; i < k; ++i)
            acc -= binomial(k, i) * r[i] * r[k - i];
        r[k] = acc / (2.0 * r[0]);
    }
    return Jet(std::move(r));
}

Jet pow(const Jet& u, long long n) {
    if (n == 0) return Jet::constant(1.0, u.order());
    if (n < 0) return Jet::constant(1.0, u.order()) / pow(u, -n);
    // Exponents are small integers from parsed expressions; square-and-multiply.
    Jet base = u;
    Jet result = Jet::constant(1.0, u.order());
    long long e = n;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

} // namespace curvetk
