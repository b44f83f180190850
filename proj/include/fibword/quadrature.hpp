#pragma once

// Double-exponential quadrature. Both rules cluster nodes doubly exponentially
// at the endpoints, so integrable endpoint singularities (x^{k-1}, k < 1) are
// handled without special casing.

#include <cmath>
#include <limits>
#include <numbers>

namespace fibword::quadrature {

struct Estimate {
    double value = 0.0;
    double residual = 0.0;  // |I_h - I_{2h}| at the last refinement
    int levels = 0;
    bool converged = false;
};

namespace detail {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Sum over the abscissae t = j*h, j odd (or all j when `all` is set), for j >= 1.
template <typename Term>
double sweep(Term&& term, double h, bool all, double t_max) {
    double sum = 0.0;
    const int step = all ? 1 : 2;
    for (int j = 1;; j += step) {
        const double t = j * h;
        if (t > t_max) break;
        double left = 0.0, right = 0.0;
        const bool alive = term(t, left, right);
        sum += left + right;
        if (!alive) break;
    }
    return sum;
}

}  // namespace detail

/// tanh-sinh rule on a finite interval [a, b], a < b.
template <typename F>
Estimate tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-13, int max_levels = 12) {
    const double half = 0.5 * (b - a);
    // Distance from the nearer endpoint is 2*half/(1 + e^{2u}); keeps nodes near a exact.
    auto term = [&](double t, double& left, double& right) {
        const double u = detail::kHalfPi * std::sinh(t);
        const double e = std::exp(2.0 * u);
        const double d = 2.0 * half / (1.0 + e);
        const double cu = std::cosh(u);
        const double w = half * detail::kHalfPi * std::cosh(t) / (cu * cu);
        if (!(d > 0.0) || !(w > 0.0)) return false;
        // Each side stops contributing once its node rounds onto the endpoint.
        const bool left_inside = a + d > a;
        const bool right_inside = b - d < b;
        left = left_inside ? w * f(a + d) : 0.0;
        right = right_inside ? w * f(b - d) : 0.0;
        return left_inside || right_inside;
    };
    const double t_max = 6.5;
    double h = 1.0;
    double sum = half * detail::kHalfPi * f(a + half) + detail::sweep(term, h, true, t_max);
    Estimate est{h * sum, std::numeric_limits<double>::infinity(), 0, false};
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        sum += detail::sweep(term, h, false, t_max);
        const double next = h * sum;
        est.residual = std::abs(next - est.value);
        est.value = next;
        est.levels = level;
        if (level >= 3 && est.residual <= rel_tol * std::abs(next)) {
            est.converged = true;
            break;
        }
    }
    if (!est.converged && est.residual == 0.0) est.converged = true;
    return est;
}

/// exp-sinh rule on [a, +inf): x = a + exp(pi/2 sinh t).
template <typename F>
Estimate exp_sinh(F&& f, double a, double rel_tol = 1e-13, int max_levels = 12) {
    auto node = [&](double t, double& contribution) {
        const double s = detail::kHalfPi * std::sinh(t);
        const double offset = std::exp(s);
        const double w = detail::kHalfPi * std::cosh(t) * offset;
        if (!(offset > 0.0) || !std::isfinite(offset) || a + offset == a) {
            contribution = 0.0;
            return false;
        }
        contribution = w * f(a + offset);
        return std::isfinite(contribution);
    };
    auto term = [&](double t, double& left, double& right) {
        double l = 0.0, r = 0.0;
        const bool l_ok = node(-t, l);
        const bool r_ok = node(t, r);
        left = l_ok ? l : 0.0;
        right = r_ok ? r : 0.0;
        return l_ok || r_ok;
    };
    const double t_max = 6.5;
    double h = 1.0;
    double centre = 0.0;
    node(0.0, centre);
    double sum = centre + detail::sweep(term, h, true, t_max);
    Estimate est{h * sum, std::numeric_limits<double>::infinity(), 0, false};
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        sum += detail::sweep(term, h, false, t_max);
        const double next = h * sum;
        est.residual = std::abs(next - est.value);
        est.value = next;
        est.levels = level;
        if (level >= 3 && est.residual <= rel_tol * std::abs(next)) {
            est.converged = true;
            break;
        }
    }
    if (!est.converged && est.residual == 0.0) est.converged = true;
    return est;
}

}  // namespace fibword::quadrature
