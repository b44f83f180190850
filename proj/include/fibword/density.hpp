#pragma once

#include "exact.hpp"
#include "fibonacci.hpp"
#include "quadrature.hpp"
#include "words.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fibword {

/// A density (or ratio) observed at prefix length / index n.
struct DensitySample {
    std::uint64_t n = 0;
    Rational value;
    double value_real = 0.0;

    DensitySample() = default;
    DensitySample(std::uint64_t n_, Rational v) : n(n_), value(std::move(v)), value_real(to_double(value)) {}
};

/// Overlapping occurrences of `pattern` in `text` (prefix-function scan).
inline std::uint64_t count_occurrences(const Word& pattern, const Word& text) {
    if (pattern.empty()) throw std::invalid_argument("count_occurrences: empty pattern");
    detail::require_shared_alphabet(pattern, text);
    const std::string& p = pattern.str();
    const std::size_t m = p.size();
    std::vector<std::size_t> border(m, 0);
    for (std::size_t i = 1, k = 0; i < m; ++i) {
        while (k > 0 && p[i] != p[k]) k = border[k - 1];
        if (p[i] == p[k]) ++k;
        border[i] = k;
    }
    std::uint64_t count = 0;
    std::size_t k = 0;
    for (Symbol c : text) {
        while (k > 0 && c != p[k]) k = border[k - 1];
        if (c == p[k]) ++k;
        if (k == m) {
            ++count;
            k = border[k - 1];
        }
    }
    return count;
}

/// C(pattern) / n over the first n symbols of the infinite Fibonacci word.
inline DensitySample density(const Word& pattern, std::uint64_t prefix_len) {
    if (prefix_len == 0) throw std::invalid_argument("density: prefix length must be positive");
    const auto count = count_occurrences(pattern, infinite_prefix(prefix_len));
    return {prefix_len, Rational(count, prefix_len)};
}

inline constexpr std::uint64_t kMaxCurveLength = 10000;

/// (n, F_n / F_{n+1}) for n = 1..n_max.
inline std::vector<DensitySample> ratio_curve(std::uint64_t n_max) {
    if (n_max < 1 || n_max > kMaxCurveLength) throw std::invalid_argument("ratio_curve: n_max must be in [1, 10000]");
    std::vector<DensitySample> out;
    out.reserve(n_max);
    BigInt cur = 1, next = 1;  // F_n, F_{n+1}
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        out.emplace_back(n, Rational(cur, next));
        BigInt after = cur + next;
        cur = std::move(next);
        next = std::move(after);
    }
    return out;
}

/// Exact sign of r - (phi - 1) for r > 0: -1, 0 or +1.
inline int compare_to_inverse_phi(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (r <= 0) return -1;
    const BigInt p = numerator(r), q = denominator(r);
    // p/q vs (sqrt5 - 1)/2  <=>  (2p + q)^2 vs 5 q^2
    const BigInt lhs = (2 * p + q) * (2 * p + q);
    const BigInt rhs = 5 * q * q;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

/// (n, |prefix_n|_letter / n) for n = 1..n_max over the infinite Fibonacci word.
inline std::vector<DensitySample> letter_density_curve(Symbol letter, std::uint64_t n_max) {
    if (letter != '0' && letter != '1') throw std::invalid_argument("letter_density_curve: letter must be 0 or 1");
    const Word prefix = infinite_prefix(n_max);
    std::vector<DensitySample> out;
    out.reserve(n_max);
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (prefix[n - 1] == letter) ++count;
        out.emplace_back(n, Rational(count, n));
    }
    return out;
}

/// sqrt(F_{n+2} / F_n): the hypotenuse-to-leg ratio of the Fibonacci right triangle.
inline double triangle_ratio(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("triangle_ratio: n must be at least 1");
    return std::sqrt(ratio_to_double(fib(n + 2), fib(n)));
}

/// e^{-n (phi - 1)}
inline double exp_sum_approx(std::uint64_t n) {
    return std::exp(-static_cast<double>(n) * (GoldenConstants::phi - 1.0));
}

/// Parameters of  integral_a^b e^{-x (1 + 1/tau)} x^{k-1} dx.
struct IntegralParams {
    double a = 0.0;
    double b = std::numeric_limits<double>::infinity();
    double k = 1.0;
    double tau = 1.0;

    void validate() const {
        if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("integral_density: k must be a positive finite number");
        if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("integral_density: tau must be a positive finite number");
        if (!std::isfinite(a) || a < 0.0) throw std::invalid_argument("integral_density: a must be finite and non-negative");
        if (std::isnan(b) || b < 0.0) throw std::invalid_argument("integral_density: b must be non-negative or +inf");
    }
};

/// Two independent evaluations of the same oriented integral.
struct IntegralEstimate {
    double quadrature = 0.0;   // double-exponential quadrature
    double closed_form = 0.0;  // (1+1/tau)^{-k} [gamma(k, b c) - gamma(k, a c)]
    double residual = 0.0;     // quadrature refinement difference
    bool converged = false;
};

namespace detail {

inline double gamma_closed_form(double k, double c, double lo, double hi) {
    namespace bm = boost::math;
    // lo < hi; pick the tail that avoids cancellation.
    double diff;
    if (std::isinf(hi)) {
        diff = bm::tgamma(k, lo * c);
    } else if (lo * c > k) {
        diff = bm::tgamma(k, lo * c) - bm::tgamma(k, hi * c);
    } else {
        diff = bm::tgamma_lower(k, hi * c) - bm::tgamma_lower(k, lo * c);
    }
    return std::pow(c, -k) * diff;
}

}  // namespace detail

/// Evaluates the integral along both routes. a > b integrates with the opposite orientation.
inline IntegralEstimate integral_density(const IntegralParams& p) {
    p.validate();
    if (p.a == p.b) return {0.0, 0.0, 0.0, true};
    const double c = 1.0 + 1.0 / p.tau;
    const double km1 = p.k - 1.0;
    auto integrand = [c, km1](double x) { return std::exp(-x * c + km1 * std::log(x)); };
    const double sign = p.a < p.b ? 1.0 : -1.0;
    const double lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);

    const quadrature::Estimate q = std::isinf(hi) ? quadrature::exp_sinh(integrand, lo)
                                                  : quadrature::tanh_sinh(integrand, lo, hi);
    IntegralEstimate out;
    out.quadrature = sign * q.value;
    out.residual = q.residual;
    out.converged = q.converged;
    out.closed_form = sign * detail::gamma_closed_form(p.k, c, lo, hi);
    return out;
}

}  // namespace fibword
