#include "sptrec/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sptrec/arith.hpp"
#include "sptrec/quadrature.hpp"

namespace sptrec {

namespace {

constexpr double pi = std::numbers::pi;
const double sqrt_pi = std::sqrt(pi);

// Gamma(-1/2, x) by the standard continued fraction (modified Lentz).
// No cancellation, so it covers the regime where the two-term closed form
// loses digits. Reliable for x >= 8 or so; we call it for x >= 16.
double gamma_upper_half_cf(double x) {
    constexpr double a = -0.5;
    constexpr double tiny = 1e-300;
    const double eps = std::numeric_limits<double>::epsilon();
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) <= eps) return std::exp(-x) * h / std::sqrt(x);
    }
    throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

NumericCheckResult make_result(std::string check, std::string parameters, double value,
                               double target, double tolerance) {
    NumericCheckResult r;
    r.check = std::move(check);
    r.parameters = std::move(parameters);
    r.value = value;
    r.target = target;
    r.abs_error = std::abs(value - target);
    r.rel_error = target != 0.0
                      ? r.abs_error / std::abs(target)
                      : (r.abs_error == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    r.tolerance = tolerance;
    r.pass = r.abs_error <= tolerance || r.rel_error <= tolerance;
    return r;
}

void require_positive_y(double y) {
    if (!(y > 0.0)) throw std::domain_error("coefficient functions need y > 0");
}

// Largest m whose term beta(m^2 * scale) is still representable: beyond
// 4*pi*m^2*scale ~ 746 the exponential underflows to zero.
std::int64_t truncation_bound(double scale) {
    return static_cast<std::int64_t>(std::sqrt(746.0 / (4.0 * pi * scale))) + 1;
}

} // namespace

double beta_incomplete(double y) {
    if (!(y > 0.0)) throw std::domain_error("beta_incomplete needs y > 0");
    const double x = 4.0 * pi * y;
    if (x < 16.0) {
        const double r = std::sqrt(x);
        return 2.0 * std::exp(-x) / r - 2.0 * sqrt_pi * std::erfc(r);
    }
    return gamma_upper_half_cf(x);
}

double beta_asymptotic_ratio(double y) {
    const double x = 4.0 * pi * y;
    return beta_incomplete(y) / (std::exp(-x) / (x * std::sqrt(x)));
}

double projection_weight(int k, int m) {
    if (k < 2) throw std::domain_error("projection weight needs k >= 2");
    if (m < 1) throw std::domain_error("projection weight needs m >= 1");
    return std::pow(4.0 * pi * m, k - 1) / std::tgamma(k - 1);
}

NumericCheckResult gamma_integral_check(double A, double B) {
    if (!(A > 0.0) || !(B > 0.0))
        throw std::domain_error("gamma integral check needs A > 0 and B > 0");
    // After y = t^2 the integrand extends smoothly to t = 0; the tail is
    // below e^-60 at the cutoff.
    const auto integrand = [A, B](double t) {
        const double y = t * t;
        return 2.0 * t * beta_incomplete(A * y) * std::exp(-4.0 * pi * B * y);
    };
    const double cutoff = std::sqrt(60.0 / (4.0 * pi * (A + B)));
    const QuadratureResult q = integrate(integrand, 0.0, cutoff, 1e-11);
    const double ratio = B / A;
    const double closed = ratio / (std::sqrt(1.0 + ratio) + 1.0) / (2.0 * sqrt_pi * B);
    std::ostringstream params;
    params << "A=" << A << " B=" << B;
    return make_result("gamma_lemma", params.str(), q.value, closed, 1e-8);
}

std::vector<std::pair<std::int64_t, std::int64_t>> square_difference_solutions(std::int64_t T) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t d = 1; d * d < T; ++d) {
        if (T % d != 0) continue;
        const std::int64_t e = T / d;
        if ((e - d) % 2 != 0) continue;
        out.emplace_back((d + e) / 2, (e - d) / 2);
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> odd_square_difference_solutions(std::int64_t T) {
    auto solutions = square_difference_solutions(T);
    std::erase_if(solutions, [](const std::pair<std::int64_t, std::int64_t>& s) {
        return s.first % 2 == 0 || s.second % 2 == 0;
    });
    return solutions;
}

double B_coefficient(std::int64_t N, double y) {
    require_positive_y(y);
    double bracket = 0.0;
    if (N > 0) {
        for (const auto& [n, m] : square_difference_solutions(N))
            bracket += 2.0 * static_cast<double>(m) *
                       beta_incomplete(static_cast<double>(m) * static_cast<double>(m) * y);
        if (delta_square(N)) bracket += 1.0 / std::sqrt(pi * y);
    } else if (N < 0) {
        // solutions of m^2 - n^2 = |N| with m > n >= 1; weight is the larger leg
        for (const auto& [big, small] : square_difference_solutions(-N))
            bracket += 2.0 * static_cast<double>(big) *
                       beta_incomplete(static_cast<double>(big) * static_cast<double>(big) * y);
        if (delta_square(-N)) {
            const double root = std::sqrt(static_cast<double>(-N));
            bracket += root * beta_incomplete(static_cast<double>(-N) * y);
        }
    } else {
        bracket = 1.0 / (2.0 * std::sqrt(pi * y));
        const std::int64_t cap = truncation_bound(y);
        for (std::int64_t m = 1; m <= cap; ++m)
            bracket += 2.0 * static_cast<double>(m) *
                       beta_incomplete(static_cast<double>(m) * static_cast<double>(m) * y);
    }
    const double sign = (N % 2 != 0) ? -1.0 : 1.0;
    return sign / sqrt_pi * bracket;
}

double C_coefficient(std::int64_t N, double y) {
    require_positive_y(y);
    double total = 0.0;
    if (N > 0) {
        for (const auto& [n, m] : odd_square_difference_solutions(8 * N))
            total += static_cast<double>(m) *
                     beta_incomplete(static_cast<double>(m) * static_cast<double>(m) * y / 8.0);
    } else if (N < 0) {
        for (const auto& [big, small] : odd_square_difference_solutions(-8 * N))
            total += static_cast<double>(big) *
                     beta_incomplete(static_cast<double>(big) * static_cast<double>(big) * y / 8.0);
    } else {
        // n = m: every odd m contributes until the terms underflow
        const std::int64_t cap = truncation_bound(y / 8.0);
        for (std::int64_t m = 1; m <= cap; m += 2)
            total += static_cast<double>(m) *
                     beta_incomplete(static_cast<double>(m) * static_cast<double>(m) * y / 8.0);
    }
    return total / (4.0 * sqrt_pi);
}

namespace {

NumericCheckResult projected_coefficient(const char* check, int N, double (*coefficient)(std::int64_t, double),
                                         double target) {
    if (N < 1 || N > 200)
        throw std::domain_error("projected coefficients cover 1 <= N <= 200");
    const auto integrand = [N, coefficient](double t) {
        const double y = t * t;
        return 4.0 * pi * N * coefficient(N, y) * std::exp(-4.0 * pi * N * y) * 2.0 * t;
    };
    const double cutoff = std::sqrt(10.0 / N);
    const QuadratureResult q = integrate(integrand, 0.0, cutoff, 1e-11);
    return make_result(check, "N=" + std::to_string(N), q.value, target, 1e-6);
}

} // namespace

NumericCheckResult projected_coefficient_B(int N) {
    return projected_coefficient("proj_b", N, B_coefficient, -static_cast<double>(b_coeff(N)));
}

NumericCheckResult projected_coefficient_C(int N) {
    return projected_coefficient("proj_c", N, C_coefficient, static_cast<double>(big_c(N)));
}

} // namespace sptrec
