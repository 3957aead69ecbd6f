#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sptrec {

/// Gamma(-1/2, 4*pi*y), the decay profile of the non-holomorphic Fourier
/// coefficients. Relative accuracy ~1e-12 for y in [1e-6, 50]; the value
/// underflows to 0 past y ~ 59. Throws std::domain_error for y <= 0.
double beta_incomplete(double y);

/// beta(y) divided by its large-y asymptote (4*pi*y)^(-3/2) e^(-4*pi*y).
double beta_asymptotic_ratio(double y);

/// The scalar weight (4*pi*m)^(k-1) / (k-2)! in front of the projection
/// integral for the coefficient of q^m at weight k. Requires k >= 2, m >= 1.
double projection_weight(int k, int m);

/// One floating-point check: a computed value against its exact target.
/// pass holds iff abs_error <= tolerance or rel_error <= tolerance.
struct NumericCheckResult {
    std::string check;
    std::string parameters;
    double value = 0.0;
    double target = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Checks int_0^inf beta(A*y) e^(-4*pi*B*y) dy (adaptive quadrature after the
/// substitution y = t^2, which removes the 1/sqrt(y) blow-up at 0) against
/// the closed form (1/(2*sqrt(pi)*B)) (sqrt(1 + B/A) - 1). Tolerance 1e-8.
NumericCheckResult gamma_integral_check(double A, double B);

/// All (n, m) with n > m >= 1 and n^2 - m^2 = T, found by pairing divisors
/// d*e = T of equal parity. Ordered by decreasing n. Empty for T <= 0.
std::vector<std::pair<std::int64_t, std::int64_t>> square_difference_solutions(std::int64_t T);

/// The subset of square_difference_solutions(T) with n and m both odd
/// (nonempty only when 8 divides T).
std::vector<std::pair<std::int64_t, std::int64_t>> odd_square_difference_solutions(std::int64_t T);

/// Non-holomorphic correction coefficient of q^N on the overpartition side:
///   (-1)^N/sqrt(pi) * [ 2 sum m*beta(m^2 y) + boundary terms ],
/// the sum running over n^2 - m^2 = N (over m > n >= 1 with the larger leg
/// as weight when N < 0, over all m >= 1 when N = 0). The square-index
/// boundary term is (1/sqrt(pi*y)) for N > 0 and sqrt(|N|)*beta(|N|y) for
/// N < 0. Throws std::domain_error for y <= 0.
double B_coefficient(std::int64_t N, double y);

/// Companion coefficient on the no-repeated-odd-parts side:
///   (1/(4*sqrt(pi))) * sum of m*beta(m^2 y / 8) over n^2 - m^2 = 8N with
/// n, m odd (larger leg as weight when N < 0; all odd m when N = 0).
double C_coefficient(std::int64_t N, double y);

/// Projection integral 4*pi*N int_0^inf B(N,y) e^(-4*pi*N*y) dy, by
/// quadrature in t = sqrt(y), against the exact target -b(N).
/// Tolerance 1e-6; requires 1 <= N <= 200.
NumericCheckResult projected_coefficient_B(int N);

/// Same integral over C(N,y), against the exact target s(2N)/2 - s(N/2).
NumericCheckResult projected_coefficient_C(int N);

} // namespace sptrec
