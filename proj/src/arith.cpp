#include "sptrec/arith.hpp"

#include <stdexcept>
#include <string>

namespace sptrec {

namespace {

std::int64_t require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw std::domain_error(std::string(what) + " needs n >= 1, got " + std::to_string(n));
    return n;
}

} // namespace

std::int64_t sigma(std::int64_t n) {
    if (n < 1) return 0;
    std::int64_t total = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += d;
        const std::int64_t q = n / d;
        if (q != d) total += q;
    }
    return total;
}

std::int64_t sigma(std::int64_t num, std::int64_t den) {
    if (den == 0 || num % den != 0) return 0;
    return sigma(num / den);
}

std::int64_t s_min(std::int64_t n) {
    if (n < 1) return 0;
    // Divisors pair off as d <-> n/d with equal min, so every divisor d with
    // d*d < n contributes 2d, and a square root contributes itself once.
    std::int64_t total = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += (d * d == n) ? d : 2 * d;
    }
    return total;
}

std::int64_t s_min(std::int64_t num, std::int64_t den) {
    if (den == 0 || num % den != 0) return 0;
    return s_min(num / den);
}

int kronecker12(std::int64_t m) {
    std::int64_t r = m % 12;
    if (r < 0) r += 12;
    if (r == 1 || r == 11) return 1;
    if (r == 5 || r == 7) return -1;
    return 0;
}

std::int64_t a_coeff(std::int64_t n) {
    require_positive(n, "a_coeff");
    const std::int64_t target = 6 * n;
    std::int64_t total = 0;
    for (std::int64_t a = 1; a * a < target; ++a) {
        if (target % a != 0) continue;
        const std::int64_t b = target / a;
        // chi12(b^2 - a^2) from the residues alone, no big squares needed
        const std::int64_t ar = a % 12, br = b % 12;
        total += kronecker12(br * br - ar * ar) * a;
    }
    return -total;
}

std::int64_t b_coeff(std::int64_t n) {
    require_positive(n, "b_coeff");
    const std::int64_t sign = (n % 2 == 0) ? -1 : 1; // (-1)^(n+1)
    if (n % 2 == 1) return sign * 2 * s_min(n);
    if (n % 4 == 0) return sign * 4 * s_min(n / 4);
    return 0;
}

std::int64_t c_coeff(std::int64_t n) {
    require_positive(n, "c_coeff");
    // Work with 2*c(n) so the s(2n)/2 term stays in integers.
    const std::int64_t twice =
        2 * sigma(n) - 2 * sigma(n, 2) - s_min(2 * n) + 2 * s_min(n, 2);
    if (twice % 2 != 0)
        throw std::logic_error("c_coeff: 2c(" + std::to_string(n) + ") = " +
                               std::to_string(twice) + " is odd");
    return twice / 2;
}

int delta_square(std::int64_t n) {
    if (n < 0) return 0;
    std::int64_t r = 0;
    while (r * r < n) ++r; // n <= ~1e10 in practice; fine without isqrt tricks
    return r * r == n ? 1 : 0;
}

std::int64_t big_c(std::int64_t n) {
    require_positive(n, "big_c");
    const std::int64_t s2n = s_min(2 * n);
    if (s2n % 2 != 0)
        throw std::logic_error("big_c: s(2N) odd at N = " + std::to_string(n));
    const std::int64_t closed = s2n / 2 - s_min(n, 2);

    // Same value from the factor pairs uv = 2N, u < v, u + v odd.
    std::int64_t direct = 0;
    const std::int64_t target = 2 * n;
    for (std::int64_t u = 1; u * u < target; ++u) {
        if (target % u != 0) continue;
        const std::int64_t v = target / u;
        if ((u + v) % 2 == 1) direct += u;
    }
    if (direct != closed)
        throw std::logic_error("big_c mismatch at N = " + std::to_string(n) + ": closed " +
                               std::to_string(closed) + ", direct " + std::to_string(direct));
    return closed;
}

} // namespace sptrec
