#pragma once

#include <cstdint>

namespace sptrec {

/// sum of divisors of n; 0 unless n is a positive integer.
std::int64_t sigma(std::int64_t n);
/// sigma at the rational num/den; 0 off the positive integers.
std::int64_t sigma(std::int64_t num, std::int64_t den);

/// s(n) = sum_{d|n} min(d, n/d); 0 unless n is a positive integer.
std::int64_t s_min(std::int64_t n);
/// s at the rational num/den; 0 off the positive integers.
std::int64_t s_min(std::int64_t num, std::int64_t den);

/// The real character mod 12: +1 at +-1, -1 at +-5, 0 when gcd(m,12) > 1.
int kronecker12(std::int64_t m);

/// a(n) = -sum over ab = 6n, 0 < a < b, of chi12(b^2 - a^2) * a.
std::int64_t a_coeff(std::int64_t n);

/// b(n) = (-1)^(n+1) * { 2s(n) for odd n; 4s(n/4) when 4|n; 0 when n = 2 mod 4 }.
std::int64_t b_coeff(std::int64_t n);

/// c(n) = sigma(n) - sigma(n/2) - s(2n)/2 + s(n/2). Always an integer; the
/// halving is checked exactly.
std::int64_t c_coeff(std::int64_t n);

/// 1 if n is a perfect square (0 included), else 0.
int delta_square(std::int64_t n);

/// C(N) = s(2N)/2 - s(N/2), equal to the sum of u over factorizations
/// uv = 2N with u < v and u + v odd. Both routes are computed and compared.
std::int64_t big_c(std::int64_t n);

} // namespace sptrec
