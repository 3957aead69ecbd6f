#include "sptrec/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace sptrec {

namespace {

int require_nonnegative_precision(int precision) {
    if (precision < 0)
        throw std::invalid_argument("series precision must be non-negative, got " +
                                    std::to_string(precision));
    return precision;
}

int count_nonzero(const std::vector<Int>& v) {
    int n = 0;
    for (const Int& x : v)
        if (!is_zero(x)) ++n;
    return n;
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs, int precision)
    : coeffs_(std::move(coeffs)) {
    require_nonnegative_precision(precision);
    if (static_cast<int>(coeffs_.size()) != precision + 1)
        throw std::invalid_argument("series of precision " + std::to_string(precision) +
                                    " needs " + std::to_string(precision + 1) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
}

TruncatedSeries TruncatedSeries::zero(int precision) {
    require_nonnegative_precision(precision);
    return TruncatedSeries(std::vector<Int>(precision + 1), precision);
}

TruncatedSeries TruncatedSeries::one(int precision) {
    std::vector<Int> c(require_nonnegative_precision(precision) + 1);
    c[0] = 1;
    return TruncatedSeries(std::move(c), precision);
}

const Int& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > precision())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " outside 0.." + std::to_string(precision()));
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int prec = std::min(a.precision(), b.precision());
    // Schoolbook convolution, skipping zero coefficients. The generating
    // series here are mostly sparse (pentagonal, square, triangular support),
    // so iterating the sparser factor outside makes the sweeps cheap.
    const std::vector<Int>* outer = &a.coeffs();
    const std::vector<Int>* inner = &b.coeffs();
    if (count_nonzero(*outer) > count_nonzero(*inner)) std::swap(outer, inner);

    std::vector<Int> out(static_cast<std::size_t>(prec) + 1);
    for (int i = 0; i <= prec; ++i) {
        const Int& oi = (*outer)[static_cast<std::size_t>(i)];
        if (is_zero(oi)) continue;
        const int jmax = prec - i;
        for (int j = 0; j <= jmax; ++j) {
            const Int& ij = (*inner)[static_cast<std::size_t>(j)];
            if (is_zero(ij)) continue;
            mpz_addmul(out[static_cast<std::size_t>(i + j)].get_mpz_t(), oi.get_mpz_t(),
                       ij.get_mpz_t());
        }
    }
    return TruncatedSeries(std::move(out), prec);
}

TruncatedSeries invert(const TruncatedSeries& a) {
    const Int& a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("series inverse needs constant term +1 or -1, got " +
                                a0.get_str());
    const int prec = a.precision();
    const bool unit = (a0 == 1);

    // b_n = -a0 * sum_{k=1..n} a_k b_{n-k}, with a0 its own inverse.
    std::vector<int> support;
    for (int k = 1; k <= prec; ++k)
        if (!is_zero(a.coeffs()[static_cast<std::size_t>(k)])) support.push_back(k);

    std::vector<Int> b(static_cast<std::size_t>(prec) + 1);
    b[0] = a0;
    Int acc;
    for (int n = 1; n <= prec; ++n) {
        acc = 0;
        for (int k : support) {
            if (k > n) break;
            mpz_addmul(acc.get_mpz_t(), a.coeffs()[static_cast<std::size_t>(k)].get_mpz_t(),
                       b[static_cast<std::size_t>(n - k)].get_mpz_t());
        }
        if (unit) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
        b[static_cast<std::size_t>(n)] = acc;
    }
    return TruncatedSeries(std::move(b), prec);
}

TruncatedSeries euler_product_series(int precision) {
    require_nonnegative_precision(precision);
    std::vector<Int> c(static_cast<std::size_t>(precision) + 1);
    c[0] = 1; // k = 0
    for (long long k = 1;; ++k) {
        const long long up = k * (3 * k + 1) / 2;   // k > 0
        const long long down = k * (3 * k - 1) / 2; // k < 0 branch
        if (down > precision) break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(down)] = sign;
        if (up <= precision) c[static_cast<std::size_t>(up)] = sign;
    }
    return TruncatedSeries(std::move(c), precision);
}

TruncatedSeries theta_series(int precision) {
    require_nonnegative_precision(precision);
    std::vector<Int> c(static_cast<std::size_t>(precision) + 1);
    c[0] = 1;
    for (long long n = 1; n * n <= precision; ++n)
        c[static_cast<std::size_t>(n * n)] = (n % 2 == 0) ? 2 : -2;
    return TruncatedSeries(std::move(c), precision);
}

TruncatedSeries triangular_series(int precision) {
    require_nonnegative_precision(precision);
    std::vector<Int> c(static_cast<std::size_t>(precision) + 1);
    for (long long k = 0; k * (k + 1) / 2 <= precision; ++k)
        c[static_cast<std::size_t>(k * (k + 1) / 2)] = 1;
    return TruncatedSeries(std::move(c), precision);
}

TruncatedSeries e2_series(int precision) {
    require_nonnegative_precision(precision);
    // sigma(n) for all n <= precision at once, by sieving multiples.
    std::vector<long> sigma(static_cast<std::size_t>(precision) + 1, 0);
    for (long d = 1; d <= precision; ++d)
        for (long m = d; m <= precision; m += d) sigma[static_cast<std::size_t>(m)] += d;

    std::vector<Int> c(static_cast<std::size_t>(precision) + 1);
    c[0] = 1;
    for (int n = 1; n <= precision; ++n) c[static_cast<std::size_t>(n)] = -24 * sigma[static_cast<std::size_t>(n)];
    return TruncatedSeries(std::move(c), precision);
}

} // namespace sptrec
