#pragma once

#include <vector>

#include "sptrec/integer.hpp"

namespace sptrec {

/// Formal power series in q truncated at a fixed precision: exact integer
/// coefficients for q^0 .. q^precision. Values are immutable after
/// construction and safe to share across threads.
class TruncatedSeries {
public:
    /// Takes ownership of `coeffs`, which must have precision+1 entries.
    TruncatedSeries(std::vector<Int> coeffs, int precision);

    /// The zero series at the given precision.
    static TruncatedSeries zero(int precision);
    /// The constant series 1 at the given precision.
    static TruncatedSeries one(int precision);

    int precision() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^n, 0 <= n <= precision. Throws std::out_of_range.
    const Int& coeff(int n) const;

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Int> coeffs_;
};

/// Truncated Cauchy product. Result precision is min(a.precision, b.precision).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse through the common precision. The constant term of
/// `a` must be +1 or -1; throws std::domain_error otherwise.
TruncatedSeries invert(const TruncatedSeries& a);

/// prod_{n>=1} (1 - q^n): support on the generalized pentagonal numbers
/// k(3k+1)/2 (k over all integers) with coefficient (-1)^k.
TruncatedSeries euler_product_series(int precision);

/// sum_{n in Z} (-1)^n q^{n^2}: constant term 1, coefficient 2(-1)^n at q^{n^2}.
TruncatedSeries theta_series(int precision);

/// sum_{n>=0} q^{n(n+1)/2}: coefficient 1 at each triangular number.
TruncatedSeries triangular_series(int precision);

/// Eisenstein series E2 = 1 - 24 sum_{n>=1} sigma(n) q^n.
TruncatedSeries e2_series(int precision);

} // namespace sptrec
