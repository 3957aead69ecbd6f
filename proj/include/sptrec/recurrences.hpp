#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sptrec/integer.hpp"
#include "sptrec/series.hpp"

namespace sptrec {

/// Exact values of one statistic for n = first_index() .. last_index().
class StatTable {
public:
    StatTable(std::string name, int first_index, std::vector<Int> values);

    const std::string& name() const { return name_; }
    int first_index() const { return first_index_; }
    int last_index() const { return first_index_ + static_cast<int>(values_.size()) - 1; }

    /// Throws std::out_of_range outside [first_index, last_index].
    const Int& at(int n) const;

    const std::vector<Int>& values() const { return values_; }

private:
    std::string name_;
    int first_index_;
    std::vector<Int> values_;
};

/// Partition numbers p(0..max_n) from the pentagonal-number recurrence.
StatTable p_table(int max_n);
/// Overpartition numbers pbar(0..max_n), by inverting the theta series.
StatTable pbar_table(int max_n);
/// m2(0..max_n): partitions with no repeated odd part, by inverting the
/// triangular series and stripping the alternating sign.
StatTable m2_table(int max_n);

/// Smallest-parts totals spt(1..max_n): the pentagonal recurrence seeded
/// with a(n).
StatTable spt_table(int max_n);
/// sptbar(1..max_n), odd smallest parts of overpartitions: the square-number
/// recurrence (weight 2 per square) seeded with b(n).
StatTable sptbar_table(int max_n);
/// m2spt(1..max_n), even smallest parts under the no-repeated-odd-part rule:
/// the triangular-number recurrence seeded with (-1)^n c(n).
StatTable m2spt_table(int max_n);

/// Seed sequences as series; the constant coefficient is zero.
TruncatedSeries a_series(int precision);
TruncatedSeries b_series(int precision);
TruncatedSeries c_series(int precision);

/// Statistic tables repackaged as series (constant coefficient zero).
TruncatedSeries spt_series(int precision);
TruncatedSeries sptbar_series(int precision);
/// Coefficient n carries the sign (-1)^n.
TruncatedSeries m2spt_alternating_series(int precision);

/// Convolution route: sptbar(N) = sum_{n+m=N} pbar(n) b(m).
Int sptbar_convolution(int N);
/// Convolution route: m2spt(N) = (-1)^N sum_{n+m=N} (-1)^n m2(n) c(m).
Int m2spt_convolution(int N);
/// The same convolutions for all 1 <= n <= max_n via one series product.
StatTable sptbar_convolution_table(int max_n);
StatTable m2spt_convolution_table(int max_n);

enum class Identity { euler, thm1, thm2, thm3, cor1, cor2 };

/// The CLI token for the identity ("euler", "thm1", ...).
std::string identity_name(Identity id);

struct VerificationReport {
    Identity identity;
    int precision;
    TruncatedSeries lhs;
    TruncatedSeries rhs;
    /// Smallest n with lhs.coeff(n) != rhs.coeff(n), if any.
    std::optional<int> first_failure;

    bool pass() const { return !first_failure.has_value(); }
};

/// Builds both sides of the identity by independent routes and compares all
/// coefficients 0..precision:
///   euler  product * inverse == 1
///   thm1   euler product * spt series == a series
///   thm2   theta * sptbar series == b series
///   thm3   triangular * alternating m2spt series == c series
///   cor1   convolution sptbar table == recurrence sptbar table
///   cor2   convolution m2spt table == recurrence m2spt table
VerificationReport verify_series_identity(Identity id, int precision);

} // namespace sptrec
