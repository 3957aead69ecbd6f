#include "sptrec/recurrences.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "sptrec/arith.hpp"

namespace sptrec {

StatTable::StatTable(std::string name, int first_index, std::vector<Int> values)
    : name_(std::move(name)), first_index_(first_index), values_(std::move(values)) {}

const Int& StatTable::at(int n) const {
    if (n < first_index_ || n > last_index())
        throw std::out_of_range(name_ + " table covers [" + std::to_string(first_index_) + ", " +
                                std::to_string(last_index()) + "], got " + std::to_string(n));
    return values_[static_cast<std::size_t>(n - first_index_)];
}

namespace {

void require_max(int max_n) {
    if (max_n < 0) throw std::domain_error("table bound must be non-negative");
}

// Adds sign * sum_{k>=1} (-1)^(k+1) (v[n - k(3k-1)/2] + v[n - k(3k+1)/2])
// into acc, skipping out-of-range offsets.
void add_pentagonal_terms(Int& acc, const std::vector<Int>& v, int n) {
    for (int k = 1;; ++k) {
        const long long down = static_cast<long long>(k) * (3LL * k - 1) / 2;
        if (down > n) break;
        const long long up = down + k;
        if (k % 2 == 1) {
            acc += v[static_cast<std::size_t>(n - down)];
            if (up <= n) acc += v[static_cast<std::size_t>(n - up)];
        } else {
            acc -= v[static_cast<std::size_t>(n - down)];
            if (up <= n) acc -= v[static_cast<std::size_t>(n - up)];
        }
    }
}

// Drops the scratch value at index 0 so the table starts at n = 1.
StatTable from_index_one(std::string name, std::vector<Int> v) {
    v.erase(v.begin());
    return StatTable(std::move(name), 1, std::move(v));
}

TruncatedSeries seed_series(int precision, std::int64_t (*coeff)(std::int64_t)) {
    require_max(precision);
    std::vector<Int> c(static_cast<std::size_t>(precision) + 1);
    for (int n = 1; n <= precision; ++n) c[static_cast<std::size_t>(n)] = coeff(n);
    return TruncatedSeries(std::move(c), precision);
}

TruncatedSeries table_series(const StatTable& table, int precision, bool alternate = false) {
    std::vector<Int> c(static_cast<std::size_t>(precision) + 1);
    for (int n = table.first_index(); n <= precision; ++n) {
        c[static_cast<std::size_t>(n)] = table.at(n);
        if (alternate && n % 2 == 1) c[static_cast<std::size_t>(n)] = -c[static_cast<std::size_t>(n)];
    }
    return TruncatedSeries(std::move(c), precision);
}

} // namespace

StatTable p_table(int max_n) {
    require_max(max_n);
    std::vector<Int> v(static_cast<std::size_t>(max_n) + 1);
    v[0] = 1;
    for (int n = 1; n <= max_n; ++n) add_pentagonal_terms(v[static_cast<std::size_t>(n)], v, n);
    return StatTable("p", 0, std::move(v));
}

StatTable pbar_table(int max_n) {
    require_max(max_n);
    return StatTable("pbar", 0, invert(theta_series(max_n)).coeffs());
}

StatTable m2_table(int max_n) {
    require_max(max_n);
    std::vector<Int> v = invert(triangular_series(max_n)).coeffs();
    for (int n = 1; n <= max_n; n += 2) v[static_cast<std::size_t>(n)] = -v[static_cast<std::size_t>(n)];
    return StatTable("m2", 0, std::move(v));
}

StatTable spt_table(int max_n) {
    require_max(max_n);
    std::vector<Int> v(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
        Int& acc = v[static_cast<std::size_t>(n)];
        acc = a_coeff(n);
        add_pentagonal_terms(acc, v, n);
    }
    return from_index_one("spt", std::move(v));
}

StatTable sptbar_table(int max_n) {
    require_max(max_n);
    std::vector<Int> v(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
        Int& acc = v[static_cast<std::size_t>(n)];
        acc = b_coeff(n);
        for (int k = 1; static_cast<long long>(k) * k <= n; ++k) {
            const Int& prev = v[static_cast<std::size_t>(n - k * k)];
            if (k % 2 == 1)
                mpz_addmul_ui(acc.get_mpz_t(), prev.get_mpz_t(), 2);
            else
                mpz_submul_ui(acc.get_mpz_t(), prev.get_mpz_t(), 2);
        }
    }
    return from_index_one("sptbar", std::move(v));
}

StatTable m2spt_table(int max_n) {
    require_max(max_n);
    std::vector<Int> v(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
        Int& acc = v[static_cast<std::size_t>(n)];
        const std::int64_t cn = c_coeff(n);
        acc = (n % 2 == 0) ? cn : -cn;
        for (int k = 1;; ++k) {
            const long long t = static_cast<long long>(k) * (k + 1) / 2;
            if (t > n) break;
            // subtract (-1)^t times the earlier value
            if (t % 2 == 0)
                acc -= v[static_cast<std::size_t>(n - t)];
            else
                acc += v[static_cast<std::size_t>(n - t)];
        }
    }
    return from_index_one("m2spt", std::move(v));
}

TruncatedSeries a_series(int precision) { return seed_series(precision, a_coeff); }
TruncatedSeries b_series(int precision) { return seed_series(precision, b_coeff); }
TruncatedSeries c_series(int precision) { return seed_series(precision, c_coeff); }

TruncatedSeries spt_series(int precision) {
    require_max(precision);
    return table_series(spt_table(precision), precision);
}

TruncatedSeries sptbar_series(int precision) {
    require_max(precision);
    return table_series(sptbar_table(precision), precision);
}

TruncatedSeries m2spt_alternating_series(int precision) {
    require_max(precision);
    return table_series(m2spt_table(precision), precision, /*alternate=*/true);
}

Int sptbar_convolution(int N) {
    if (N < 1) throw std::domain_error("convolution needs N >= 1");
    const TruncatedSeries pbar = invert(theta_series(N));
    Int total = 0;
    for (int m = 1; m <= N; ++m) {
        const std::int64_t bm = b_coeff(m);
        if (bm != 0) total += pbar.coeff(N - m) * bm;
    }
    return total;
}

Int m2spt_convolution(int N) {
    if (N < 1) throw std::domain_error("convolution needs N >= 1");
    const TruncatedSeries inv = invert(triangular_series(N));
    Int total = 0;
    for (int m = 1; m <= N; ++m) {
        const std::int64_t cm = c_coeff(m);
        if (cm != 0) total += inv.coeff(N - m) * cm;
    }
    if (N % 2 == 1) total = -total;
    return total;
}

StatTable sptbar_convolution_table(int max_n) {
    require_max(max_n);
    const TruncatedSeries prod = mul(invert(theta_series(max_n)), b_series(max_n));
    return from_index_one("sptbar", prod.coeffs());
}

StatTable m2spt_convolution_table(int max_n) {
    require_max(max_n);
    const TruncatedSeries prod = mul(invert(triangular_series(max_n)), c_series(max_n));
    std::vector<Int> v = prod.coeffs();
    for (int n = 1; n <= max_n; n += 2) v[static_cast<std::size_t>(n)] = -v[static_cast<std::size_t>(n)];
    return from_index_one("m2spt", std::move(v));
}

std::string identity_name(Identity id) {
    switch (id) {
    case Identity::euler: return "euler";
    case Identity::thm1: return "thm1";
    case Identity::thm2: return "thm2";
    case Identity::thm3: return "thm3";
    case Identity::cor1: return "cor1";
    case Identity::cor2: return "cor2";
    }
    throw std::logic_error("unknown identity");
}

VerificationReport verify_series_identity(Identity id, int precision) {
    require_max(precision);
    auto sides = [&]() -> std::pair<TruncatedSeries, TruncatedSeries> {
        switch (id) {
        case Identity::euler: {
            const TruncatedSeries e = euler_product_series(precision);
            return {mul(e, invert(e)), TruncatedSeries::one(precision)};
        }
        case Identity::thm1:
            return {mul(euler_product_series(precision), spt_series(precision)),
                    a_series(precision)};
        case Identity::thm2:
            return {mul(theta_series(precision), sptbar_series(precision)), b_series(precision)};
        case Identity::thm3:
            return {mul(triangular_series(precision), m2spt_alternating_series(precision)),
                    c_series(precision)};
        case Identity::cor1:
            return {table_series(sptbar_convolution_table(precision), precision),
                    sptbar_series(precision)};
        case Identity::cor2:
            return {table_series(m2spt_convolution_table(precision), precision),
                    table_series(m2spt_table(precision), precision)};
        }
        throw std::logic_error("unknown identity");
    }();

    std::optional<int> first_failure;
    for (int n = 0; n <= precision; ++n) {
        if (sides.first.coeff(n) != sides.second.coeff(n)) {
            first_failure = n;
            break;
        }
    }
    return {id, precision, std::move(sides.first), std::move(sides.second), first_failure};
}

} // namespace sptrec
