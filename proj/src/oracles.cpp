#include "sptrec/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sptrec {

namespace {

void check_range(int n, PartitionClass cls, int lowest) {
    if (n < lowest)
        throw std::out_of_range("partition oracle needs n >= " + std::to_string(lowest) +
                                ", got " + std::to_string(n));
    const int limit = oracle_limit(cls);
    if (n > limit)
        throw std::out_of_range("enumeration oracle capped at n <= " + std::to_string(limit) +
                                ", got " + std::to_string(n));
}

// Visits every non-increasing partition shape of `remaining` with parts at
// most max_part. With odd_distinct set, odd values appear at most once.
template <class F>
void walk_shapes(int remaining, int max_part, bool odd_distinct, std::vector<int>& parts, F&& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    int top = std::min(remaining, max_part);
    for (int part = top; part >= 1; --part) {
        if (odd_distinct && part % 2 == 1 && !parts.empty() && parts.back() == part) continue;
        parts.push_back(part);
        walk_shapes(remaining - part, part, odd_distinct, parts, visit);
        parts.pop_back();
    }
}

int smallest_multiplicity(const std::vector<int>& parts) {
    const int v = parts.back();
    int m = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == v; ++it) ++m;
    return m;
}

int distinct_values(const std::vector<int>& parts) {
    int k = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] != parts[i - 1]) ++k;
    return k;
}

} // namespace

int oracle_limit(PartitionClass cls) {
    return cls == PartitionClass::overpartition ? overpartition_oracle_limit
                                                : ordinary_oracle_limit;
}

void for_each_partition(int n, PartitionClass cls,
                        const std::function<void(const Partition&)>& visit) {
    check_range(n, cls, 0);
    Partition p;
    if (cls != PartitionClass::overpartition) {
        walk_shapes(n, n == 0 ? 1 : n, cls == PartitionClass::distinct_odd_parts, p.parts,
                    [&](const std::vector<int>&) { visit(p); });
        return;
    }
    // Overpartitions: every overline subset of the distinct values, counted
    // through a binary mask so the order is reproducible.
    walk_shapes(n, n == 0 ? 1 : n, false, p.parts, [&](const std::vector<int>& parts) {
        std::vector<int> values;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (i == 0 || parts[i] != parts[i - 1]) values.push_back(parts[i]);
        const unsigned subsets = 1u << values.size();
        for (unsigned mask = 0; mask < subsets; ++mask) {
            p.overlined.clear();
            for (std::size_t i = 0; i < values.size(); ++i)
                if (mask & (1u << i)) p.overlined.push_back(values[i]);
            visit(p);
        }
    });
}

std::int64_t p_oracle(int n) {
    check_range(n, PartitionClass::ordinary, 0);
    std::int64_t count = 0;
    std::vector<int> parts;
    walk_shapes(n, n == 0 ? 1 : n, false, parts, [&](const std::vector<int>&) { ++count; });
    return count;
}

std::int64_t spt_oracle(int n) {
    check_range(n, PartitionClass::ordinary, 1);
    std::int64_t total = 0;
    std::vector<int> parts;
    walk_shapes(n, n, false, parts,
                [&](const std::vector<int>& p) { total += smallest_multiplicity(p); });
    return total;
}

std::int64_t overpartition_count(int n) {
    check_range(n, PartitionClass::overpartition, 0);
    std::int64_t count = 0;
    std::vector<int> parts;
    // 2^k overline choices for a shape with k distinct values
    walk_shapes(n, n == 0 ? 1 : n, false, parts,
                [&](const std::vector<int>& p) { count += std::int64_t(1) << distinct_values(p); });
    return count;
}

std::int64_t sptbar_oracle(int n) {
    check_range(n, PartitionClass::overpartition, 1);
    std::int64_t total = 0;
    std::vector<int> parts;
    walk_shapes(n, n, false, parts, [&](const std::vector<int>& p) {
        if (p.back() % 2 == 0) return;
        // every overline variant of this shape contributes the multiplicity
        total += std::int64_t(smallest_multiplicity(p)) << distinct_values(p);
    });
    return total;
}

std::int64_t m2_oracle(int n) {
    check_range(n, PartitionClass::distinct_odd_parts, 0);
    std::int64_t count = 0;
    std::vector<int> parts;
    walk_shapes(n, n == 0 ? 1 : n, true, parts, [&](const std::vector<int>&) { ++count; });
    return count;
}

std::int64_t m2spt_oracle(int n) {
    check_range(n, PartitionClass::distinct_odd_parts, 1);
    std::int64_t total = 0;
    std::vector<int> parts;
    walk_shapes(n, n, true, parts, [&](const std::vector<int>& p) {
        if (p.back() % 2 == 0) total += smallest_multiplicity(p);
    });
    return total;
}

} // namespace sptrec
