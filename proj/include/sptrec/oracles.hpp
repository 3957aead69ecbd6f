#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sptrec {

enum class PartitionClass { ordinary, overpartition, distinct_odd_parts };

/// A partition of n. `parts` is non-increasing. For overpartitions,
/// `overlined` lists the distinct part values carrying an overline, in
/// decreasing order; each distinct value carries at most one mark.
struct Partition {
    std::vector<int> parts;
    std::vector<int> overlined;
};

/// Full enumeration stays practical only for small n; calls beyond these
/// caps are refused rather than left to run for hours.
inline constexpr int ordinary_oracle_limit = 60; // also distinct_odd_parts
inline constexpr int overpartition_oracle_limit = 40;

int oracle_limit(PartitionClass cls);

/// Streams every object of the class exactly once, in a fixed order: parts
/// are generated non-increasing, largest first, and overline marks iterate
/// per distinct value. The Partition reference is only valid during the
/// callback. Throws std::out_of_range above the class limit.
void for_each_partition(int n, PartitionClass cls,
                        const std::function<void(const Partition&)>& visit);

// Enumeration counts and smallest-part statistics. These walk the streams
// above and are the ground truth the recurrences are measured against.
//
// Smallest-part convention for overpartitions: the multiplicity of the
// smallest part value counts in full whether or not that value is overlined,
// and distinct overline configurations are distinct overpartitions. This is
// the unique reading under which sptbar(1) = 2 and sptbar(2) = 4 match the
// pbar * b convolution; see the oracle tests for the alternatives it rules
// out.

/// Number of ordinary partitions of n (n = 0 gives 1).
std::int64_t p_oracle(int n);
/// Total smallest-part multiplicity over ordinary partitions of n.
std::int64_t spt_oracle(int n);
/// Number of overpartitions of n (n = 0 gives 1).
std::int64_t overpartition_count(int n);
/// Smallest-part multiplicity over overpartitions of n with odd smallest part.
std::int64_t sptbar_oracle(int n);
/// Number of partitions of n with no repeated odd part (n = 0 gives 1).
std::int64_t m2_oracle(int n);
/// Smallest-part multiplicity over no-repeated-odd-part partitions of n with
/// even smallest part.
std::int64_t m2spt_oracle(int n);

} // namespace sptrec
