#pragma once

#include <vector>

#include "ksp/rational.hpp"

namespace ksp {

// Integer partition as a weakly decreasing list of positive parts.
using IntPartition = std::vector<int>;

// All partitions of n, in a deterministic order.
std::vector<IntPartition> partitions_of(int n);

int partition_size(const IntPartition& p);
inline int partition_length(const IntPartition& p) {
    return static_cast<int>(p.size());
}

// z_lambda = prod i^{m_i} m_i!
Integer z_of(const IntPartition& p);

bool is_partition(const IntPartition& p);

// Multiset union of parts (product rule for power sums).
IntPartition partition_union(const IntPartition& a, const IntPartition& b);

// Graded-then-lexicographic order used as the canonical key order.
struct PartitionCmp {
    bool operator()(const IntPartition& a, const IntPartition& b) const;
};

std::string partition_str(const IntPartition& p);

}  // namespace ksp
