#pragma once

#include <vector>

namespace virstag {

// Parts in descending order; {3,1} stands for L_{-3}L_{-1} (or L_1L_3 for raising words).
using Partition = std::vector<int>;

// All partitions of n, lexicographically ascending on the descending parts,
// so 1^n comes first and {n} last. Thread-safe and cached.
const std::vector<Partition>& partitions(int n);
int partition_count(int n);  // 0 for n < 0
int partition_index(const Partition& p);  // index within partitions(sum of p)
int ones_count(const Partition& p);

// Column order used for row reduction: more parts equal to 1 first, then index.
const std::vector<int>& ones_priority_order(int n);

}  // namespace virstag
