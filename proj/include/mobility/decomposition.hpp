#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mobility {

/// One additive piece of a decomposition; `total ~= sum(weight*value) + between + residual`.
struct DecompositionComponent {
    std::string label;
    double weight = 1.0;
    double value = 0.0;
};

struct DecompositionResult {
    std::vector<DecompositionComponent> components;
    double between = 0.0;
    double total = 0.0;
    double residual = 0.0;  ///< total minus the reassembled sum; identity check
};

/// Group label per person, labels in {0 .. group_count-1}; every group nonempty.
struct SubgroupPartition {
    std::vector<std::size_t> group_of;
    std::size_t group_count = 0;
};

SubgroupPartition make_partition(std::vector<std::size_t> group_of);

}  // namespace mobility
