#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mkp {

struct ThreePartitionInstance {
    int n = 0;
    std::vector<long long> X;  // 3n positive integers

    /// Sum of X divided by n, if that is an integer.
    std::optional<long long> target() const;
};

struct Partition {
    // n triplets of 1-based indices into X.
    std::vector<std::array<int, 3>> triplets;
};

struct InstanceReport {
    bool shape_ok = false;       // |X| == 3n, n >= 1, all x_i >= 1
    bool target_integer = false;
    long long target = 0;
    bool range_ok = false;       // T/4 < x_i < T/2 for all i
    bool distinct_ok = false;
    std::vector<std::string> notes;

    bool valid(bool strict) const {
        if (!shape_ok || !target_integer) return false;
        return !strict || (range_ok && distinct_ok);
    }
};

InstanceReport validate_three_partition(const ThreePartitionInstance& inst);

/// Exhaustive solver; triplets are enumerated lexicographically, so the
/// returned partition is deterministic. Intended for n <= 3 test instances.
std::optional<Partition> solve_three_partition(const ThreePartitionInstance& inst);

/// True iff p is a valid solution of inst.
bool check_partition(const ThreePartitionInstance& inst, const Partition& p);

std::string instance_to_json(const ThreePartitionInstance& inst);
ThreePartitionInstance instance_from_json(const std::string& text);
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

}  // namespace mkp
