#include "mkp/three_partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

namespace mkp {

std::optional<long long> ThreePartitionInstance::target() const {
    if (n < 1) return std::nullopt;
    long long sum = std::accumulate(X.begin(), X.end(), 0LL);
    if (sum % n != 0) return std::nullopt;
    return sum / n;
}

InstanceReport validate_three_partition(const ThreePartitionInstance& inst) {
    InstanceReport r;
    r.shape_ok = inst.n >= 1 && static_cast<int>(inst.X.size()) == 3 * inst.n &&
                 std::all_of(inst.X.begin(), inst.X.end(), [](long long x) { return x >= 1; });
    if (!r.shape_ok) {
        r.notes.push_back("expected 3n positive integers");
        return r;
    }
    auto t = inst.target();
    r.target_integer = t.has_value();
    if (!t) {
        r.notes.push_back("sum is not divisible by n");
        return r;
    }
    r.target = *t;
    // strict hypothesis: T/4 < x_i < T/2, pairwise distinct
    r.range_ok = std::all_of(inst.X.begin(), inst.X.end(), [&](long long x) {
        return 4 * x > r.target && 2 * x < r.target;
    });
    std::set<long long> uniq(inst.X.begin(), inst.X.end());
    r.distinct_ok = uniq.size() == inst.X.size();
    if (!r.range_ok) r.notes.push_back("some x_i outside (T/4, T/2)");
    if (!r.distinct_ok) r.notes.push_back("values are not pairwise distinct");
    return r;
}

namespace {

bool solve_rec(const std::vector<long long>& X, long long target, std::vector<char>& used,
               std::vector<std::array<int, 3>>& out) {
    int m = static_cast<int>(X.size());
    int first = -1;
    for (int i = 0; i < m; ++i)
        if (!used[i]) {
            first = i;
            break;
        }
    if (first < 0) return true;
    used[first] = 1;
    for (int j = first + 1; j < m; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        for (int k = j + 1; k < m; ++k) {
            if (used[k] || X[first] + X[j] + X[k] != target) continue;
            used[k] = 1;
            out.push_back({first + 1, j + 1, k + 1});
            if (solve_rec(X, target, used, out)) return true;
            out.pop_back();
            used[k] = 0;
        }
        used[j] = 0;
    }
    used[first] = 0;
    return false;
}

}  // namespace

std::optional<Partition> solve_three_partition(const ThreePartitionInstance& inst) {
    auto r = validate_three_partition(inst);
    if (!r.shape_ok || !r.target_integer) return std::nullopt;
    std::vector<char> used(inst.X.size(), 0);
    Partition p;
    if (!solve_rec(inst.X, r.target, used, p.triplets)) return std::nullopt;
    return p;
}

bool check_partition(const ThreePartitionInstance& inst, const Partition& p) {
    auto t = inst.target();
    if (!t) return false;
    if (static_cast<int>(p.triplets.size()) != inst.n) return false;
    std::set<int> seen;
    for (const auto& tr : p.triplets) {
        long long sum = 0;
        for (int idx : tr) {
            if (idx < 1 || idx > static_cast<int>(inst.X.size())) return false;
            if (!seen.insert(idx).second) return false;
            sum += inst.X[idx - 1];
        }
        if (sum != *t) return false;
    }
    return seen.size() == inst.X.size();
}

std::string instance_to_json(const ThreePartitionInstance& inst) {
    nlohmann::ordered_json j;
    j["n"] = inst.n;
    j["X"] = inst.X;
    return j.dump(2);
}

ThreePartitionInstance instance_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ThreePartitionInstance inst;
    inst.n = j.at("n").get<int>();
    inst.X = j.at("X").get<std::vector<long long>>();
    return inst;
}

std::string partition_to_json(const Partition& p) {
    nlohmann::ordered_json j;
    j["triplets"] = nlohmann::ordered_json::array();
    for (const auto& t : p.triplets) j["triplets"].push_back({t[0], t[1], t[2]});
    return j.dump(2);
}

Partition partition_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Partition p;
    for (const auto& t : j.at("triplets")) p.triplets.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    return p;
}

}  // namespace mkp
