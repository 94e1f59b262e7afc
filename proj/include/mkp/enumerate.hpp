#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mkp/drawing.hpp"

namespace mkp {

struct DrawingCatalog {
    int n = 0;            // vertex count of the enumerated complete graph
    std::string mode;     // "iso" or "weak-iso"
    std::map<std::string, Drawing> entries;  // canonical key -> representative

    int count() const { return static_cast<int>(entries.size()); }
};

struct EnumLimits {
    long long max_branches = 500'000'000;
    double max_seconds = 3600.0;
};

/// Thrown when an enumeration hits its resource budget; carries the partial
/// progress so callers never mistake truncation for completion.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// All ways to extend a simple drawing of K_{n-1} by one vertex: place the
/// new vertex in a face and route the n-1 new edges one at a time through
/// the growing planarization. New edges never cross each other, never cross
/// an edge adjacent to either endpoint, and cross no edge twice, so every
/// output is again simple. Outputs are raw (not deduplicated).
std::vector<Drawing> insert_vertex_extensions(const Drawing& d, const EnumLimits& limits = {});

/// Streaming form used by the catalog builder.
void for_each_extension(const Drawing& d, const std::function<void(Drawing&&)>& visit,
                        const EnumLimits& limits);

DrawingCatalog enumerate_good_drawings(int n, const std::string& mode,
                                       const EnumLimits& limits = {}, int threads = 1);

DrawingCatalog filter_min_k(const DrawingCatalog& cat, int k);

DrawingCatalog delete_edge_classes(const Drawing& d,
                                   const std::function<bool(const Drawing&, int)>& edge_filter);

struct DecideResult {
    enum class Status { Yes, No, BudgetExceeded } status = Status::No;
    std::optional<Drawing> witness;
    long long planarity_calls = 0;
};

struct DecideLimits {
    long long max_planarity_calls = 50'000'000;
};

/// Exact decision of min-k-planarity for small graphs by exhaustive search
/// over simple crossing configurations (sets of non-adjacent edge pairs,
/// each pair at most once) and crossing orders, testing planarity of the
/// resulting planarization. Complete for k=1 once max_crossings >= |E|.
DecideResult exact_min_k_decide(const Graph& g, int k, int max_crossings,
                                const DecideLimits& limits = {});

/// Crossings whose rotation does not alternate between its two edges.
std::vector<int> non_alternating_crossings(const Drawing& d);

}  // namespace mkp
