#pragma once

#include "mkp/graph.hpp"

namespace mkp {

/// Second, independently coded decision route: enumerates pair subsets by
/// bitmask over the candidate list (rather than depth-first selection),
/// filters by the min-k condition, enumerates crossing orders and tests
/// planarity of the planarization. Agrees with exact_min_k_decide.
bool config_search_min_k(const Graph& g, int k, int max_crossings);

/// Number of weak-isomorphism classes of simple drawings of K_n, computed
/// without any drawing enumeration: a crossing pair set is realizable with
/// exactly those transversal crossings iff some ordered planarization with a
/// rigidity wheel around every dummy vertex is planar; realizable sets are
/// then counted up to vertex relabeling. Practical for n <= 5.
int count_weak_classes_by_configs(int n);

}  // namespace mkp
