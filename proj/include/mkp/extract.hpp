#pragma once

#include "mkp/drawing.hpp"
#include "mkp/reduction.hpp"
#include "mkp/three_partition.hpp"

namespace mkp {

struct ExtractError : std::runtime_error {
    explicit ExtractError(const std::string& what) : std::runtime_error(what) {}
};

/// Reads the partition off a drawing of the reduction graph in which every
/// gadget edge crosses only edges of its own gadget: contracts the skeleton
/// corridors, checks the cycle-of-paths shape, and assigns each u_j to the
/// skeleton face containing it. Throws ExtractError when the preconditions
/// fail (externally crossed gadget, wrong skeleton shape, ambiguous u_j).
Partition extract_partition(const ReductionArtifact& art, const Drawing& d);

}  // namespace mkp
