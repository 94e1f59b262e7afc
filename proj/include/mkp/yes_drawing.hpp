#pragma once

#include "mkp/drawing.hpp"
#include "mkp/reduction.hpp"
#include "mkp/three_partition.hpp"

namespace mkp {

/// Full drawing of a reduction graph for a yes-instance: the skeleton
/// corridors drawn as n parallel s-t paths, each triplet's content placed in
/// its face with the prescribed crossing pattern (first edges over the a
/// row, second edges over the b row, third edges bijectively over the chain
/// edges), gadgets drawn from validated templates. Supported for n <= 2;
/// for n >= 3 the three row edges per face cannot all be drawn in a min-1-
/// planar way and the builder refuses.
Drawing build_yes_drawing(const ReductionArtifact& art, const Partition& p);

}  // namespace mkp
