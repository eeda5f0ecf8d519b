#pragma once

#include <cstddef>
#include <vector>

#include "kwsmote/matrix.hpp"

namespace kwsmote {

/// Per-sample generation record. Together with the minority matrix it allows
/// every generated point to be rebuilt and audited.
///
/// raw_weights holds one weight per cited point, seed row first. For the
/// neighbor-based generators the remaining weights line up with
/// neighbor_indices. The center-pull generator cites no neighbors; its second
/// weight applies to the batch-level center vector.
struct SampleProvenance {
    std::size_t seed_index = 0;
    std::vector<std::size_t> neighbor_indices;
    std::vector<double> raw_weights;
    double normalizer = 1.0;
};

/// A batch of generated samples plus provenance.
struct SyntheticBatch {
    Matrix samples;
    std::vector<SampleProvenance> provenance;
    std::size_t skipped_count = 0;
    /// Minority column means; populated only by the center-pull generator.
    std::vector<double> center;

    std::size_t size() const noexcept { return samples.rows(); }
};

} // namespace kwsmote
