#pragma once

#include "fibrant/fwfs.hpp"

#include <cstdint>

namespace fibrant {

struct SampleOptions {
  std::uint64_t seed = 0xC0FFEE;
  /// Direct sums of at most this many seed objects are added.
  std::size_t sum_bound = 2;
  /// Seeded random combinations of hom basis elements per ordered pair.
  std::size_t random_per_pair = 5;
  /// Cap on kernel/cokernel enrichment arrows.
  std::size_t derived_arrow_cap = 64;
};

/// Deterministically enrich a list of seed objects into a verification
/// sample: close under bounded direct sums and the zero module, then
/// collect hom bases, seeded random combinations, identities, and a
/// bounded supply of kernel and cokernel arrows.
Sample build_sample(const std::vector<Module>& seeds, const AlgebraPtr& algebra,
                    const SampleOptions& options = {});

}  // namespace fibrant
