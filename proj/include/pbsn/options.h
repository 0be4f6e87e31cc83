#pragma once

namespace pbsn {

struct EncodeOptions {
  bool reuse = true;       // cover-based rewiring of registered sorters
  bool skip = true;        // skip rule of the multi-way merge
  int block_size = 5;      // direct-selector block width of select_k
  int max_base_prime = 17; // largest radix considered by the base search
};

}  // namespace pbsn
