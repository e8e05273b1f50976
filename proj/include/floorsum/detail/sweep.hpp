#pragma once

// Incremental floor-sqrt sweeps shared by the exact kernel. Exposed so tests
// can run the 128-bit instantiations on small inputs.

#include "floorsum/natural.hpp"

namespace floorsum::detail {

// Walks j = 1..count, maintaining root = floor(sqrt(j * step)) incrementally.
// root only grows, by floor(sqrt(count * step)) in total, so the sweep is
// linear in count + sqrt(count * step). U must hold (root + 1)^2.
template <typename U, typename Visit>
void sqrt_sweep(U count, U step, Visit&& visit) {
  U root = 0;
  U next_square = 1;  // (root + 1)^2
  U x = 0;
  for (U j = 1; j <= count; ++j) {
    x += step;
    while (next_square <= x) {
      ++root;
      next_square += 2 * root + 1;
    }
    visit(j, root);
  }
}

template <typename U>
Wide alternating_sweep(U n) {
  // Odd and even j are accumulated separately to keep the inner loop unsigned.
  U odd_part = 0;
  U even_part = 0;
  sqrt_sweep<U>(n, n, [&](U j, U root) {
    if (j & 1u) {
      odd_part += root;
    } else {
      even_part += root;
    }
  });
  return static_cast<Wide>(odd_part) - static_cast<Wide>(even_part);
}

template <typename U>
Natural odd_ceil_sweep(U n) {
  U count = 0;
  for (U k = 1; k <= n; ++k) {
    const U q = (k * k - 1) / n + 1;
    count += q & 1u;
  }
  return count;
}

}  // namespace floorsum::detail
