// Copyright 2026 The qinterleave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qinterleave/circuit.hpp"
#include "qinterleave/permutation.hpp"

namespace qinterleave {

/// Block interleaver for m code words of length n. The input is laid out
/// block by block (symbol j of block i at slot i*n + j); the output is laid
/// out symbol by symbol, so that slot holds position j*m + i.
inline Permutation interleave_permutation(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("interleave_permutation: zero size");
  std::vector<std::size_t> images(n * m);
  for (std::size_t block = 0; block < m; ++block) {
    for (std::size_t symbol = 0; symbol < n; ++symbol) {
      images[block * n + symbol] = symbol * m + block;
    }
  }
  return Permutation(std::move(images));
}

inline Permutation invert(const Permutation& perm) {
  std::vector<std::size_t> images(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) images[perm(i)] = i;
  return Permutation(std::move(images));
}

/// SWAP network realizing `perm` by cycle decomposition. Cycles are visited
/// from their smallest element c0 -> c1 -> ... -> c(k-1); each emits
/// SWAP(c(j), c(j+1)) for j = k-2 down to 0. Fixed points emit nothing.
inline Circuit synthesize_swap_network(const Permutation& perm) {
  Circuit circuit(perm.size());
  std::vector<bool> visited(perm.size(), false);
  std::vector<std::size_t> cycle;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (visited[start]) continue;
    cycle.clear();
    for (std::size_t i = start; !visited[i]; i = perm(i)) {
      visited[i] = true;
      cycle.push_back(i);
    }
    for (std::size_t j = cycle.size(); j-- > 1;) {
      circuit.append(Gate::swap(cycle[j - 1], cycle[j]));
    }
  }
  return circuit;
}

/// 3n(n-1)/2, the CNOT count of the square interleaver.
inline std::size_t square_interleaver_cnots(std::size_t n) { return 3 * n * (n - 1) / 2; }

}  // namespace qinterleave
