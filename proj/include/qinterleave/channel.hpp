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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qinterleave/pauli.hpp"
#include "qinterleave/statevector.hpp"

namespace qinterleave {

/// One term X_α Z_β |φ> ⊗ |e_label> of a system-environment superposition.
/// Environment states are opaque; distinct labels stand for orthogonal states.
struct ErrorBranch {
  PauliString pauli;
  std::string label;
  Amplitude amplitude{1.0, 0.0};
};

class BranchSet {
 public:
  /// Throws std::invalid_argument on an empty set, an empty label, or a
  /// repeated label.
  explicit BranchSet(std::vector<ErrorBranch> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) throw std::invalid_argument("BranchSet: needs at least one branch");
    std::set<std::string> labels;
    for (const ErrorBranch& b : branches_) {
      if (b.label.empty()) throw std::invalid_argument("BranchSet: empty environment label");
      if (!labels.insert(b.label).second) {
        throw std::invalid_argument("BranchSet: duplicate environment label '" + b.label + "'");
      }
    }
  }

  const std::vector<ErrorBranch>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }

 private:
  std::vector<ErrorBranch> branches_;
};

/// Environment label for an error: "e_<α>" for X-only, "e_<β>" for Z-only
/// (binary masks), otherwise "e_<pauli text>".
inline std::string environment_label(const PauliString& p) {
  if (p.z_bits() == 0 && p.x_bits() != 0) return "e_" + p.x_mask().str();
  if (p.x_bits() == 0) return "e_" + p.z_mask().str();
  return "e_" + p.str();
}

/// Parses comma-separated Pauli strings ("ZZZIIIIII,IIIIIZZZI") into an
/// equal-amplitude branch set.
inline BranchSet parse_branch_set(std::string_view text) {
  std::vector<ErrorBranch> branches;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const PauliString p = PauliString::from_string(text.substr(start, comma - start));
    branches.push_back({p, environment_label(p), {}});
    start = comma + 1;
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(branches.size()));
  for (ErrorBranch& b : branches) b.amplitude = amp;
  return BranchSet(std::move(branches));
}

/// One corrupted copy of `s` per branch, in branch order.
inline std::vector<std::pair<ErrorBranch, StateVector>> apply_branches(const BranchSet& bs, const StateVector& s) {
  for (const ErrorBranch& b : bs.branches()) {
    if (b.pauli.size() != s.num_qubits()) throw std::invalid_argument("apply_branches: size mismatch");
  }
  std::vector<std::pair<ErrorBranch, StateVector>> out;
  out.reserve(bs.size());
  for (const ErrorBranch& b : bs.branches()) out.emplace_back(b, apply_pauli(s, b.pauli));
  return out;
}

namespace detail {

// A burst of exact length `len` at `start`: nonzero endpoints, uniform interior.
inline std::uint64_t sample_mask(std::mt19937_64& rng, std::size_t n, std::size_t l) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, l)(rng);
  const std::size_t start = std::uniform_int_distribution<std::size_t>(0, n - len)(rng);
  std::uint64_t mask = (std::uint64_t{1} << start) | (std::uint64_t{1} << (start + len - 1));
  for (std::size_t j = 1; j + 1 < len; ++j) {
    if (rng() & 1) mask |= std::uint64_t{1} << (start + j);
  }
  return mask;
}

}  // namespace detail

/// Deterministic random burst of length ≤ l on n qubits for `kind`. The exact
/// length is uniform in [1, l], the window start uniform over the positions
/// where it fits, and the interior uniform with non-identity endpoints. For
/// `independent`, one of {X only, Z only, both} is chosen uniformly first.
inline PauliString sample_burst(std::uint64_t seed, std::size_t n, std::size_t l, BurstKind kind) {
  detail::check_burst_range(n, l);
  std::mt19937_64 rng(seed);
  switch (kind) {
    case BurstKind::bit:
      return PauliString(n, detail::sample_mask(rng, n, l), 0);
    case BurstKind::phase:
      return PauliString(n, 0, detail::sample_mask(rng, n, l));
    case BurstKind::colocated: {
      const std::size_t len = std::uniform_int_distribution<std::size_t>(1, l)(rng);
      const std::size_t start = std::uniform_int_distribution<std::size_t>(0, n - len)(rng);
      std::uniform_int_distribution<int> any_op(0, 3);
      std::uniform_int_distribution<int> nontrivial_op(1, 3);
      std::uint64_t x = 0;
      std::uint64_t z = 0;
      for (std::size_t j = 0; j < len; ++j) {
        const int op = (j == 0 || j + 1 == len) ? nontrivial_op(rng) : any_op(rng);
        if (op & 1) x |= std::uint64_t{1} << (start + j);
        if (op & 2) z |= std::uint64_t{1} << (start + j);
      }
      return PauliString(n, x, z);
    }
    case BurstKind::independent: {
      const int parts = std::uniform_int_distribution<int>(1, 3)(rng);
      const std::uint64_t x = (parts & 1) ? detail::sample_mask(rng, n, l) : 0;
      const std::uint64_t z = (parts & 2) ? detail::sample_mask(rng, n, l) : 0;
      return PauliString(n, x, z);
    }
  }
  throw std::invalid_argument("sample_burst: unknown kind");
}

}  // namespace qinterleave
