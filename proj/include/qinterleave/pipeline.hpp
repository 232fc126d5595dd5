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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qinterleave/channel.hpp"
#include "qinterleave/codes.hpp"
#include "qinterleave/interleaver.hpp"
#include "qinterleave/statevector.hpp"

namespace qinterleave {

/// Fidelity a corrected state must reach to count as recovered.
inline constexpr double kRecoveryTolerance = 1e-10;

/// Outcome of sending one Pauli error through the interleaved channel.
struct BurstOutcome {
  PauliString error;
  /// The error as seen by the blocks after deinterleaving.
  PauliString residual;
  std::vector<BinaryVector> block_syndromes;
  /// Fidelity of the block-wise corrected state with the original input.
  double fidelity = 0;
  /// False if some block syndrome had no table entry.
  bool decoded = false;

  bool recovered() const { return decoded && fidelity >= 1.0 - kRecoveryTolerance; }
};

/// m blocks of a base code are encoded, interleaved, hit by a Pauli error,
/// deinterleaved, and syndrome-decoded block by block.
class InterleavedPipeline {
 public:
  InterleavedPipeline(StabilizerCode base, std::vector<LogicalAmplitudes> coeffs)
      : base_(std::move(base)),
        degree_(coeffs.size()),
        table_(build_syndrome_table(base_, enumerate_bursts(base_.n, base_.burst_ability, base_.burst_kind))),
        interleaver_(interleave_permutation(base_.n, coeffs.empty() ? 1 : coeffs.size())),
        deinterleaver_(invert(interleaver_)),
        input_(encode_blocks(coeffs, [this](Amplitude c0, Amplitude c1) { return encode_block(c0, c1); })),
        interleaved_(apply_qubit_permutation(input_, interleaver_)) {}

  const StabilizerCode& base() const { return base_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_qubits() const { return base_.n * degree_; }
  const SyndromeTable& table() const { return table_; }
  const Permutation& interleaver() const { return interleaver_; }
  const Permutation& deinterleaver() const { return deinterleaver_; }
  const StateVector& input() const { return input_; }
  const StateVector& interleaved() const { return interleaved_; }

  /// Applies `error` to the interleaved state, then deinterleaves.
  StateVector corrupt_and_deinterleave(const PauliString& error) const {
    return apply_qubit_permutation(apply_pauli(interleaved_, error), deinterleaver_);
  }

  BurstOutcome run(const PauliString& error) const {
    return decode(error, corrupt_and_deinterleave(error));
  }

  /// Decodes an already deinterleaved state that was corrupted by `error`.
  BurstOutcome decode(const PauliString& error, const StateVector& received) const {
    BurstOutcome out{error, permute_pauli(error, deinterleaver_), {}, 0.0, false};
    try {
      auto [corrected, syndromes] = correct_blockwise(base_, table_, degree_, received);
      out.block_syndromes = std::move(syndromes);
      out.fidelity = fidelity(corrected, input_);
      out.decoded = true;
    } catch (const UnknownSyndrome&) {
      out.decoded = false;
    }
    return out;
  }

 private:
  StateVector encode_block(Amplitude c0, Amplitude c1) const {
    if (base_.name == "phase3") return encode_phase3(c0, c1);
    return encode_logical(base_, c0, c1);
  }

  StabilizerCode base_;
  std::size_t degree_;
  SyndromeTable table_;
  Permutation interleaver_;
  Permutation deinterleaver_;
  StateVector input_;
  StateVector interleaved_;
};

/// Random normalized logical amplitudes, reproducible per seed.
inline std::vector<LogicalAmplitudes> random_logical_amplitudes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<LogicalAmplitudes> out(count);
  for (LogicalAmplitudes& c : out) {
    Amplitude a{gauss(rng), gauss(rng)};
    Amplitude b{gauss(rng), gauss(rng)};
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    c = {a / norm, b / norm};
  }
  return out;
}

/// Fixed generic logical amplitudes: cos(t)|0> + e^{ip} sin(t)|1> with a
/// different (t, p) per block, none of which is invariant under a logical
/// X, Y or Z.
inline std::vector<LogicalAmplitudes> default_logical_amplitudes(std::size_t count) {
  std::vector<LogicalAmplitudes> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = 0.3 + 0.17 * static_cast<double>(i);
    const double p = 0.7 + 0.41 * static_cast<double>(i);
    out[i] = {Amplitude(std::cos(t), 0.0), std::polar(std::sin(t), p)};
  }
  return out;
}

}  // namespace qinterleave
