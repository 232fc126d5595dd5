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

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qinterleave/circuit.hpp"
#include "qinterleave/pauli.hpp"
#include "qinterleave/permutation.hpp"

namespace qinterleave {

using Amplitude = std::complex<double>;

/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxStateQubits = 26;

/// Tolerance on the norm of a constructed state.
inline constexpr double kNormTolerance = 1e-10;

// Endianness: qubit 0 is the leftmost symbol of a ket label and the most
// significant bit of the amplitude index, so |b0 b1 ... b(n-1)> lives at
// index sum_q b_q * 2^(n-1-q).
class StateVector {
 public:
  /// Takes ownership of 2^n amplitudes. Throws std::invalid_argument if the
  /// count is not a power of two in range or the norm is off by more than
  /// kNormTolerance.
  explicit StateVector(std::vector<Amplitude> amplitudes) : amplitudes_(std::move(amplitudes)) {
    const std::size_t count = amplitudes_.size();
    if (count < 2 || !std::has_single_bit(count)) {
      throw std::invalid_argument("StateVector: amplitude count must be 2^n with n >= 1");
    }
    n_ = static_cast<std::size_t>(std::countr_zero(count));
    check_qubits(n_);
    double norm2 = 0;
    for (const Amplitude& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance) {
      throw std::invalid_argument("StateVector: norm " + std::to_string(std::sqrt(norm2)) +
                                  " is not 1");
    }
  }

  /// Rescales `amplitudes` to unit norm first. Throws on the zero vector.
  static StateVector normalized(std::vector<Amplitude> amplitudes) {
    double norm2 = 0;
    for (const Amplitude& a : amplitudes) norm2 += std::norm(a);
    if (norm2 == 0) throw std::invalid_argument("StateVector: cannot normalize the zero vector");
    const double scale = 1.0 / std::sqrt(norm2);
    for (Amplitude& a : amplitudes) a *= scale;
    return StateVector(std::move(amplitudes));
  }

  static void check_qubits(std::size_t n) {
    if (n < 1 || n > kMaxStateQubits) {
      throw std::invalid_argument("StateVector: qubit count " + std::to_string(n) +
                                  " outside [1, 26]");
    }
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }

  /// Amplitude of the basis state written as a {0,1} label, e.g. "011".
  Amplitude amplitude(std::string_view label) const {
    if (label.size() != n_) throw std::invalid_argument("StateVector: label length mismatch");
    std::size_t index = 0;
    for (char c : label) index = (index << 1) | (c == '1' ? 1 : 0);
    return amplitudes_[index];
  }

 private:
  std::size_t n_ = 0;
  std::vector<Amplitude> amplitudes_;
};

namespace detail {

/// Maps a qubit mask (bit q = qubit q) to an amplitude-index mask.
inline std::uint64_t index_mask(std::uint64_t qubit_mask, std::size_t n) {
  std::uint64_t out = 0;
  for (; qubit_mask != 0; qubit_mask &= qubit_mask - 1) {
    out |= std::uint64_t{1} << (n - 1 - static_cast<std::size_t>(std::countr_zero(qubit_mask)));
  }
  return out;
}

inline std::uint64_t qubit_bit(std::size_t q, std::size_t n) { return std::uint64_t{1} << (n - 1 - q); }

}  // namespace detail

inline StateVector basis_state(std::size_t n, const BinaryVector& label) {
  StateVector::check_qubits(n);
  if (label.size() != n) throw std::invalid_argument("basis_state: label length mismatch");
  std::vector<Amplitude> amps(std::size_t{1} << n);
  amps[detail::index_mask(label.bits(), n)] = 1.0;
  return StateVector(std::move(amps));
}

/// a ⊗ b, with a's qubits first.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector::check_qubits(a.num_qubits() + b.num_qubits());
  std::vector<Amplitude> amps(a.dimension() * b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) amps[i * b.dimension() + j] = a[i] * b[j];
  }
  return StateVector::normalized(std::move(amps));
}

/// X_α Z_β |s>: amplitude i picks up (-1)^(i·β) and moves to i ⊕ α.
inline StateVector apply_pauli(const StateVector& s, const PauliString& p) {
  if (p.size() != s.num_qubits()) throw std::invalid_argument("apply_pauli: size mismatch");
  const std::uint64_t x = detail::index_mask(p.x_bits(), s.num_qubits());
  const std::uint64_t z = detail::index_mask(p.z_bits(), s.num_qubits());
  std::vector<Amplitude> amps(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const Amplitude a = s[i];
    amps[i ^ x] = (std::popcount(i & z) & 1) ? -a : a;
  }
  return StateVector(std::move(amps));
}

inline StateVector apply_gate(const StateVector& s, const Gate& gate) {
  const std::size_t n = s.num_qubits();
  const bool two_qubit = gate.kind != GateKind::H;
  if (gate.a >= n || (two_qubit && gate.b >= n)) {
    throw std::invalid_argument("apply_gate: qubit index out of range");
  }
  if (two_qubit && gate.a == gate.b) throw std::invalid_argument("apply_gate: identical operands");
  std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
  const std::uint64_t a = detail::qubit_bit(gate.a, n);
  switch (gate.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & a) continue;
        const Amplitude lo = s[i];
        const Amplitude hi = s[i | a];
        amps[i] = r * (lo + hi);
        amps[i | a] = r * (lo - hi);
      }
      break;
    }
    case GateKind::CNOT: {
      const std::uint64_t t = detail::qubit_bit(gate.b, n);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & a) amps[i ^ t] = s[i];
      }
      break;
    }
    case GateKind::SWAP: {
      const std::uint64_t b = detail::qubit_bit(gate.b, n);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (((i & a) != 0) != ((i & b) != 0)) amps[i ^ a ^ b] = s[i];
      }
      break;
    }
  }
  return StateVector(std::move(amps));
}

inline StateVector apply_circuit(const StateVector& s, const Circuit& circuit) {
  if (circuit.width() != s.num_qubits()) throw std::invalid_argument("apply_circuit: width mismatch");
  StateVector out = s;
  for (const Gate& g : circuit.gates()) out = apply_gate(out, g);
  return out;
}

/// Moves the qubit at position i to position perm(i).
inline StateVector apply_qubit_permutation(const StateVector& s, const Permutation& perm) {
  const std::size_t n = s.num_qubits();
  if (perm.size() != n) throw std::invalid_argument("apply_qubit_permutation: size mismatch");
  // Per-index-bit destination: index bit (n-1-q) goes to index bit (n-1-perm(q)).
  std::vector<std::uint64_t> dest(n);
  for (std::size_t q = 0; q < n; ++q) dest[n - 1 - q] = detail::qubit_bit(perm(q), n);
  std::vector<Amplitude> amps(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    std::uint64_t j = 0;
    for (std::uint64_t bits = i; bits != 0; bits &= bits - 1) j |= dest[std::countr_zero(bits)];
    amps[j] = s[i];
  }
  return StateVector(std::move(amps));
}

inline Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("inner_product: size mismatch");
  Amplitude sum = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

/// |<a|b>|^2, clamped to [0, 1].
inline double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("fidelity: size mismatch");
  const double f = std::norm(inner_product(a, b));
  return f > 1.0 ? 1.0 : f;
}

/// Thrown when a state is not an eigenstate of the measured Pauli operator.
class IndeterminateEigenvalue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Eigenvalue (+1 or -1) of the Hermitian Pauli operator with masks (α, β),
/// i.e. i^|α∧β| X_α Z_β, on an eigenstate `s`. Throws IndeterminateEigenvalue
/// if |<s|P|s>| is more than 1e-6 away from 1.
inline int stabilizer_eigenvalue(const StateVector& s, const PauliString& p) {
  if (p.size() != s.num_qubits()) throw std::invalid_argument("stabilizer_eigenvalue: size mismatch");
  const std::uint64_t x = detail::index_mask(p.x_bits(), s.num_qubits());
  const std::uint64_t z = detail::index_mask(p.z_bits(), s.num_qubits());
  Amplitude expectation = 0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const Amplitude term = std::conj(s[i ^ x]) * s[i];
    expectation += (std::popcount(i & z) & 1) ? -term : term;
  }
  static constexpr Amplitude kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  expectation *= kPhases[std::popcount(p.x_bits() & p.z_bits()) & 3];
  if (std::abs(std::abs(expectation) - 1.0) > 1e-6 || std::abs(expectation.imag()) > 1e-6) {
    throw IndeterminateEigenvalue("stabilizer_eigenvalue: state is not an eigenstate of " + p.str());
  }
  return expectation.real() > 0 ? +1 : -1;
}

}  // namespace qinterleave
