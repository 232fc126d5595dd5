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
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qinterleave/channel.hpp"
#include "qinterleave/codes.hpp"
#include "qinterleave/interleaver.hpp"
#include "qinterleave/pipeline.hpp"
#include "qinterleave/report.hpp"
#include "qinterleave/statevector.hpp"

namespace qinterleave {

/// Thrown for invalid command parameters; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string fixed(double v, int digits = 12) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

inline std::string syndromes_text(const std::vector<BinaryVector>& syndromes) {
  std::string out;
  for (const BinaryVector& s : syndromes) out += (out.empty() ? "" : " ") + s.str();
  return out;
}

inline nlohmann::json syndromes_json(const std::vector<BinaryVector>& syndromes) {
  nlohmann::json out = nlohmann::json::array();
  for (const BinaryVector& s : syndromes) out.push_back(s.str());
  return out;
}

inline nlohmann::json amplitudes_json(const std::vector<LogicalAmplitudes>& coeffs) {
  nlohmann::json out = nlohmann::json::array();
  for (const LogicalAmplitudes& c : coeffs) {
    out.push_back({{"c0", {c.c0.real(), c.c0.imag()}}, {"c1", {c.c1.real(), c.c1.imag()}}});
  }
  return out;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

inline std::string describe(BurstKind kind) {
  switch (kind) {
    case BurstKind::bit:
      return "X-only bursts";
    case BurstKind::phase:
      return "Z-only bursts";
    case BurstKind::colocated:
      return "X and Z parts share one window";
    case BurstKind::independent:
      return "X and Z parts are separate bursts, windows may differ";
  }
  return "?";
}

/// The two burst branches of the worked nine-qubit example.
inline BranchSet demo_branches() { return parse_branch_set("ZZZIIIIII,IIIIIZZZI"); }

/// Three phase-code blocks are encoded, interleaved, hit by the two demo
/// branches, deinterleaved and corrected block by block.
inline Report run_demo(const std::optional<std::vector<LogicalAmplitudes>>& coefficients = std::nullopt) {
  detail::Stopwatch clock;
  const std::vector<LogicalAmplitudes> coeffs = coefficients.value_or(default_logical_amplitudes(3));
  if (coeffs.size() != 3) throw UsageError("demo: expected exactly 3 logical coefficient pairs");
  for (const LogicalAmplitudes& c : coeffs) {
    try {
      check_normalized(c);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("demo: ") + e.what());
    }
  }
  const InterleavedPipeline pipeline(phase3_code(), coeffs);
  const Circuit circuit = synthesize_swap_network(pipeline.interleaver());

  Report report;
  report.command = "demo";
  report.parameters = {{"code", "phase3"}, {"degree", 3}, {"coefficients", detail::amplitudes_json(coeffs)}};
  report.lines.push_back("demo: 3 blocks of the [[3,1]] phase code interleaved into 9 qubits");
  report.lines.push_back("interleaver: " + std::to_string(circuit.count(GateKind::SWAP)) + " SWAPs, " +
                         std::to_string(cnot_count(circuit)) + " CNOTs");

  const auto branches = apply_branches(demo_branches(), pipeline.interleaved());
  for (const auto& [branch, corrupted] : branches) {
    const StateVector received = apply_qubit_permutation(corrupted, pipeline.deinterleaver());
    const BurstOutcome outcome = pipeline.decode(branch.pauli, received);
    const std::vector<std::size_t> positions = pauli_support(outcome.residual);
    // The deinterleaved state must be the input hit by the relabeled error.
    const double residual_match = fidelity(received, apply_pauli(pipeline.input(), outcome.residual));
    const bool ok = outcome.recovered() && residual_match >= 1.0 - kRecoveryTolerance;
    report.add_item({{"branch", branch.label},
                     {"error", branch.pauli.str()},
                     {"residual", outcome.residual.str()},
                     {"residual_positions", positions_json(positions, 0)},
                     {"residual_positions_1based", positions_json(positions, 1)},
                     {"block_syndromes", detail::syndromes_json(outcome.block_syndromes)},
                     {"fidelity", outcome.fidelity}},
                    ok);
    report.lines.push_back("branch " + branch.label + "  error " + branch.pauli.str());
    report.lines.push_back("  deinterleaved error " + outcome.residual.str() + "  positions " +
                           join_positions(positions, 1) + " (0-based " + join_positions(positions, 0) + ")");
    report.lines.push_back("  block syndromes " + detail::syndromes_text(outcome.block_syndromes));
    report.lines.push_back("  fidelity after correction " + detail::fixed(outcome.fidelity) +
                           (ok ? "  ok" : "  FAILED"));
  }
  report.timing_ms = clock.elapsed_ms();
  return report;
}

enum class VerifyMethod { statevector, stabilizer };

struct VerifyOptions {
  std::string code = "phase3";
  std::size_t degree = 3;
  /// Defaults to the interleaved code's declared ability.
  std::optional<std::size_t> burst;
  /// Defaults to the code's burst model.
  std::optional<BurstKind> kind;
  VerifyMethod method = VerifyMethod::stabilizer;
  /// Random logical amplitudes for the statevector method; fixed ones if unset.
  std::optional<std::uint64_t> seed;
};

/// Exhaustively checks that every burst of length ≤ l on the interleaved
/// code is handled. A requested length above nm is clamped to nm.
inline Report run_verify(const VerifyOptions& options) {
  detail::Stopwatch clock;
  StabilizerCode base;
  try {
    base = code_by_name(options.code);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (options.degree == 0) throw UsageError("verify: degree must be positive");
  const std::size_t total = base.n * options.degree;
  if (total > kMaxPositions) throw UsageError("verify: interleaved code exceeds 64 qubits");
  const std::size_t requested = options.burst.value_or(base.burst_ability * options.degree);
  if (requested == 0) throw UsageError("verify: burst length must be positive");
  const std::size_t l = std::min(requested, total);
  const BurstKind kind = options.kind.value_or(base.burst_kind);
  if (options.method == VerifyMethod::statevector && total > kMaxStateQubits) {
    throw UsageError("verify: statevector method needs n*m <= 26 (got " + std::to_string(total) + ")");
  }

  const StabilizerCode code = interleaved_code(base, options.degree);
  const std::vector<PauliString> bursts = enumerate_bursts(total, l, kind);

  Report report;
  report.command = "verify";
  report.parameters = {{"code", options.code},
                       {"degree", options.degree},
                       {"burst", l},
                       {"kind", to_string(kind)},
                       {"method", options.method == VerifyMethod::stabilizer ? "stabilizer" : "statevector"},
                       {"n", code.n},
                       {"k", code.k}};
  report.lines.push_back("verify: " + options.code + " interleaved to degree " + std::to_string(options.degree) +
                         " -> [[" + std::to_string(code.n) + "," + std::to_string(code.k) + "]]");
  report.lines.push_back("bursts: " + std::to_string(bursts.size()) + " " + to_string(kind) +
                         " bursts of length <= " + std::to_string(l));
  report.lines.push_back("burst model: " + describe(kind));

  if (options.method == VerifyMethod::stabilizer) {
    const CorrectabilityResult result = corrects_error_set(code, bursts);
    nlohmann::json item = {{"check", "corrects_error_set"}, {"bursts", bursts.size()}};
    if (result.witness) {
      item["witness"] = {result.witness->first.str(), result.witness->second.str()};
      report.lines.push_back("witness: " + result.witness->first.str() + " and " + result.witness->second.str() +
                             " share a syndrome but differ by a logical operator");
    }
    report.add_item(std::move(item), result.correctable);
    report.lines.push_back(std::string("stabilizer check: ") + (result.correctable ? "correctable" : "not correctable"));
  } else {
    const std::vector<LogicalAmplitudes> coeffs = options.seed
                                                      ? random_logical_amplitudes(options.degree, *options.seed)
                                                      : default_logical_amplitudes(options.degree);
    report.parameters["coefficients"] = detail::amplitudes_json(coeffs);
    const InterleavedPipeline pipeline(base, coeffs);
    std::size_t recovered = 0;
    std::optional<BurstOutcome> first_failure;
    for (const PauliString& burst : bursts) {
      const BurstOutcome outcome = pipeline.run(burst);
      report.add_item({{"burst", burst.str()},
                       {"residual", outcome.residual.str()},
                       {"block_syndromes", detail::syndromes_json(outcome.block_syndromes)},
                       {"decoded", outcome.decoded},
                       {"fidelity", outcome.fidelity}},
                      outcome.recovered());
      if (outcome.recovered()) {
        ++recovered;
      } else if (!first_failure) {
        first_failure = outcome;
      }
    }
    report.lines.push_back("statevector pipeline: " + std::to_string(recovered) + "/" +
                           std::to_string(bursts.size()) + " bursts recovered");
    if (first_failure) {
      report.lines.push_back("witness: burst " + first_failure->error.str() + " -> blocks see " +
                             first_failure->residual.str() + ", fidelity " + detail::fixed(first_failure->fidelity));
    }
  }
  report.timing_ms = clock.elapsed_ms();
  return report;
}

/// True if running `circuit` gate by gate moves every qubit exactly as
/// `perm` does. Up to 20 qubits this is checked on a state whose amplitudes
/// are pairwise distinct, which pins down the image of every basis state;
/// larger SWAP-only circuits are checked by tracking qubit positions.
inline bool circuit_matches_permutation(const Circuit& circuit, const Permutation& perm) {
  const std::size_t n = perm.size();
  if (circuit.width() != n) return false;
  if (n <= 20) {
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = static_cast<double>(i + 1);
    const StateVector probe = StateVector::normalized(std::move(amps));
    const StateVector by_gates = apply_circuit(probe, circuit);
    const StateVector direct = apply_qubit_permutation(probe, perm);
    for (std::size_t i = 0; i < probe.dimension(); ++i) {
      if (std::abs(by_gates[i] - direct[i]) > 1e-15) return false;
    }
    return true;
  }
  std::vector<std::size_t> holder(n);  // holder[slot] = original qubit now in slot
  for (std::size_t i = 0; i < n; ++i) holder[i] = i;
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::SWAP) throw std::invalid_argument("circuit_matches_permutation: only SWAP circuits above 20 qubits");
    std::swap(holder[g.a], holder[g.b]);
  }
  for (std::size_t slot = 0; slot < n; ++slot) {
    if (perm(holder[slot]) != slot) return false;
  }
  return true;
}

struct SynthOutput {
  std::string circuit_text;
  Report report;
};

/// Interleaver circuit for n-symbol blocks at degree m.
inline SynthOutput run_synth(std::size_t n, std::size_t m, CircuitFormat format, bool expand_swaps) {
  detail::Stopwatch clock;
  if (n == 0 || m == 0) throw UsageError("synth: rows and cols must be positive");
  if (n * m > kMaxPositions) throw UsageError("synth: n*m must be at most 64");
  const Permutation perm = interleave_permutation(n, m);
  const Circuit circuit = synthesize_swap_network(perm);
  const Circuit emitted = expand_swaps ? circuit.expand_swaps() : circuit;
  const std::size_t swaps = circuit.count(GateKind::SWAP);
  const std::size_t cnots = cnot_count(circuit);

  SynthOutput out;
  out.circuit_text = export_circuit(emitted, format);
  Report& report = out.report;
  report.command = "synth";
  report.parameters = {{"rows", n},
                       {"cols", m},
                       {"format", format == CircuitFormat::plain ? "plain" : "qasm"},
                       {"expand_swaps", expand_swaps}};
  report.lines.push_back("interleaver " + std::to_string(n) + "x" + std::to_string(m) + ": " + std::to_string(swaps) +
                         " SWAPs, " + std::to_string(cnots) + " CNOTs");

  const bool equivalent = circuit_matches_permutation(emitted, perm);
  report.add_item({{"check", "permutation_equivalence"}, {"qubits", n * m}}, equivalent);
  report.lines.push_back(std::string("circuit realizes the interleave permutation: ") + (equivalent ? "yes" : "NO"));

  const std::size_t bound = 3 * (n * m - 1);
  report.add_item({{"check", "cnot_bound"}, {"swaps", swaps}, {"cnots", cnots}, {"bound", bound}}, cnots <= bound);
  report.lines.push_back("CNOT count " + std::to_string(cnots) + " <= 3(nm-1) = " + std::to_string(bound) + ": " +
                         (cnots <= bound ? "yes" : "NO"));
  if (n == m) {
    const std::size_t expected = square_interleaver_cnots(n);
    report.add_item({{"check", "cnot_formula"}, {"cnots", cnots}, {"expected", expected}}, cnots == expected);
    report.lines.push_back("CNOT count " + std::to_string(cnots) + " == 3n(n-1)/2 = " + std::to_string(expected) + ": " +
                           (cnots == expected ? "pass" : "FAIL"));
  }
  report.timing_ms = clock.elapsed_ms();
  return out;
}

/// Lists every `kind` burst of length ≤ l on n qubits.
inline Report run_enumerate(std::size_t n, std::size_t l, BurstKind kind) {
  detail::Stopwatch clock;
  if (n == 0 || n > kMaxPositions) throw UsageError("enumerate: qubit count must be in [1, 64]");
  if (l == 0 || l > n) throw UsageError("enumerate: burst length must be in [1, n]");
  if (kind == BurstKind::colocated && n > 16 && l > 8) {
    throw UsageError("enumerate: colocated bursts with l > 8 on more than 16 qubits are too many to list");
  }
  Report report;
  report.command = "enumerate";
  report.parameters = {{"qubits", n}, {"burst", l}, {"kind", to_string(kind)}};
  const std::vector<PauliString> bursts = enumerate_bursts(n, l, kind);
  for (const PauliString& p : bursts) {
    const std::vector<std::size_t> positions = pauli_support(p);
    report.add_item({{"pauli", p.str()},
                     {"x_burst_length", burst_length(p.x_bits())},
                     {"z_burst_length", burst_length(p.z_bits())},
                     {"positions", positions_json(positions, 0)}},
                    is_quantum_burst(p, l));
    report.lines.push_back(p.str());
  }
  report.lines.push_back("count: " + std::to_string(bursts.size()));
  report.timing_ms = clock.elapsed_ms();
  return report;
}

}  // namespace qinterleave
