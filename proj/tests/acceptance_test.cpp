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


// One line per acceptance criterion; nonzero exit if any fails. Tolerances
// and runtime budgets are fixed here, not taken from the command line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qinterleave/commands.hpp"
#include "qinterleave/qinterleave.hpp"

using namespace qinterleave;

namespace {

constexpr double kFidelityTolerance = 1e-10;

struct Criterion {
  const char* name;
  double budget_s;
  std::function<bool(std::string&)> check;
};

// 1. Square interleavers cost exactly 3n(n-1)/2 CNOTs.
bool gate_count(std::string& detail) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Circuit c = synthesize_swap_network(interleave_permutation(n, n));
    const std::size_t expected = 3 * n * (n - 1) / 2;
    if (cnot_count(c) != expected || cnot_count(c.expand_swaps()) != expected) {
      detail = "n=" + std::to_string(n) + " gives " + std::to_string(cnot_count(c));
      return false;
    }
  }
  const std::size_t five = cnot_count(synthesize_swap_network(interleave_permutation(5, 5)));
  detail = "n=2..8 exact, n=5 -> " + std::to_string(five);
  return five == 30;
}

// 2. Two-branch demo over random logical amplitudes.
bool worked_example(std::string& detail) {
  const nlohmann::json first = {1, 4, 7};
  const nlohmann::json second = {3, 6, 8};
  double worst = 1.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Report r = run_demo(random_logical_amplitudes(3, seed));
    if (r.items.size() != 2 || r.items[0]["residual_positions_1based"] != first ||
        r.items[1]["residual_positions_1based"] != second) {
      detail = "wrong residual positions at seed " + std::to_string(seed);
      return false;
    }
    for (const auto& item : r.items) {
      const PauliString residual = PauliString::from_string(item["residual"].get<std::string>());
      if (residual.x_bits() != 0) {
        detail = "residual has a bit-flip part at seed " + std::to_string(seed);
        return false;
      }
      for (std::size_t block = 0; block < 3; ++block) {
        if (pauli_weight(restrict_to(residual, 3 * block, 3)) > 1) {
          detail = "block " + std::to_string(block) + " sees more than one error";
          return false;
        }
      }
      worst = std::min(worst, item["fidelity"].get<double>());
    }
    if (!r.pass()) {
      detail = "demo reports failure at seed " + std::to_string(seed);
      return false;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", 1.0 - worst);
  detail = "100 coefficient triples, min fidelity 1-" + std::string(buf);
  return worst >= 1.0 - kFidelityTolerance;
}

// 3. phase3 to degree 3, statevector: all 31 short bursts, some length-4 failure.
bool phase3_statevector(std::string& detail) {
  VerifyOptions o;
  o.code = "phase3";
  o.degree = 3;
  o.kind = BurstKind::phase;
  o.method = VerifyMethod::statevector;
  o.burst = 3;
  const Report short_bursts = run_verify(o);
  std::size_t recovered = 0;
  for (const auto& item : short_bursts.items) {
    if (item["ok"].get<bool>() && item["fidelity"].get<double>() >= 1.0 - kFidelityTolerance) ++recovered;
  }
  o.burst = 4;
  const Report long_bursts = run_verify(o);
  std::size_t failing_len4 = 0;
  for (const auto& item : long_bursts.items) {
    const PauliString p = PauliString::from_string(item["burst"].get<std::string>());
    if (!item["ok"].get<bool>() && burst_length(p.z_bits()) == 4) ++failing_len4;
  }
  detail = std::to_string(recovered) + "/" + std::to_string(short_bursts.items.size()) +
           " bursts of length <= 3 recovered, " + std::to_string(failing_len4) + " length-4 bursts fail";
  return short_bursts.items.size() == 31 && recovered == 31 && failing_len4 > 0;
}

// 4. [[25,5]] from the five-qubit code: colocated bursts up to 5, not 6.
bool five_qubit_stabilizer(std::string& detail) {
  const StabilizerCode code = interleaved_code(five_qubit_code(), 5);
  validate_code(code);
  if (code.n != 25 || code.k != 5) {
    detail = "interleaved code is not [[25,5]]";
    return false;
  }
  const bool up_to_5 = corrects_error_set(code, enumerate_bursts(25, 5, BurstKind::colocated)).correctable;
  const CorrectabilityResult at_6 = corrects_error_set(code, enumerate_bursts(25, 6, BurstKind::colocated));
  detail = std::string("[[25,5]] l<=5 ") + (up_to_5 ? "correctable" : "NOT correctable") + ", l=6 " +
           (at_6.correctable ? "correctable" : "not correctable");
  if (at_6.witness) detail += " (witness " + at_6.witness->first.str() + " / " + at_6.witness->second.str() + ")";
  return up_to_5 && !at_6.correctable;
}

// Longest burst seen by any block when the slots in `window` are hit, using
// the array reading of the interleaver.
std::size_t worst_block_burst(std::size_t n, std::size_t m, std::uint64_t window) {
  std::size_t worst = 0;
  for (std::size_t block = 0; block < m; ++block) {
    std::string bits;
    for (std::size_t symbol = 0; symbol < n; ++symbol) {
      bits += ((window >> oracle::array_slot(n, m, block, symbol)) & 1) ? '1' : '0';
    }
    worst = std::max(worst, oracle::burst_length(bits));
  }
  return worst;
}

// 5. Every burst of length <= bm lands as bursts of length <= b per block.
// Block burst length only grows with the hit set, so the full windows of
// length min(bm, nm) cover every shorter burst; small sizes are also scanned
// over all 2^(nm) patterns.
bool burst_spreading(std::string& detail) {
  std::size_t windows = 0;
  std::size_t patterns = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t m = 1; m <= 8; ++m) {
      const std::size_t total = n * m;
      const Permutation deinterleave = invert(interleave_permutation(n, m));
      for (std::size_t b = 1; b <= n; ++b) {
        const std::size_t l = std::min(b * m, total);
        const std::uint64_t ones = l == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1;
        for (std::size_t start = 0; start + l <= total; ++start, ++windows) {
          const std::uint64_t window = ones << start;
          const std::size_t worst = worst_block_burst(n, m, window);
          // The library deinterleaver must agree with the array reading.
          const std::uint64_t w = permute_bits(window, deinterleave);
          std::size_t lib_worst = 0;
          for (std::size_t block = 0; block < m; ++block) {
            lib_worst = std::max(lib_worst, burst_length((w >> (block * n)) & ((std::uint64_t{1} << n) - 1)));
          }
          if (worst > b || lib_worst != worst) {
            detail = std::to_string(n) + "x" + std::to_string(m) + " b=" + std::to_string(b) + " start " +
                     std::to_string(start) + " gives block burst " + std::to_string(worst);
            return false;
          }
        }
      }
      if (total <= 16) {
        for (std::uint64_t v = 1; v < (std::uint64_t{1} << total); ++v, ++patterns) {
          const std::size_t b = (burst_length(v) + m - 1) / m;
          if (b <= n && worst_block_burst(n, m, v) > b) {
            detail = std::to_string(n) + "x" + std::to_string(m) + " pattern " + std::to_string(v);
            return false;
          }
        }
      }
    }
  }
  detail = std::to_string(windows) + " windows, " + std::to_string(patterns) + " full patterns, n,m <= 8";
  return true;
}

// 6. SWAP network equals the interleaving permutation on every basis state.
bool circuit_equivalence(std::string& detail) {
  std::size_t configs = 0;
  std::size_t states = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t m = 1; n * m <= 12; ++m, ++configs) {
      const std::size_t total = n * m;
      const Permutation pi = interleave_permutation(n, m);
      for (std::size_t block = 0; block < m; ++block) {
        for (std::size_t symbol = 0; symbol < n; ++symbol) {
          if (pi(block * n + symbol) != oracle::array_slot(n, m, block, symbol)) {
            detail = "interleaver disagrees with the array reading at " + std::to_string(n) + "x" + std::to_string(m);
            return false;
          }
        }
      }
      const Circuit circuit = synthesize_swap_network(pi).expand_swaps();
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << total); ++x, ++states) {
        const StateVector in = basis_state(total, BinaryVector(total, x));
        const StateVector via_circuit = apply_circuit(in, circuit);
        const StateVector direct = apply_qubit_permutation(in, pi);
        for (std::size_t i = 0; i < via_circuit.dimension(); ++i) {
          if (via_circuit[i] != direct[i]) {
            detail = std::to_string(n) + "x" + std::to_string(m) + " basis state " + std::to_string(x);
            return false;
          }
        }
      }
    }
  }
  detail = std::to_string(configs) + " shapes, " + std::to_string(states) + " basis states, exact";
  return true;
}

// 7. Both verification methods give the same verdict.
bool method_agreement(std::string& detail) {
  std::size_t agree = 0;
  std::size_t total = 0;
  std::string verdicts;
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t l = 1; l <= 4; ++l, ++total) {
      VerifyOptions o;
      o.code = "phase3";
      o.degree = m;
      o.burst = l;
      o.kind = BurstKind::phase;
      o.method = VerifyMethod::stabilizer;
      const bool stabilizer = run_verify(o).pass();
      o.method = VerifyMethod::statevector;
      const bool statevector = run_verify(o).pass();
      agree += stabilizer == statevector;
      verdicts += stabilizer ? 'P' : 'F';
    }
  }
  detail = std::to_string(agree) + "/" + std::to_string(total) + " configurations agree (" + verdicts + ")";
  return agree == total;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 gate-count formula", 1.0, gate_count},
      {"2 worked example", 5.0, worked_example},
      {"3 phase3 m=3 statevector", 10.0, phase3_statevector},
      {"4 [[25,5]] stabilizer", 300.0, five_qubit_stabilizer},
      {"5 burst-spreading lemma", 30.0, burst_spreading},
      {"6 circuit-permutation equivalence", 30.0, circuit_equivalence},
      {"7 method agreement", 60.0, method_agreement},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_s;
    if (!in_time) detail += " (over budget)";
    const bool pass = ok && in_time;
    failures += !pass;
    std::printf("[%s] %-36s %8.3f s / %.0f s  %s\n", pass ? "PASS" : "FAIL", c.name, seconds, c.budget_s,
                detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
