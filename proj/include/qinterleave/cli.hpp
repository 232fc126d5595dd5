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

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qinterleave/commands.hpp"

namespace qinterleave {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline int emit(const Report& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.pass() ? kExitPass : kExitFail;
}

}  // namespace detail

/// Entry point of the `qinterleave` tool. Subcommands: demo, verify, synth,
/// enumerate. Returns 0 on pass, 1 on a failed check, 2 on usage errors.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum burst-error correction by interleaving"};
  app.name("qinterleave");
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"bit", "phase", "colocated", "independent"};

  std::string format = "text";
  std::optional<std::uint64_t> seed;
  auto* demo = app.add_subcommand("demo", "Run the nine-qubit worked example");
  demo->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  demo->add_option("--seed", seed, "Use random logical amplitudes drawn from this seed");

  std::string code = "phase3";
  std::size_t degree = 3;
  std::optional<std::size_t> burst;
  std::optional<std::string> kind;
  std::string method = "stabilizer";
  auto* verify = app.add_subcommand("verify", "Check burst correction of an interleaved code");
  verify->add_option("--code", code, "Base code")->check(CLI::IsMember({"phase3", "five"}));
  verify->add_option("--degree", degree, "Interleaving degree m");
  verify->add_option("--burst", burst, "Largest burst length (default: b*m)");
  verify->add_option("--kind", kind, "Burst model (default: the code's)")->check(CLI::IsMember(kinds));
  verify->add_option("--method", method, "Verification method")->check(CLI::IsMember({"stabilizer", "statevector"}));
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "Random logical amplitudes for the statevector method");

  std::size_t rows = 5;
  std::size_t cols = 5;
  std::string circuit_format = "plain";
  std::string output;
  bool expand = false;
  auto* synth = app.add_subcommand("synth", "Synthesize the interleaver SWAP network");
  synth->add_option("-n,--rows", rows, "Symbols per block n");
  synth->add_option("-m,--cols,--degree", cols, "Interleaving degree m");
  synth->add_option("--format", circuit_format, "plain or qasm circuit, or json report")
      ->check(CLI::IsMember({"plain", "qasm", "json"}));
  synth->add_option("--output", output, "Write the circuit to this file");
  synth->add_flag("--expand-swaps", expand, "Write each SWAP as three CNOTs");

  std::optional<std::size_t> qubits;
  std::size_t enum_burst = 3;
  std::string enum_kind = "phase";
  auto* enumerate = app.add_subcommand("enumerate", "List bursts");
  enumerate->add_option("--qubits", qubits, "Register size (default: n*m of --code/--degree)");
  enumerate->add_option("--code", code, "Base code")->check(CLI::IsMember({"phase3", "five"}));
  enumerate->add_option("--degree", degree, "Interleaving degree m");
  enumerate->add_option("--burst", enum_burst, "Largest burst length");
  enumerate->add_option("--kind", enum_kind, "Burst model")->check(CLI::IsMember(kinds));
  enumerate->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*demo) {
      std::optional<std::vector<LogicalAmplitudes>> coeffs;
      if (seed) coeffs = random_logical_amplitudes(3, *seed);
      return detail::emit(run_demo(coeffs), format, out);
    }
    if (*verify) {
      VerifyOptions options;
      options.code = code;
      options.degree = degree;
      options.burst = burst;
      if (kind) options.kind = parse_burst_kind(*kind);
      options.method = method == "statevector" ? VerifyMethod::statevector : VerifyMethod::stabilizer;
      options.seed = seed;
      return detail::emit(run_verify(options), format, out);
    }
    if (*synth) {
      const bool json = circuit_format == "json";
      const CircuitFormat fmt = circuit_format == "qasm" ? CircuitFormat::qasm : CircuitFormat::plain;
      SynthOutput result = run_synth(rows, cols, fmt, expand);
      if (!output.empty()) {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw UsageError("synth: cannot write " + output);
        file << result.circuit_text;
      }
      if (json) {
        nlohmann::json doc = result.report.to_json();
        doc["circuit"] = result.circuit_text;
        out << doc.dump(2) << '\n';
      } else if (output.empty()) {
        out << result.circuit_text;
        err << result.report.to_text();
      } else {
        out << result.report.to_text();
      }
      return result.report.pass() ? kExitPass : kExitFail;
    }
    if (*enumerate) {
      const std::size_t n = qubits.value_or(code_by_name(code).n * degree);
      return detail::emit(run_enumerate(n, enum_burst, parse_burst_kind(enum_kind)), format, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qinterleave
