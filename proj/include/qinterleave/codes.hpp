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
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qinterleave/interleaver.hpp"
#include "qinterleave/pauli.hpp"
#include "qinterleave/statevector.hpp"

namespace qinterleave {

/// An [[n,k]] stabilizer code together with the burst model it is declared
/// to correct up to length `burst_ability`.
struct StabilizerCode {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliString> generators;
  std::vector<PauliString> logical_xs;
  std::vector<PauliString> logical_zs;
  std::size_t burst_ability = 0;
  BurstKind burst_kind = BurstKind::colocated;
};

/// Coefficients (c0, c1) of one logical qubit c0|0> + c1|1>.
struct LogicalAmplitudes {
  Amplitude c0{1.0, 0.0};
  Amplitude c1{0.0, 0.0};
};

/// Row-echelon basis of a set of Pauli strings viewed as symplectic vectors
/// (x | z) over GF(2). Each stored row's highest set bit is its pivot, and
/// pivots are distinct and kept in descending order.
class SymplecticBasis {
 public:
  explicit SymplecticBasis(std::size_t n) : n_(n) {}

  /// Adds `p` to the span. Returns false if it was already in it.
  bool insert(const PauliString& p) {
    Row r = reduce({p.x_bits(), p.z_bits()});
    if (r.x == 0 && r.z == 0) return false;
    const auto pos = std::find_if(rows_.begin(), rows_.end(),
                                  [&](const Row& other) { return pivot(other) < pivot(r); });
    rows_.insert(pos, r);
    return true;
  }

  bool contains(const PauliString& p) const {
    if (p.size() != n_) throw std::invalid_argument("SymplecticBasis: size mismatch");
    const Row r = reduce({p.x_bits(), p.z_bits()});
    return r.x == 0 && r.z == 0;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::uint64_t x;
    std::uint64_t z;
  };

  // Bit index in [0, 128): z occupies the high half.
  static int pivot(const Row& r) {
    if (r.z != 0) return 64 + 63 - std::countl_zero(r.z);
    return 63 - std::countl_zero(r.x);
  }

  static bool has_bit(const Row& r, int bit) {
    return bit >= 64 ? ((r.z >> (bit - 64)) & 1) : ((r.x >> bit) & 1);
  }

  Row reduce(Row r) const {
    for (const Row& row : rows_) {
      if (has_bit(r, pivot(row))) {
        r.x ^= row.x;
        r.z ^= row.z;
      }
    }
    return r;
  }

  std::size_t n_;
  std::vector<Row> rows_;
};

inline std::size_t symplectic_rank(const std::vector<PauliString>& paulis, std::size_t n) {
  SymplecticBasis basis(n);
  for (const PauliString& p : paulis) basis.insert(p);
  return basis.rank();
}

/// Throws std::logic_error describing the first violated code invariant.
inline void validate_code(const StabilizerCode& code) {
  const auto fail = [&](const std::string& why) {
    throw std::logic_error("code " + code.name + ": " + why);
  };
  if (code.k > code.n || code.generators.size() != code.n - code.k) fail("expected n-k generators");
  if (code.logical_xs.size() != code.k || code.logical_zs.size() != code.k) {
    fail("expected k logical pairs");
  }
  const auto check_size = [&](const PauliString& p) {
    if (p.size() != code.n) fail("operator " + p.str() + " has the wrong length");
  };
  for (const auto* group : {&code.generators, &code.logical_xs, &code.logical_zs}) {
    for (const PauliString& p : *group) check_size(p);
  }
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
      if (symplectic_product(code.generators[i], code.generators[j]) != 0) {
        fail("generators " + code.generators[i].str() + " and " + code.generators[j].str() +
             " anticommute");
      }
    }
  }
  if (symplectic_rank(code.generators, code.n) != code.generators.size()) {
    fail("generators are not independent");
  }
  for (const auto* group : {&code.logical_xs, &code.logical_zs}) {
    for (const PauliString& l : *group) {
      for (const PauliString& g : code.generators) {
        if (symplectic_product(l, g) != 0) fail("logical " + l.str() + " anticommutes with " + g.str());
      }
    }
  }
  for (std::size_t i = 0; i < code.k; ++i) {
    for (std::size_t j = 0; j < code.k; ++j) {
      if (symplectic_product(code.logical_xs[i], code.logical_zs[j]) != (i == j ? 1 : 0)) {
        fail("logical X/Z pairing is not canonical");
      }
      if (i < j && (symplectic_product(code.logical_xs[i], code.logical_xs[j]) != 0 ||
                    symplectic_product(code.logical_zs[i], code.logical_zs[j]) != 0)) {
        fail("distinct logicals anticommute");
      }
    }
  }
}

namespace detail {

inline std::vector<PauliString> parse_all(std::initializer_list<const char*> texts) {
  std::vector<PauliString> out;
  for (const char* t : texts) out.push_back(PauliString::from_string(t));
  return out;
}

}  // namespace detail

// |C0> = |000>+|011>+|101>+|110> and |C1> = |111>+|100>+|010>+|001> are the
// even and odd parity superpositions. Both are fixed by X⊗X⊗I and I⊗X⊗X
// (each flips two bits, preserving parity), and Z⊗Z⊗Z reads the parity.
// Every single Z anticommutes with a distinct nonempty subset of the two
// generators, so one phase error is correctable.
inline StabilizerCode phase3_code() {
  StabilizerCode code;
  code.name = "phase3";
  code.n = 3;
  code.k = 1;
  code.generators = detail::parse_all({"XXI", "IXX"});
  code.logical_xs = detail::parse_all({"XXX"});
  code.logical_zs = detail::parse_all({"ZZZ"});
  code.burst_ability = 1;
  code.burst_kind = BurstKind::phase;
  return code;
}

/// The perfect [[5,1,3]] code with cyclic generators XZZXI and its shifts.
inline StabilizerCode five_qubit_code() {
  StabilizerCode code;
  code.name = "five";
  code.n = 5;
  code.k = 1;
  code.generators = detail::parse_all({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
  code.logical_xs = detail::parse_all({"XXXXX"});
  code.logical_zs = detail::parse_all({"ZZZZZ"});
  code.burst_ability = 1;
  code.burst_kind = BurstKind::colocated;
  return code;
}

inline void check_normalized(const LogicalAmplitudes& c) {
  const double norm2 = std::norm(c.c0) + std::norm(c.c1);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("logical amplitudes are not normalized (|c0|^2+|c1|^2 = " +
                                std::to_string(norm2) + ")");
  }
}

/// c0|C0> + c1|C1> for the three-qubit phase code.
inline StateVector encode_phase3(Amplitude c0, Amplitude c1) {
  check_normalized({c0, c1});
  std::vector<Amplitude> amps(8);
  for (std::size_t i = 0; i < 8; ++i) {
    amps[i] = (std::popcount(i) % 2 == 0 ? c0 : c1) * 0.5;
  }
  return StateVector(std::move(amps));
}

/// Encoder for any k = 1 code whose logical Z is Z-type: |0_L> is the
/// normalized projection of |0...0> onto the code space, |1_L> = X_L|0_L>.
inline StateVector encode_logical(const StabilizerCode& code, Amplitude c0, Amplitude c1) {
  check_normalized({c0, c1});
  if (code.k != 1) throw std::invalid_argument("encode_logical: only k = 1 codes");
  if (code.logical_zs[0].x_bits() != 0) throw std::invalid_argument("encode_logical: logical Z must be Z-type");
  StateVector::check_qubits(code.n);
  std::vector<Amplitude> amps(std::size_t{1} << code.n);
  StateVector zero_l = basis_state(code.n, BinaryVector(code.n));
  for (const PauliString& g : code.generators) {
    // (I + g)/2 on the running state; g is Hermitian up to i^|x∧z|.
    const StateVector moved = apply_pauli(zero_l, g);
    static constexpr Amplitude kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Amplitude phase = kPhases[std::popcount(g.x_bits() & g.z_bits()) & 3];
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = zero_l[i] + phase * moved[i];
    zero_l = StateVector::normalized(amps);
  }
  const StateVector one_l = apply_pauli(zero_l, code.logical_xs[0]);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = c0 * zero_l[i] + c1 * one_l[i];
  return StateVector(std::move(amps));
}

/// Tensor product of per-block encodings, block 0 in the lowest positions.
template <typename Encoder>
StateVector encode_blocks(const std::vector<LogicalAmplitudes>& coeffs, Encoder&& encoder) {
  if (coeffs.empty()) throw std::invalid_argument("encode_blocks: no blocks");
  for (const LogicalAmplitudes& c : coeffs) check_normalized(c);
  std::optional<StateVector> out;
  for (const LogicalAmplitudes& c : coeffs) {
    StateVector block = encoder(c.c0, c.c1);
    out = out ? tensor(*out, block) : std::move(block);
  }
  return *out;
}

/// Syndrome of a Pauli error: bit i is its symplectic product with generator i.
inline BinaryVector pauli_syndrome(const StabilizerCode& code, const PauliString& error) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    bits |= std::uint64_t(symplectic_product(code.generators[i], error)) << i;
  }
  return BinaryVector(code.generators.size(), bits);
}

/// Syndrome read off a Pauli-corrupted code state: bit i is 1 iff the state
/// has eigenvalue -1 under generator i. Propagates IndeterminateEigenvalue.
inline BinaryVector extract_syndrome(const StabilizerCode& code, const StateVector& s) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    if (stabilizer_eigenvalue(s, code.generators[i]) < 0) bits |= std::uint64_t{1} << i;
  }
  return BinaryVector(code.generators.size(), bits);
}

/// Membership in the stabilizer group generated by `code.generators`
/// (mask level, phase ignored).
inline bool in_stabilizer_group(const StabilizerCode& code, const PauliString& p) {
  SymplecticBasis basis(code.n);
  for (const PauliString& g : code.generators) basis.insert(g);
  return basis.contains(p);
}

/// Thrown when two errors share a syndrome but differ by more than a stabilizer.
class SyndromeCollision : public std::runtime_error {
 public:
  SyndromeCollision(PauliString first, PauliString second)
      : std::runtime_error("syndrome collision between " + first.str() + " and " + second.str()),
        first_(first),
        second_(second) {}
  const PauliString& first() const { return first_; }
  const PauliString& second() const { return second_; }

 private:
  PauliString first_;
  PauliString second_;
};

/// Syndrome -> correction lookup. The zero syndrome always maps to identity.
class SyndromeTable {
 public:
  explicit SyndromeTable(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  const std::map<BinaryVector, PauliString>& entries() const { return entries_; }

  std::optional<PauliString> lookup(const BinaryVector& syndrome) const {
    const auto it = entries_.find(syndrome);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend SyndromeTable build_syndrome_table(const StabilizerCode&, const std::vector<PauliString>&);
  std::size_t n_;
  std::map<BinaryVector, PauliString> entries_;
};

/// Maps each error's syndrome to that error. Degenerate errors (differing by
/// a stabilizer) keep the first one seen. Throws SyndromeCollision otherwise.
inline SyndromeTable build_syndrome_table(const StabilizerCode& code, const std::vector<PauliString>& errors) {
  SymplecticBasis stabilizers(code.n);
  for (const PauliString& g : code.generators) stabilizers.insert(g);
  SyndromeTable table(code.n);
  const PauliString id = PauliString::identity(code.n);
  table.entries_.emplace(pauli_syndrome(code, id), id);
  for (const PauliString& e : errors) {
    if (e.size() != code.n) throw std::invalid_argument("build_syndrome_table: error length mismatch");
    const auto [it, inserted] = table.entries_.emplace(pauli_syndrome(code, e), e);
    if (!inserted && !stabilizers.contains(it->second * e)) throw SyndromeCollision(it->second, e);
  }
  return table;
}

/// Thrown by `correct` when the measured syndrome has no table entry.
class UnknownSyndrome : public std::runtime_error {
 public:
  explicit UnknownSyndrome(const BinaryVector& syndrome)
      : std::runtime_error("no correction for syndrome " + syndrome.str()), syndrome_(syndrome) {}
  const BinaryVector& syndrome() const { return syndrome_; }

 private:
  BinaryVector syndrome_;
};

inline StateVector correct(const StabilizerCode& code, const SyndromeTable& table, const StateVector& s) {
  const BinaryVector syndrome = extract_syndrome(code, s);
  const auto fix = table.lookup(syndrome);
  if (!fix) throw UnknownSyndrome(syndrome);
  return apply_pauli(s, *fix);
}

/// Syndrome-decodes each of the `degree` consecutive blocks of `s`
/// independently with `code`'s generators and `table`. Returns the corrected
/// state and the per-block syndromes.
inline std::pair<StateVector, std::vector<BinaryVector>> correct_blockwise(const StabilizerCode& code,
                                                                           const SyndromeTable& table,
                                                                           std::size_t degree,
                                                                           const StateVector& s) {
  const std::size_t total = code.n * degree;
  if (s.num_qubits() != total) throw std::invalid_argument("correct_blockwise: size mismatch");
  std::vector<BinaryVector> syndromes;
  PauliString fix = PauliString::identity(total);
  for (std::size_t block = 0; block < degree; ++block) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
      if (stabilizer_eigenvalue(s, embed(code.generators[i], block * code.n, total)) < 0) {
        bits |= std::uint64_t{1} << i;
      }
    }
    const BinaryVector syndrome(code.generators.size(), bits);
    const auto block_fix = table.lookup(syndrome);
    if (!block_fix) throw UnknownSyndrome(syndrome);
    fix = fix * embed(*block_fix, block * code.n, total);
    syndromes.push_back(syndrome);
  }
  return {apply_pauli(s, fix), std::move(syndromes)};
}

/// Interleaves `code` to degree m: every block's operators are embedded at
/// its block positions and pushed through interleave_permutation(n, m).
inline StabilizerCode interleaved_code(const StabilizerCode& code, std::size_t m) {
  if (m == 0) throw std::invalid_argument("interleaved_code: degree must be positive");
  const std::size_t total = code.n * m;
  const Permutation perm = interleave_permutation(code.n, m);
  StabilizerCode out;
  out.name = m == 1 ? code.name : code.name + "^" + std::to_string(m);
  out.n = total;
  out.k = code.k * m;
  out.burst_ability = code.burst_ability * m;
  out.burst_kind = code.burst_kind;
  const auto spread = [&](const std::vector<PauliString>& ops, std::vector<PauliString>& dest) {
    for (std::size_t block = 0; block < m; ++block) {
      for (const PauliString& p : ops) dest.push_back(permute_pauli(embed(p, block * code.n, total), perm));
    }
  };
  spread(code.generators, out.generators);
  spread(code.logical_xs, out.logical_xs);
  spread(code.logical_zs, out.logical_zs);
  return out;
}

struct CorrectabilityResult {
  bool correctable = true;
  /// On failure, an offending pair (E_a, E_b) with E_a < E_b: E_a is the
  /// smallest error in its syndrome bucket. The smallest such pair is chosen.
  std::optional<std::pair<PauliString, PauliString>> witness;

  explicit operator bool() const { return correctable; }
};

/// Knill-Laflamme check over `errors` ∪ {I}: every pair must either have
/// different syndromes or differ by an element of the stabilizer group.
/// Errors are bucketed by syndrome; since "differs by a stabilizer" is an
/// equivalence relation, each bucket is checked against its smallest member.
inline CorrectabilityResult corrects_error_set(const StabilizerCode& code, const std::vector<PauliString>& errors) {
  SymplecticBasis stabilizers(code.n);
  for (const PauliString& g : code.generators) stabilizers.insert(g);

  std::vector<PauliString> sorted = errors;
  sorted.push_back(PauliString::identity(code.n));
  for (const PauliString& e : sorted) {
    if (e.size() != code.n) throw std::invalid_argument("corrects_error_set: error length mismatch");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::map<BinaryVector, std::size_t> representative;
  CorrectabilityResult result;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto [it, inserted] = representative.emplace(pauli_syndrome(code, sorted[i]), i);
    if (inserted) continue;
    const PauliString& rep = sorted[it->second];
    if (stabilizers.contains(rep * sorted[i])) continue;
    std::pair<PauliString, PauliString> pair{rep, sorted[i]};
    if (!result.witness || pair < *result.witness) result.witness = pair;
    result.correctable = false;
  }
  return result;
}

/// Largest l such that every `kind` burst of length ≤ l is correctable;
/// 0 if l = 1 already fails.
inline std::size_t burst_ability_measured(const StabilizerCode& code, BurstKind kind) {
  for (std::size_t l = 1; l <= code.n; ++l) {
    if (!corrects_error_set(code, enumerate_bursts(code.n, l, kind))) return l - 1;
  }
  return code.n;
}

/// Text block: a header line, then one "S", "LX" or "LZ" line per operator.
inline std::string serialize_code(const StabilizerCode& code) {
  std::ostringstream out;
  out << "code " << code.name << " [[" << code.n << ',' << code.k << "]] burst_ability "
      << code.burst_ability << ' ' << to_string(code.burst_kind) << '\n';
  for (const PauliString& g : code.generators) out << "S " << g.str() << '\n';
  for (const PauliString& l : code.logical_xs) out << "LX " << l.str() << '\n';
  for (const PauliString& l : code.logical_zs) out << "LZ " << l.str() << '\n';
  return out.str();
}

inline StabilizerCode code_by_name(const std::string& name) {
  if (name == "phase3") return phase3_code();
  if (name == "five") return five_qubit_code();
  throw std::invalid_argument("unknown code '" + name + "' (expected phase3 or five)");
}

}  // namespace qinterleave
