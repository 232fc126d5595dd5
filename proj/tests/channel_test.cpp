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


#include "qinterleave/channel.hpp"

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "qinterleave/pipeline.hpp"

using namespace qinterleave;

TEST(branch_set, invariants) {
  EXPECT_THROW(BranchSet({}), std::invalid_argument);
  const PauliString z = PauliString::from_string("ZI");
  EXPECT_THROW(BranchSet({{z, "", 1.0}}), std::invalid_argument);
  EXPECT_THROW(BranchSet({{z, "e", 1.0}, {z, "e", 1.0}}), std::invalid_argument);
  EXPECT_NO_THROW(BranchSet({{z, "e1", 1.0}, {z, "e2", 1.0}}));
}

TEST(parse_branch_set, comma_separated_paulis) {
  const BranchSet bs = parse_branch_set("ZZZIIIIII,IIIIIZZZI");
  ASSERT_EQ(bs.size(), 2u);
  EXPECT_EQ(bs.branches()[0].label, "e_111000000");
  EXPECT_EQ(bs.branches()[1].label, "e_000001110");
  EXPECT_EQ(bs.branches()[1].pauli.str(), "IIIIIZZZI");
  EXPECT_EQ(parse_branch_set("XYI").branches()[0].label, "e_XYI");
  EXPECT_EQ(parse_branch_set("XXI").branches()[0].label, "e_110");
  EXPECT_THROW(parse_branch_set("ZZ,ZZ"), std::invalid_argument);
  EXPECT_THROW(parse_branch_set("ZZ,"), std::invalid_argument);
}

TEST(apply_branches, two_burst_example) {
  const InterleavedPipeline pipeline(phase3_code(), default_logical_amplitudes(3));
  const auto out = apply_branches(parse_branch_set("ZZZIIIIII,IIIIIZZZI"), pipeline.interleaved());
  ASSERT_EQ(out.size(), 2u);
  // Branch 1: Z on symbol 0 of every block. Branch 2: slots 5, 6, 7 hold
  // symbol 1 of block 2, symbol 2 of block 0 and symbol 2 of block 1.
  const std::vector<std::string> per_block = {"ZIIZIIZII", "IIZIIZIZI"};
  for (std::size_t b = 0; b < 2; ++b) {
    const StateVector received = apply_qubit_permutation(out[b].second, pipeline.deinterleaver());
    const StateVector expected = apply_pauli(pipeline.input(), PauliString::from_string(per_block[b]));
    EXPECT_NEAR(fidelity(received, expected), 1.0, 1e-12);
    double norm2 = 0;
    for (const auto& a : out[b].second.amplitudes()) norm2 += std::norm(a);
    EXPECT_NEAR(norm2, 1.0, 1e-10);
  }
  EXPECT_EQ(out[0].first.label, "e_111000000");
}

TEST(apply_branches, identity_branch_and_size_mismatch) {
  const StateVector s = encode_phase3(0.6, 0.8);
  const auto out = apply_branches(parse_branch_set("III"), s);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(fidelity(out[0].second, s), 1.0, 1e-15);
  EXPECT_THROW(apply_branches(parse_branch_set("II"), s), std::invalid_argument);
}

TEST(apply_branches, every_short_burst_branch_is_corrected) {
  const InterleavedPipeline pipeline(phase3_code(), default_logical_amplitudes(3));
  std::vector<ErrorBranch> branches;
  for (const auto& p : enumerate_bursts(9, 3, BurstKind::phase)) branches.push_back({p, environment_label(p), 1.0});
  const auto out = apply_branches(BranchSet(branches), pipeline.interleaved());
  ASSERT_EQ(out.size(), 31u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    ASSERT_EQ(out[i].first.label, branches[i].label);
    const StateVector received = apply_qubit_permutation(out[i].second, pipeline.deinterleaver());
    ASSERT_TRUE(pipeline.decode(out[i].first.pauli, received).recovered()) << out[i].first.pauli.str();
  }
}

TEST(sample_burst, contract_and_determinism) {
  for (BurstKind kind : {BurstKind::bit, BurstKind::phase, BurstKind::colocated, BurstKind::independent}) {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
      const std::size_t n = 1 + seed % 20;
      const std::size_t l = 1 + (seed / 20) % n;
      const PauliString p = sample_burst(seed, n, l, kind);
      ASSERT_TRUE(is_quantum_burst(p, l));
      ASSERT_FALSE(p.is_identity());
      ASSERT_EQ(p, sample_burst(seed, n, l, kind));
      if (kind == BurstKind::phase) {
        ASSERT_EQ(p.x_bits(), 0u);
      }
      if (kind == BurstKind::bit) {
        ASSERT_EQ(p.z_bits(), 0u);
      }
      if (kind == BurstKind::colocated) {
        ASSERT_LE(burst_length(p.x_bits() | p.z_bits()), l);
      }
    }
  }
  EXPECT_THROW(sample_burst(1, 4, 5, BurstKind::phase), std::invalid_argument);
  EXPECT_THROW(sample_burst(1, 4, 0, BurstKind::phase), std::invalid_argument);
}

TEST(sample_burst, covers_every_phase_burst) {
  const auto all = enumerate_bursts(9, 3, BurstKind::phase);
  std::map<PauliString, int> histogram;
  for (std::uint64_t seed = 0; seed < 100000; ++seed) ++histogram[sample_burst(seed, 9, 3, BurstKind::phase)];
  EXPECT_EQ(histogram.size(), all.size());
  for (const auto& p : all) EXPECT_GT(histogram[p], 0) << p.str();
}

TEST(sample_burst, covers_every_colocated_burst) {
  const auto all = enumerate_bursts(4, 2, BurstKind::colocated);
  std::set<PauliString> seen;
  for (std::uint64_t seed = 0; seed < 20000; ++seed) seen.insert(sample_burst(seed, 4, 2, BurstKind::colocated));
  EXPECT_EQ(seen, std::set<PauliString>(all.begin(), all.end()));
}
