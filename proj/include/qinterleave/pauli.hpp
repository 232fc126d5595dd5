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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qinterleave/permutation.hpp"

namespace qinterleave {

/// Largest register a mask-based vector can describe.
inline constexpr std::size_t kMaxPositions = 64;

namespace detail {

inline std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline void check_length(std::size_t n, const char* what) {
  if (n < 1 || n > kMaxPositions) {
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(n) +
                                " outside [1, 64]");
  }
}

}  // namespace detail

/// A length-n vector over GF(2). Position i is bit i of `bits()`; in text
/// form position 0 is the leftmost character.
class BinaryVector {
 public:
  explicit BinaryVector(std::size_t n, std::uint64_t bits = 0) : n_(n), bits_(bits) {
    detail::check_length(n, "BinaryVector");
    if ((bits & ~detail::low_mask(n)) != 0) {
      throw std::invalid_argument("BinaryVector: bits set beyond length " + std::to_string(n));
    }
  }

  /// Parses a string over {0,1}, e.g. "111000000".
  static BinaryVector from_string(std::string_view text) {
    detail::check_length(text.size(), "BinaryVector");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        bits |= std::uint64_t{1} << i;
      } else if (text[i] != '0') {
        throw std::invalid_argument("BinaryVector: unexpected character '" +
                                    std::string(1, text[i]) + "'");
      }
    }
    return BinaryVector(text.size(), bits);
  }

  std::size_t size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](std::size_t i) const { return (bits_ >> i) & 1; }
  bool is_zero() const { return bits_ == 0; }

  std::string str() const {
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)[i]) out[i] = '1';
    }
    return out;
  }

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
  friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

 private:
  std::size_t n_;
  std::uint64_t bits_;
};

/// Span from the first to the last nonzero position; 0 for the zero vector.
inline std::size_t burst_length(std::uint64_t bits) {
  if (bits == 0) return 0;
  return static_cast<std::size_t>(63 - std::countl_zero(bits) - std::countr_zero(bits) + 1);
}

inline std::size_t burst_length(const BinaryVector& v) { return burst_length(v.bits()); }

/// Indices of the nonzero positions, ascending.
inline std::vector<std::size_t> support(const BinaryVector& v) {
  std::vector<std::size_t> out;
  for (std::uint64_t bits = v.bits(); bits != 0; bits &= bits - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
  }
  return out;
}

/// The operator X_α Z_β on n qubits, with global phase untracked. Qubit q
/// corresponds to bit q of both masks.
class PauliString {
 public:
  PauliString(const BinaryVector& x, const BinaryVector& z) : n_(x.size()), x_(x.bits()), z_(z.bits()) {
    if (x.size() != z.size()) {
      throw std::invalid_argument("PauliString: x and z masks have different lengths");
    }
  }

  PauliString(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits)
      : PauliString(BinaryVector(n, x_bits), BinaryVector(n, z_bits)) {}

  static PauliString identity(std::size_t n) { return PauliString(n, 0, 0); }

  /// A single-qubit operator ('X', 'Y' or 'Z') at `qubit`.
  static PauliString single(std::size_t n, std::size_t qubit, char op) {
    if (qubit >= n) throw std::out_of_range("PauliString::single: qubit out of range");
    std::string text(n, 'I');
    text[qubit] = op;
    return from_string(text);
  }

  /// Parses a string over {I,X,Y,Z}; '_' is accepted as I.
  static PauliString from_string(std::string_view text) {
    detail::check_length(text.size(), "PauliString");
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      switch (text[i]) {
        case 'I':
        case '_':
          break;
        case 'X':
          x |= bit;
          break;
        case 'Z':
          z |= bit;
          break;
        case 'Y':
          x |= bit;
          z |= bit;
          break;
        default:
          throw std::invalid_argument("PauliString: unexpected character '" +
                                      std::string(1, text[i]) + "'");
      }
    }
    return PauliString(text.size(), x, z);
  }

  std::size_t size() const { return n_; }
  BinaryVector x_mask() const { return BinaryVector(n_, x_); }
  BinaryVector z_mask() const { return BinaryVector(n_, z_); }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  std::string str() const {
    std::string out(n_, 'I');
    for (std::size_t i = 0; i < n_; ++i) {
      const bool x = (x_ >> i) & 1;
      const bool z = (z_ >> i) & 1;
      out[i] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
  }

  /// Ordered by (size, x mask, z mask) as unsigned integers.
  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_;
  std::uint64_t x_;
  std::uint64_t z_;
};

/// |supp(α) ∪ supp(β)|.
inline std::size_t pauli_weight(const PauliString& p) {
  return static_cast<std::size_t>(std::popcount(p.x_bits() | p.z_bits()));
}

/// True iff both the X part and the Z part are bursts of length ≤ l. The two
/// windows need not coincide.
inline bool is_quantum_burst(const PauliString& p, std::size_t l) {
  return burst_length(p.x_bits()) <= l && burst_length(p.z_bits()) <= l;
}

/// 0 if p and q commute, 1 if they anticommute.
inline int symplectic_product(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) throw std::invalid_argument("symplectic_product: length mismatch");
  return std::popcount((p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits())) & 1;
}

/// Product p·q at the mask level (phase discarded).
inline PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) throw std::invalid_argument("multiply: length mismatch");
  return PauliString(p.size(), p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits());
}

inline PauliString operator*(const PauliString& p, const PauliString& q) { return multiply(p, q); }

/// Moves bit i to position perm(i).
inline std::uint64_t permute_bits(std::uint64_t bits, const Permutation& perm) {
  std::uint64_t out = 0;
  for (; bits != 0; bits &= bits - 1) {
    out |= std::uint64_t{1} << perm(static_cast<std::size_t>(std::countr_zero(bits)));
  }
  return out;
}

/// Relabels qubits: the operator on qubit i moves to qubit perm(i).
inline PauliString permute_pauli(const PauliString& p, const Permutation& perm) {
  if (perm.size() != p.size()) throw std::invalid_argument("permute_pauli: size mismatch");
  return PauliString(p.size(), permute_bits(p.x_bits(), perm), permute_bits(p.z_bits(), perm));
}

/// Places `p` at qubits [offset, offset + p.size()) of a `total`-qubit register.
inline PauliString embed(const PauliString& p, std::size_t offset, std::size_t total) {
  if (offset + p.size() > total) throw std::invalid_argument("embed: block exceeds register");
  return PauliString(total, p.x_bits() << offset, p.z_bits() << offset);
}

/// Restriction of `p` to qubits [offset, offset + width).
inline PauliString restrict_to(const PauliString& p, std::size_t offset, std::size_t width) {
  if (offset + width > p.size()) throw std::invalid_argument("restrict_to: block exceeds register");
  const std::uint64_t mask = detail::low_mask(width);
  return PauliString(width, (p.x_bits() >> offset) & mask, (p.z_bits() >> offset) & mask);
}

// Burst models.
//   bit:         X-only bursts
//   phase:       Z-only bursts
//   colocated:   the whole support fits one window of span ≤ l, each position
//                in that window carries I, X, Z or Y
//   independent: X part and Z part are each a (possibly empty) burst ≤ l
enum class BurstKind { bit, phase, colocated, independent };

inline std::string to_string(BurstKind kind) {
  switch (kind) {
    case BurstKind::bit:
      return "bit";
    case BurstKind::phase:
      return "phase";
    case BurstKind::colocated:
      return "colocated";
    case BurstKind::independent:
      return "independent";
  }
  return "?";
}

inline BurstKind parse_burst_kind(std::string_view name) {
  if (name == "bit") return BurstKind::bit;
  if (name == "phase") return BurstKind::phase;
  if (name == "colocated") return BurstKind::colocated;
  if (name == "independent") return BurstKind::independent;
  throw std::invalid_argument("unknown burst kind '" + std::string(name) + "'");
}

namespace detail {

inline void check_burst_range(std::size_t n, std::size_t l) {
  detail::check_length(n, "burst register");
  if (l < 1 || l > n) {
    throw std::invalid_argument("burst length " + std::to_string(l) + " outside [1, " +
                                std::to_string(n) + "]");
  }
}

// All nonzero masks of burst length ≤ l, ordered by (start, length, interior).
inline std::vector<std::uint64_t> burst_masks(std::size_t n, std::size_t l) {
  std::vector<std::uint64_t> out;
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t len = 1; len <= l && start + len <= n; ++len) {
      const std::uint64_t ends = (std::uint64_t{1} << start) | (std::uint64_t{1} << (start + len - 1));
      const std::uint64_t interiors = len > 2 ? std::uint64_t{1} << (len - 2) : 1;
      for (std::uint64_t interior = 0; interior < interiors; ++interior) {
        out.push_back(ends | (interior << (start + 1)));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Every non-identity Pauli string on n qubits matching `kind` with burst
/// length ≤ l, without duplicates. Throws std::invalid_argument unless
/// 1 ≤ l ≤ n ≤ 64.
inline std::vector<PauliString> enumerate_bursts(std::size_t n, std::size_t l, BurstKind kind) {
  detail::check_burst_range(n, l);
  std::vector<PauliString> out;
  switch (kind) {
    case BurstKind::bit:
      for (std::uint64_t m : detail::burst_masks(n, l)) out.emplace_back(n, m, 0);
      break;
    case BurstKind::phase:
      for (std::uint64_t m : detail::burst_masks(n, l)) out.emplace_back(n, 0, m);
      break;
    case BurstKind::colocated:
      // Two bits per window position: 0=I, 1=X, 2=Z, 3=Y. Endpoints are non-identity.
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t len = 1; len <= l && start + len <= n; ++len) {
          const std::uint64_t patterns = std::uint64_t{1} << (2 * len);
          for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
            if ((pattern & 3) == 0 || ((pattern >> (2 * (len - 1))) & 3) == 0) continue;
            std::uint64_t x = 0;
            std::uint64_t z = 0;
            for (std::size_t j = 0; j < len; ++j) {
              const std::uint64_t op = (pattern >> (2 * j)) & 3;
              if (op & 1) x |= std::uint64_t{1} << (start + j);
              if (op & 2) z |= std::uint64_t{1} << (start + j);
            }
            out.emplace_back(n, x, z);
          }
        }
      }
      break;
    case BurstKind::independent: {
      std::vector<std::uint64_t> masks = detail::burst_masks(n, l);
      masks.insert(masks.begin(), 0);
      for (std::uint64_t x : masks) {
        for (std::uint64_t z : masks) {
          if (x != 0 || z != 0) out.emplace_back(n, x, z);
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace qinterleave
