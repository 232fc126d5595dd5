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
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qinterleave {

/// A bijection on positions {0, ..., N-1}, stored as images: `images()[i]`
/// is where position i is sent. Permutations act by push-forward: the
/// content of slot i ends up in slot `(*this)(i)`.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection on [0, N).
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t image : images_) {
      if (image >= images_.size() || seen[image]) {
        throw std::invalid_argument("permutation: images are not a bijection on [0, " +
                                    std::to_string(images_.size()) + ")");
      }
      seen[image] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  /// Composition `after ∘ before`: first apply `before`, then `after`.
  friend Permutation compose(const Permutation& after, const Permutation& before) {
    if (after.size() != before.size()) {
      throw std::invalid_argument("permutation compose: size mismatch");
    }
    std::vector<std::size_t> images(before.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = after.images_[before.images_[i]];
    return Permutation(std::move(images));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace qinterleave
