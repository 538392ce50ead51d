/* Copyright 2026 The ghzx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. */

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghzx {

// Fixed-length vector over GF(2), packed into 64-bit words. Addition is
// bitwise XOR. Bits past `size()` in the last word are kept zero so that
// whole-word comparisons and popcounts are valid.
class BitVector {
 public:
  BitVector() = default;

  explicit BitVector(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

  static BitVector unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index, true);
    return v;
  }

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void set(std::size_t i, bool value) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) {
    check_index(i);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  bool is_zero() const {
    for (std::uint64_t w : words_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  // Index of the lowest set bit, or -1 when zero.
  int first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) {
        return static_cast<int>(64 * k + std::countr_zero(words_[k]));
      }
    }
    return -1;
  }

  std::size_t popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
      total += std::popcount(w);
    }
    return total;
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_length(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] ^= other.words_[k];
    }
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVector& other) const = default;

  // GF(2) inner product: parity of the AND.
  static bool dot(const BitVector& a, const BitVector& b) {
    a.check_same_length(b);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      acc ^= a.words_[k] & b.words_[k];
    }
    return std::popcount(acc) & 1;
  }

  // Gather the bits at `indices` (in order) into a new vector.
  BitVector gather(const std::vector<std::size_t>& indices) const {
    BitVector out(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (get(indices[k])) {
        out.set(k, true);
      }
    }
    return out;
  }

  // Scatter this vector's bits into a longer vector at `indices`.
  void scatter_into(BitVector& target, const std::vector<std::size_t>& indices) const {
    if (indices.size() != len_) {
      throw std::invalid_argument("scatter_into: index count mismatch");
    }
    for (std::size_t k = 0; k < len_; ++k) {
      target.set(indices[k], get(k));
    }
  }

  std::string str() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i) {
      s.push_back(get(i) ? '1' : '0');
    }
    return s;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= len_) {
      throw std::out_of_range("BitVector index " + std::to_string(i) + " out of range " +
                              std::to_string(len_));
    }
  }

  void check_same_length(const BitVector& other) const {
    if (len_ != other.len_) {
      throw std::invalid_argument("BitVector length mismatch: " + std::to_string(len_) + " vs " +
                                  std::to_string(other.len_));
    }
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

using BitMatrix = std::vector<BitVector>;

}  // namespace ghzx
