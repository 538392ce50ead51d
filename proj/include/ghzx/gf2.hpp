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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ghzx/bits.hpp"

namespace ghzx {

inline void check_uniform_length(const BitMatrix& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) {
      throw std::invalid_argument("rows have mismatched lengths");
    }
  }
}

// In-place reduced row echelon form. Pivot columns come out strictly
// increasing and each pivot column is cleared in every other row, so the
// nonzero rows are the unique canonical basis of the row span. Returns the
// pivot columns; zero rows are moved to the end but not removed.
inline std::vector<std::size_t> gf2_rref(BitMatrix& rows) {
  check_uniform_length(rows);
  std::vector<std::size_t> pivots;
  if (rows.empty()) {
    return pivots;
  }
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].get(c)) {
      ++sel;
    }
    if (sel == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) {
        rows[i] ^= rows[r];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t gf2_rank(BitMatrix rows) {
  return gf2_rref(rows).size();
}

namespace detail {

// Eliminates `rows` while tracking the row operations: on return, work[i] =
// sum_j tags[i][j] * rows[j]. Pivot rows come first, in pivot-column order.
struct TrackedElimination {
  BitMatrix work;
  BitMatrix tags;
  std::vector<std::size_t> pivots;
};

inline TrackedElimination gf2_eliminate_tracked(const BitMatrix& rows) {
  check_uniform_length(rows);
  TrackedElimination out;
  out.work = rows;
  const std::size_t p = rows.size();
  out.tags.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    out.tags.push_back(BitVector::unit(p, i));
  }
  if (p == 0) {
    return out;
  }
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < p; ++c) {
    std::size_t sel = r;
    while (sel < p && !out.work[sel].get(c)) {
      ++sel;
    }
    if (sel == p) {
      continue;
    }
    std::swap(out.work[r], out.work[sel]);
    std::swap(out.tags[r], out.tags[sel]);
    for (std::size_t i = 0; i < p; ++i) {
      if (i != r && out.work[i].get(c)) {
        out.work[i] ^= out.work[r];
        out.tags[i] ^= out.tags[r];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace detail

// A coefficient vector x with sum_i x_i rows[i] == target, if one exists.
inline std::optional<BitVector> gf2_solve(const BitMatrix& rows, const BitVector& target) {
  if (!rows.empty() && rows[0].size() != target.size()) {
    throw std::invalid_argument("solve: target length mismatch");
  }
  auto elim = detail::gf2_eliminate_tracked(rows);
  BitVector residue = target;
  BitVector combo(rows.size());
  for (std::size_t r = 0; r < elim.pivots.size(); ++r) {
    if (residue.get(elim.pivots[r])) {
      residue ^= elim.work[r];
      combo ^= elim.tags[r];
    }
  }
  if (!residue.is_zero()) {
    return std::nullopt;
  }
  return combo;
}

class BinarySubspace;

// Left kernel: all coefficient vectors x with sum_i x_i rows[i] == 0, i.e.
// the linear dependencies among the rows.
BinarySubspace gf2_kernel(const BitMatrix& rows);

// Right null space: all v with rows[i] . v == 0 for every i.
BinarySubspace gf2_nullspace(std::size_t ambient, const BitMatrix& rows);

// Some x with rows[i] . x == rhs_i for every i, if one exists.
inline std::optional<BitVector> gf2_solve_system(std::size_t ambient, const BitMatrix& rows,
                                                 const BitVector& rhs) {
  if (rows.size() != rhs.size()) {
    throw std::invalid_argument("solve_system: rhs length mismatch");
  }
  check_uniform_length(rows);
  // RREF on [rows | rhs], then read a particular solution off the pivots.
  BitMatrix aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BitVector row(ambient + 1);
    for (std::size_t c = 0; c < ambient; ++c) {
      row.set(c, rows[i].get(c));
    }
    row.set(ambient, rhs.get(i));
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = gf2_rref(aug);
  BitVector x(ambient);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == ambient) {
      return std::nullopt;  // row reduced to 0 = 1
    }
    x.set(pivots[r], aug[r].get(ambient));
  }
  return x;
}

inline BitMatrix gf2_transpose(std::size_t cols, const BitMatrix& rows) {
  check_uniform_length(rows);
  BitMatrix out(cols, BitVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[i].get(c)) {
        out[c].set(i, true);
      }
    }
  }
  return out;
}

// Row-major product: (a*b)[i] = sum_k a[i][k] b[k].
inline BitMatrix gf2_mat_mul(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out;
  out.reserve(a.size());
  const std::size_t inner = b.size();
  const std::size_t width = b.empty() ? 0 : b[0].size();
  for (const BitVector& row : a) {
    if (row.size() != inner) {
      throw std::invalid_argument("mat_mul: dimension mismatch");
    }
    BitVector acc(width);
    for (std::size_t k = 0; k < inner; ++k) {
      if (row.get(k)) {
        acc ^= b[k];
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

inline std::optional<BitMatrix> gf2_invert(const BitMatrix& m) {
  const std::size_t n = m.size();
  check_uniform_length(m);
  if (n != 0 && m[0].size() != n) {
    throw std::invalid_argument("invert: matrix not square");
  }
  BitMatrix work = m;
  BitMatrix inv;
  inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv.push_back(BitVector::unit(n, i));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && !work[sel].get(c)) {
      ++sel;
    }
    if (sel == n) {
      return std::nullopt;
    }
    std::swap(work[c], work[sel]);
    std::swap(inv[c], inv[sel]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != c && work[i].get(c)) {
        work[i] ^= work[c];
        inv[i] ^= inv[c];
      }
    }
  }
  return inv;
}

// A subspace of GF(2)^ambient held as its unique reduced-row-echelon basis,
// so equality of subspaces is plain row-by-row comparison.
class BinarySubspace {
 public:
  explicit BinarySubspace(std::size_t ambient) : ambient_(ambient) {}

  static BinarySubspace span(std::size_t ambient, BitMatrix vectors) {
    for (const BitVector& v : vectors) {
      if (v.size() != ambient) {
        throw std::invalid_argument("span: vector length differs from ambient");
      }
    }
    gf2_rref(vectors);
    while (!vectors.empty() && vectors.back().is_zero()) {
      vectors.pop_back();
    }
    BinarySubspace s(ambient);
    s.rows_ = std::move(vectors);
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const BitMatrix& basis() const { return rows_; }

  // Residue of v modulo the subspace; zero iff v is a member.
  BitVector reduce(BitVector v) const {
    if (v.size() != ambient_) {
      throw std::invalid_argument("reduce: length mismatch");
    }
    for (const BitVector& row : rows_) {
      int pivot = row.first_set();
      if (pivot >= 0 && v.get(static_cast<std::size_t>(pivot))) {
        v ^= row;
      }
    }
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

  bool operator==(const BinarySubspace& other) const = default;

  static BinarySubspace sum(const BinarySubspace& a, const BinarySubspace& b) {
    if (a.ambient_ != b.ambient_) {
      throw std::invalid_argument("sum: ambient mismatch");
    }
    BitMatrix all = a.rows_;
    all.insert(all.end(), b.rows_.begin(), b.rows_.end());
    return span(a.ambient_, std::move(all));
  }

  // Kernel-of-stacked-bases construction: a dependency sum_i x_i a_i +
  // sum_j y_j b_j = 0 yields the intersection element sum_i x_i a_i.
  static BinarySubspace intersection(const BinarySubspace& a, const BinarySubspace& b);

  // Greedy echelon completion: basis vectors of *this that are independent
  // of `sub`, forming a complement of `sub` inside *this. Requires sub to be
  // contained in *this.
  BitMatrix complement_of(const BinarySubspace& sub) const {
    BitMatrix acc = sub.rows_;
    BitMatrix result;
    for (const BitVector& row : rows_) {
      BitMatrix trial = acc;
      trial.push_back(row);
      if (gf2_rank(trial) > gf2_rank(acc)) {
        result.push_back(row);
        acc.push_back(row);
      }
    }
    return result;
  }

  // Every element, including zero. Only sensible for small dimensions.
  std::vector<BitVector> elements() const {
    if (dim() > 24) {
      throw std::invalid_argument("elements: dimension too large to enumerate");
    }
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << dim());
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim()); ++mask) {
      BitVector v(ambient_);
      for (std::size_t j = 0; j < dim(); ++j) {
        if ((mask >> j) & 1) {
          v ^= rows_[j];
        }
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t ambient_ = 0;
  BitMatrix rows_;
};

inline BinarySubspace gf2_kernel(const BitMatrix& rows) {
  auto elim = detail::gf2_eliminate_tracked(rows);
  BitMatrix combos;
  for (std::size_t i = elim.pivots.size(); i < rows.size(); ++i) {
    combos.push_back(elim.tags[i]);
  }
  return BinarySubspace::span(rows.size(), std::move(combos));
}

inline BinarySubspace gf2_nullspace(std::size_t ambient, const BitMatrix& rows) {
  check_uniform_length(rows);
  if (!rows.empty() && rows[0].size() != ambient) {
    throw std::invalid_argument("nullspace: ambient mismatch");
  }
  BitMatrix work = rows;
  std::vector<std::size_t> pivots = gf2_rref(work);
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t c : pivots) {
    is_pivot[c] = true;
  }
  BitMatrix basis;
  for (std::size_t f = 0; f < ambient; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    BitVector v(ambient);
    v.set(f, true);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (work[r].get(f)) {
        v.set(pivots[r], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return BinarySubspace::span(ambient, std::move(basis));
}

inline BinarySubspace BinarySubspace::intersection(const BinarySubspace& a,
                                                   const BinarySubspace& b) {
  if (a.ambient_ != b.ambient_) {
    throw std::invalid_argument("intersection: ambient mismatch");
  }
  BitMatrix stacked = a.rows_;
  stacked.insert(stacked.end(), b.rows_.begin(), b.rows_.end());
  BinarySubspace deps = gf2_kernel(stacked);
  BitMatrix members;
  for (const BitVector& x : deps.basis()) {
    BitVector v(a.ambient_);
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
      if (x.get(i)) {
        v ^= a.rows_[i];
      }
    }
    members.push_back(std::move(v));
  }
  return span(a.ambient_, std::move(members));
}

}  // namespace ghzx
