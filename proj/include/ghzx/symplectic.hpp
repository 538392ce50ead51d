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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ghzx/errors.hpp"
#include "ghzx/gf2.hpp"
#include "ghzx/pauli.hpp"

namespace ghzx {

// Dual of a subspace of Pauli coordinates with respect to omega. The ambient
// length must be 2n (flattened x|z layout).
inline BinarySubspace dual_subspace(const BinarySubspace& s) {
  if (s.ambient() % 2 != 0) {
    throw std::invalid_argument("dual_subspace: ambient length must be even");
  }
  const std::size_t n = s.ambient() / 2;
  // omega(f, g) = dot(f, J g) with J swapping the x and z blocks, so the dual
  // is the right null space of the J-swapped basis rows.
  BitMatrix swapped;
  swapped.reserve(s.dim());
  for (const BitVector& row : s.basis()) {
    BitVector j(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      if (row.get(q)) {
        j.set(n + q, true);
      }
      if (row.get(n + q)) {
        j.set(q, true);
      }
    }
    swapped.push_back(std::move(j));
  }
  return gf2_nullspace(2 * n, swapped);
}

inline bool is_isotropic(const BinarySubspace& s) {
  const BitMatrix& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (omega_flat(b[i], b[j])) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_self_dual(const BinarySubspace& s) {
  return s.ambient() % 2 == 0 && s.dim() == s.ambient() / 2 && is_isotropic(s);
}

// Basis e_1..e_n, ebar_1..ebar_n with omega(e_j, e_k) = omega(ebar_j, ebar_k)
// = 0 and omega(e_j, ebar_k) = delta_jk.
struct CanonicalBasis {
  std::vector<PauliVector> e, ebar;

  std::size_t num_qubits() const { return e.size(); }

  bool relations_hold() const {
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (omega(e[j], e[k]) != 0 || omega(ebar[j], ebar[k]) != 0 ||
            omega(e[j], ebar[k]) != (j == k ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }
};

struct GramSchmidtResult {
  CanonicalBasis basis;
  // p x n coordinate matrices: input[j] = sum_k F[j][k] e_k + Fbar[j][k] ebar_k.
  BitMatrix f_coords;
  BitMatrix fbar_coords;
};

namespace detail {

// Incremental canonical-basis builder. Completed hyperbolic pairs live in
// (e, ebar); `iso` holds vectors that are omega-orthogonal to everything
// accepted so far and mutually independent.
class CanonicalBuilder {
 public:
  explicit CanonicalBuilder(std::size_t n) : n_(n) {}

  PauliVector strip(PauliVector v) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      const int ce = omega(v, ebar_[i]);
      const int cbar = omega(v, e_[i]);
      if (ce) {
        v ^= e_[i];
      }
      if (cbar) {
        v ^= ebar_[i];
      }
    }
    return v;
  }

  bool in_iso_span(const PauliVector& v) const {
    BitMatrix rows = flatten_all(iso_);
    rows.push_back(v.flatten());
    return gf2_rank(rows) == iso_.size();
  }

  // Feed one vector; pairs it, queues it, or drops it as dependent.
  void process(const PauliVector& input) {
    PauliVector v = strip(input);
    std::vector<int> c(iso_.size());
    int first = -1;
    for (std::size_t j = 0; j < iso_.size(); ++j) {
      c[j] = omega(v, iso_[j]);
      if (c[j] && first < 0) {
        first = static_cast<int>(j);
      }
    }
    if (first < 0) {
      if (!in_iso_span(v)) {
        iso_.push_back(v);
      }
      return;
    }
    PauliVector partner = iso_[static_cast<std::size_t>(first)];
    iso_.erase(iso_.begin() + first);
    c.erase(c.begin() + first);
    for (std::size_t j = 0; j < iso_.size(); ++j) {
      if (c[j]) {
        iso_[j] ^= partner;
      }
    }
    e_.push_back(partner);
    ebar_.push_back(v);
  }

  // Pair off the queued isotropic vectors, oldest first, against the lowest
  // available standard-basis candidate.
  void complete() {
    while (!iso_.empty()) {
      PauliVector u = iso_.front();
      iso_.erase(iso_.begin());
      bool paired = false;
      for (std::size_t cand = 0; cand < 2 * n_ && !paired; ++cand) {
        PauliVector w = strip(standard_vector(cand));
        if (omega(u, w) == 1) {
          for (PauliVector& other : iso_) {
            if (omega(w, other)) {
              other ^= u;
            }
          }
          e_.push_back(u);
          ebar_.push_back(w);
          paired = true;
        }
      }
      internal_check(paired, "canonical completion found no symplectic partner");
    }
    for (std::size_t cand = 0; cand < 2 * n_ && e_.size() < n_; ++cand) {
      process(standard_vector(cand));
    }
    internal_check(e_.size() == n_ && iso_.empty(), "canonical basis has wrong size");
  }

  CanonicalBasis take_basis() { return CanonicalBasis{std::move(e_), std::move(ebar_)}; }

 private:
  PauliVector standard_vector(std::size_t index) const {
    // X_0 .. X_{n-1}, then Z_0 .. Z_{n-1}.
    PauliVector v(n_);
    if (index < n_) {
      v.x.set(index, true);
    } else {
      v.z.set(index - n_, true);
    }
    return v;
  }

  std::size_t n_;
  std::vector<PauliVector> e_, ebar_;
  std::vector<PauliVector> iso_;
};

}  // namespace detail

// Extends a family of vectors (dependencies allowed, any count) to a
// canonical basis and returns each input's coordinates in that basis. The
// coordinate matrices depend only on the pairwise omega values and the
// dependency pattern of the input, which is what makes two isometric
// families comparable.
inline GramSchmidtResult symplectic_gram_schmidt(std::size_t n,
                                                 const std::vector<PauliVector>& family) {
  for (const PauliVector& f : family) {
    if (f.num_qubits() != n) {
      throw std::invalid_argument("symplectic_gram_schmidt: vector length mismatch");
    }
  }
  detail::CanonicalBuilder builder(n);
  for (const PauliVector& f : family) {
    builder.process(f);
  }
  builder.complete();

  GramSchmidtResult out;
  out.basis = builder.take_basis();
  out.f_coords.reserve(family.size());
  out.fbar_coords.reserve(family.size());
  for (const PauliVector& f : family) {
    BitVector fc(n), fbc(n);
    for (std::size_t k = 0; k < n; ++k) {
      fc.set(k, omega(f, out.basis.ebar[k]) != 0);
      fbc.set(k, omega(f, out.basis.e[k]) != 0);
    }
    out.f_coords.push_back(std::move(fc));
    out.fbar_coords.push_back(std::move(fbc));
  }
  return out;
}

// Invertible linear map on Pauli coordinates preserving omega, stored as a
// dense 2n x 2n bit matrix acting on flattened [x|z] column vectors.
class SymplecticMap {
 public:
  SymplecticMap() = default;

  static SymplecticMap identity(std::size_t n) {
    SymplecticMap m;
    m.n_ = n;
    m.rows_.reserve(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      m.rows_.push_back(BitVector::unit(2 * n, i));
    }
    return m;
  }

  // Build from the images of the 2n standard basis vectors (as columns).
  static SymplecticMap from_basis_images(std::size_t n, const BitMatrix& images) {
    if (images.size() != 2 * n) {
      throw std::invalid_argument("from_basis_images: need 2n images");
    }
    SymplecticMap m;
    m.n_ = n;
    m.rows_ = gf2_transpose(2 * n, images);
    return m;
  }

  std::size_t num_qubits() const { return n_; }
  const BitMatrix& rows() const { return rows_; }

  BitVector apply(const BitVector& v) const {
    if (v.size() != 2 * n_) {
      throw std::invalid_argument("SymplecticMap: vector length mismatch");
    }
    BitVector out(2 * n_);
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      out.set(i, BitVector::dot(rows_[i], v));
    }
    return out;
  }

  PauliVector apply(const PauliVector& p) const {
    return PauliVector::unflatten(apply(p.flatten()));
  }

  // this after other: (a.then_after(b))(v) = a(b(v)).
  SymplecticMap compose_after(const SymplecticMap& inner) const {
    if (n_ != inner.n_) {
      throw std::invalid_argument("compose: size mismatch");
    }
    SymplecticMap m;
    m.n_ = n_;
    m.rows_ = gf2_mat_mul(rows_, inner.rows_);
    return m;
  }

  SymplecticMap inverse() const {
    auto inv = gf2_invert(rows_);
    internal_check(inv.has_value(), "symplectic map not invertible");
    SymplecticMap m;
    m.n_ = n_;
    m.rows_ = std::move(*inv);
    return m;
  }

  BitVector column(std::size_t j) const {
    BitVector col(2 * n_);
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      col.set(i, rows_[i].get(j));
    }
    return col;
  }

  // omega(u(a), u(b)) == omega(a, b) checked on all standard basis pairs.
  bool preserves_omega() const {
    BitMatrix cols;
    cols.reserve(2 * n_);
    for (std::size_t j = 0; j < 2 * n_; ++j) {
      cols.push_back(column(j));
    }
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      for (std::size_t j = i + 1; j < 2 * n_; ++j) {
        const int expect = (j == i + n_ || i == j + n_) ? 1 : 0;
        if (omega_flat(cols[i], cols[j]) != expect) {
          return false;
        }
      }
    }
    return true;
  }

  bool operator==(const SymplecticMap& other) const = default;

 private:
  std::size_t n_ = 0;
  BitMatrix rows_;
};

// The symplectic operator u with u(from[j]) == to[j] for every j, built by
// running the Gram-Schmidt extension on both families in parallel. Requires
// the families to agree on pairwise omega values and linear dependencies.
inline SymplecticMap map_between_families(std::size_t n, const std::vector<PauliVector>& from,
                                          const std::vector<PauliVector>& to) {
  if (from.size() != to.size()) {
    throw std::invalid_argument("map_between_families: family sizes differ");
  }
  const std::size_t p = from.size();
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = j; k < p; ++k) {
      if (omega(from[j], from[k]) != omega(to[j], to[k])) {
        throw InnerProductMismatch(j, k);
      }
    }
  }
  BinarySubspace deps_from = gf2_kernel(flatten_all(from));
  BinarySubspace deps_to = gf2_kernel(flatten_all(to));
  if (deps_from != deps_to) {
    for (const BitVector& w : deps_from.basis()) {
      if (!deps_to.contains(w)) {
        throw DependencyMismatch(w.str());
      }
    }
    for (const BitVector& w : deps_to.basis()) {
      if (!deps_from.contains(w)) {
        throw DependencyMismatch(w.str());
      }
    }
  }

  GramSchmidtResult a = symplectic_gram_schmidt(n, from);
  GramSchmidtResult b = symplectic_gram_schmidt(n, to);

  // u maps the first canonical basis onto the second: u = B_to * B_from^{-1}
  // with basis vectors as columns.
  BitMatrix cols_from, cols_to;
  for (std::size_t k = 0; k < n; ++k) {
    cols_from.push_back(a.basis.e[k].flatten());
    cols_to.push_back(b.basis.e[k].flatten());
  }
  for (std::size_t k = 0; k < n; ++k) {
    cols_from.push_back(a.basis.ebar[k].flatten());
    cols_to.push_back(b.basis.ebar[k].flatten());
  }
  BitMatrix b_from = gf2_transpose(2 * n, cols_from);
  BitMatrix b_to = gf2_transpose(2 * n, cols_to);
  auto b_from_inv = gf2_invert(b_from);
  internal_check(b_from_inv.has_value(), "canonical basis matrix not invertible");

  SymplecticMap u = SymplecticMap::from_basis_images(
      n, gf2_transpose(2 * n, gf2_mat_mul(b_to, *b_from_inv)));
  internal_check(u.preserves_omega(), "constructed family map is not symplectic");
  for (std::size_t j = 0; j < p; ++j) {
    internal_check(u.apply(from[j]) == to[j], "family map misses a prescribed image");
  }
  return u;
}

}  // namespace ghzx
