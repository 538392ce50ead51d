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
#include <vector>

#include "ghzx/errors.hpp"
#include "ghzx/symplectic.hpp"
#include "ghzx/tableau.hpp"

namespace ghzx {

// The symplectic map induced by conjugating coordinates through a circuit
// (sign-blind).
inline SymplecticMap induced_map(const CliffordCircuit& c, std::size_t n) {
  if (c.qubit_span() > n) {
    throw std::out_of_range("induced_map: circuit touches qubits outside the register");
  }
  BitMatrix images;
  images.reserve(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    PauliVector v(n);
    if (i < n) {
      v.x.set(i, true);
    } else {
      v.z.set(i - n, true);
    }
    for (const Gate& g : c.gates) {
      g.apply_to_coords(v);
    }
    images.push_back(v.flatten());
  }
  return SymplecticMap::from_basis_images(n, images);
}

namespace detail {

// Gates whose coordinate action is applied to a working set of vectors
// during elimination. All six elementary gates are involutions at the
// symplectic level, so the recorded list inverts by reversal alone.
struct SynthesisState {
  std::vector<PauliVector> x_rows, z_rows;  // images of X_q / Z_q
  std::vector<Gate> applied;

  void apply(Gate g) {
    for (PauliVector& v : x_rows) {
      g.apply_to_coords(v);
    }
    for (PauliVector& v : z_rows) {
      g.apply_to_coords(v);
    }
    applied.push_back(g);
  }

  void h(std::size_t q) { apply({GateKind::H, q, 0}); }
  void p(std::size_t q) { apply({GateKind::P, q, 0}); }
  void cnot(std::size_t c, std::size_t t) { apply({GateKind::CNOT, c, t}); }
  void swap_qubits(std::size_t a, std::size_t b) {
    cnot(a, b);
    cnot(b, a);
    cnot(a, b);
  }
  // Controlled-Z as H-conjugated CNOT.
  void cz(std::size_t a, std::size_t b) {
    h(b);
    cnot(a, b);
    h(b);
  }
};

}  // namespace detail

// Turn a symplectic map into an H/P/CNOT circuit whose induced map equals it
// exactly, by Gaussian elimination on the images of the standard basis. Gate
// count is O(n^2).
inline CliffordCircuit synthesize_circuit(const SymplecticMap& u) {
  if (!u.preserves_omega()) {
    throw NotSymplectic();
  }
  const std::size_t n = u.num_qubits();
  detail::SynthesisState st;
  for (std::size_t q = 0; q < n; ++q) {
    st.x_rows.push_back(PauliVector::unflatten(u.column(q)));
  }
  for (std::size_t q = 0; q < n; ++q) {
    st.z_rows.push_back(PauliVector::unflatten(u.column(n + q)));
  }

  for (std::size_t q = 0; q < n; ++q) {
    // Bring the image of X_q to X_q. First make sure some x bit at >= q is
    // set, hitting a z-only column with H if needed.
    {
      PauliVector& row = st.x_rows[q];
      int xj = -1, zj = -1;
      for (std::size_t k = q; k < n; ++k) {
        if (xj < 0 && row.x.get(k)) {
          xj = static_cast<int>(k);
        }
        if (zj < 0 && row.z.get(k)) {
          zj = static_cast<int>(k);
        }
      }
      internal_check(xj >= 0 || zj >= 0, "synthesis: image row vanished");
      if (xj < 0) {
        st.h(static_cast<std::size_t>(zj));
        xj = zj;
      }
      const std::size_t lead = static_cast<std::size_t>(xj);
      for (std::size_t k = lead + 1; k < n; ++k) {
        if (st.x_rows[q].x.get(k)) {
          st.cnot(lead, k);
        }
      }
      if (lead != q) {
        st.swap_qubits(lead, q);
      }
      if (st.x_rows[q].z.get(q)) {
        st.p(q);
      }
      for (std::size_t k = q + 1; k < n; ++k) {
        if (st.x_rows[q].z.get(k)) {
          st.cz(q, k);
        }
      }
      internal_check(st.x_rows[q] == PauliVector::single(n, q, 'X'),
                     "synthesis: X image not reduced");
    }
    // Now reduce the image of Z_q to Z_q without disturbing X_q.
    {
      internal_check(st.z_rows[q].z.get(q), "synthesis: Z image lost its pivot");
      for (std::size_t k = q + 1; k < n; ++k) {
        const bool xb = st.z_rows[q].x.get(k), zb = st.z_rows[q].z.get(k);
        if (xb && zb) {
          st.p(k);
        }
        if (st.z_rows[q].x.get(k)) {
          st.h(k);
        }
      }
      if (st.z_rows[q].x.get(q)) {
        // Y at the pivot: swap Y and Z there while fixing X.
        st.h(q);
        st.p(q);
        st.h(q);
      }
      for (std::size_t k = q + 1; k < n; ++k) {
        if (st.z_rows[q].z.get(k)) {
          st.cnot(k, q);
        }
      }
      internal_check(st.z_rows[q] == PauliVector::single(n, q, 'Z'),
                     "synthesis: Z image not reduced");
    }
  }

  // applied, in order, composes with u to the identity; since every gate is
  // a symplectic involution the realizing circuit is the reversed list.
  CliffordCircuit out;
  out.gates.assign(st.applied.rbegin(), st.applied.rend());
  return out;
}

}  // namespace ghzx
