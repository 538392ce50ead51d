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
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzx/bits.hpp"

namespace ghzx {

// An n-qubit Pauli operator modulo phase, as the pair of x/z bit masks.
// Per qubit: (0,0) = I, (1,0) = X, (0,1) = Z, (1,1) = Y.
struct PauliVector {
  BitVector x, z;

  PauliVector() = default;
  explicit PauliVector(std::size_t n) : x(n), z(n) {}

  std::size_t num_qubits() const { return x.size(); }

  bool is_identity() const { return x.is_zero() && z.is_zero(); }

  PauliVector& operator^=(const PauliVector& other) {
    x ^= other.x;
    z ^= other.z;
    return *this;
  }

  friend PauliVector operator^(PauliVector a, const PauliVector& b) {
    a ^= b;
    return a;
  }

  bool operator==(const PauliVector& other) const = default;

  char pauli_at(std::size_t q) const {
    const bool xb = x.get(q), zb = z.get(q);
    if (xb && zb) {
      return 'Y';
    }
    if (xb) {
      return 'X';
    }
    if (zb) {
      return 'Z';
    }
    return 'I';
  }

  void set_pauli(std::size_t q, char p) {
    switch (p) {
      case 'I':
        x.set(q, false);
        z.set(q, false);
        break;
      case 'X':
        x.set(q, true);
        z.set(q, false);
        break;
      case 'Z':
        x.set(q, false);
        z.set(q, true);
        break;
      case 'Y':
        x.set(q, true);
        z.set(q, true);
        break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli letter '") + p + "'");
    }
  }

  static PauliVector from_string(const std::string& label) {
    PauliVector v(label.size());
    for (std::size_t q = 0; q < label.size(); ++q) {
      v.set_pauli(q, label[q]);
    }
    return v;
  }

  std::string str() const {
    std::string s;
    s.reserve(num_qubits());
    for (std::size_t q = 0; q < num_qubits(); ++q) {
      s.push_back(pauli_at(q));
    }
    return s;
  }

  static PauliVector single(std::size_t n, std::size_t q, char p) {
    PauliVector v(n);
    v.set_pauli(q, p);
    return v;
  }

  // Coordinates as one 2n-bit vector, x block first then z block.
  BitVector flatten() const {
    const std::size_t n = num_qubits();
    BitVector v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      if (x.get(q)) {
        v.set(q, true);
      }
      if (z.get(q)) {
        v.set(n + q, true);
      }
    }
    return v;
  }

  static PauliVector unflatten(const BitVector& v) {
    if (v.size() % 2 != 0) {
      throw std::invalid_argument("unflatten: odd length");
    }
    const std::size_t n = v.size() / 2;
    PauliVector p(n);
    for (std::size_t q = 0; q < n; ++q) {
      if (v.get(q)) {
        p.x.set(q, true);
      }
      if (v.get(n + q)) {
        p.z.set(q, true);
      }
    }
    return p;
  }

  // Projection onto a subset of qubits (in the given order).
  PauliVector project(const std::vector<std::size_t>& qubits) const {
    PauliVector out(qubits.size());
    out.x = x.gather(qubits);
    out.z = z.gather(qubits);
    return out;
  }

  // Inverse of project: write this vector's qubits into `target` at `qubits`.
  void embed_into(PauliVector& target, const std::vector<std::size_t>& qubits) const {
    x.scatter_into(target.x, qubits);
    z.scatter_into(target.z, qubits);
  }

  bool trivial_on(const std::vector<std::size_t>& qubits) const {
    for (std::size_t q : qubits) {
      if (x.get(q) || z.get(q)) {
        return false;
      }
    }
    return true;
  }
};

// Symplectic form: commutation parity of two Pauli operators.
inline int omega(const PauliVector& f, const PauliVector& g) {
  if (f.num_qubits() != g.num_qubits()) {
    throw std::invalid_argument("omega: length mismatch");
  }
  return (BitVector::dot(f.x, g.z) ^ BitVector::dot(f.z, g.x)) ? 1 : 0;
}

// omega on flattened 2n-bit coordinates.
inline int omega_flat(const BitVector& a, const BitVector& b) {
  return omega(PauliVector::unflatten(a), PauliVector::unflatten(b));
}

// Exponent k (mod 4) of i in sigma(f) sigma(g) = i^k sigma(f+g), with the
// convention sigma_11 = Y = i X Z, so sigma_{ab} = i^{ab} X^a Z^b per qubit.
inline int phase_exponent(const PauliVector& f, const PauliVector& g) {
  if (f.num_qubits() != g.num_qubits()) {
    throw std::invalid_argument("phase_exponent: length mismatch");
  }
  int k = 0;
  for (std::size_t q = 0; q < f.num_qubits(); ++q) {
    const int a1 = f.x.get(q), b1 = f.z.get(q);
    const int a2 = g.x.get(q), b2 = g.z.get(q);
    k += a1 * b1 + a2 * b2 + 2 * b1 * a2 - (a1 ^ a2) * (b1 ^ b2);
  }
  return ((k % 4) + 4) % 4;
}

inline BitMatrix flatten_all(const std::vector<PauliVector>& vs) {
  BitMatrix out;
  out.reserve(vs.size());
  for (const PauliVector& v : vs) {
    out.push_back(v.flatten());
  }
  return out;
}

}  // namespace ghzx
