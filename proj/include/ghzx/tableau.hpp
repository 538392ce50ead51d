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
#include <sstream>
#include <string>
#include <vector>

#include "ghzx/errors.hpp"
#include "ghzx/gf2.hpp"
#include "ghzx/pauli.hpp"

namespace ghzx {

enum class GateKind { H, P, CNOT, X, Y, Z };

struct Gate {
  GateKind kind;
  std::size_t q0 = 0;
  std::size_t q1 = 0;  // target, CNOT only

  bool is_two_qubit() const { return kind == GateKind::CNOT; }

  std::string str() const {
    switch (kind) {
      case GateKind::H:
        return "H " + std::to_string(q0);
      case GateKind::P:
        return "P " + std::to_string(q0);
      case GateKind::CNOT:
        return "CNOT " + std::to_string(q0) + " " + std::to_string(q1);
      case GateKind::X:
        return "X " + std::to_string(q0);
      case GateKind::Y:
        return "Y " + std::to_string(q0);
      case GateKind::Z:
        return "Z " + std::to_string(q0);
    }
    return "";
  }

  // Sign-blind coordinate action (the induced symplectic map).
  void apply_to_coords(PauliVector& v) const {
    switch (kind) {
      case GateKind::H: {
        const bool xb = v.x.get(q0), zb = v.z.get(q0);
        v.x.set(q0, zb);
        v.z.set(q0, xb);
        break;
      }
      case GateKind::P:
        if (v.x.get(q0)) {
          v.z.flip(q0);
        }
        break;
      case GateKind::CNOT:
        if (v.x.get(q0)) {
          v.x.flip(q1);
        }
        if (v.z.get(q1)) {
          v.z.flip(q0);
        }
        break;
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
        break;  // Paulis act trivially on coordinates
    }
  }

  // Sign flip produced by conjugating the Pauli v through this gate.
  bool sign_flip(const PauliVector& v) const {
    switch (kind) {
      case GateKind::H:
        return v.x.get(q0) && v.z.get(q0);
      case GateKind::P:
        return v.x.get(q0) && v.z.get(q0);
      case GateKind::CNOT:
        return v.x.get(q0) && v.z.get(q1) && !(v.x.get(q1) ^ v.z.get(q0));
      case GateKind::X:
        return v.z.get(q0);
      case GateKind::Y:
        return v.x.get(q0) ^ v.z.get(q0);
      case GateKind::Z:
        return v.x.get(q0);
    }
    return false;
  }
};

// Ordered list of elementary gates from {H, P, CNOT, X, Y, Z}. Text format:
// one gate per line, 0-based qubit indices, '#' starts a comment.
struct CliffordCircuit {
  std::vector<Gate> gates;

  void h(std::size_t q) { gates.push_back({GateKind::H, q, 0}); }
  void p(std::size_t q) { gates.push_back({GateKind::P, q, 0}); }
  void cnot(std::size_t c, std::size_t t) {
    if (c == t) {
      throw std::invalid_argument("cnot: control equals target");
    }
    gates.push_back({GateKind::CNOT, c, t});
  }
  void x(std::size_t q) { gates.push_back({GateKind::X, q, 0}); }
  void y(std::size_t q) { gates.push_back({GateKind::Y, q, 0}); }
  void z(std::size_t q) { gates.push_back({GateKind::Z, q, 0}); }

  void append(const CliffordCircuit& other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  }

  std::size_t size() const { return gates.size(); }
  bool empty() const { return gates.empty(); }

  // Highest qubit index mentioned, plus one.
  std::size_t qubit_span() const {
    std::size_t top = 0;
    for (const Gate& g : gates) {
      top = std::max(top, g.q0 + 1);
      if (g.is_two_qubit()) {
        top = std::max(top, g.q1 + 1);
      }
    }
    return top;
  }

  // Same circuit with every qubit index remapped (used to embed a circuit
  // synthesized on party-local coordinates into the full register).
  CliffordCircuit remapped(const std::vector<std::size_t>& new_index) const {
    CliffordCircuit out;
    out.gates.reserve(gates.size());
    for (Gate g : gates) {
      g.q0 = new_index.at(g.q0);
      if (g.is_two_qubit()) {
        g.q1 = new_index.at(g.q1);
      }
      out.gates.push_back(g);
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (const Gate& g : gates) {
      out += g.str();
      out += '\n';
    }
    return out;
  }

  static CliffordCircuit parse(const std::string& text) {
    CliffordCircuit c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) {
        line.resize(hash);
      }
      std::istringstream ls(line);
      std::string op;
      if (!(ls >> op)) {
        continue;
      }
      long a = -1, b = -1;
      if (op == "CNOT") {
        if (!(ls >> a >> b) || a < 0 || b < 0 || a == b) {
          throw ParseError(lineno, "malformed CNOT gate");
        }
        c.cnot(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      } else if (op == "H" || op == "P" || op == "X" || op == "Y" || op == "Z") {
        if (!(ls >> a) || a < 0) {
          throw ParseError(lineno, "malformed " + op + " gate");
        }
        const std::size_t q = static_cast<std::size_t>(a);
        if (op == "H") {
          c.h(q);
        } else if (op == "P") {
          c.p(q);
        } else if (op == "X") {
          c.x(q);
        } else if (op == "Y") {
          c.y(q);
        } else {
          c.z(q);
        }
      } else {
        throw ParseError(lineno, "unknown gate '" + op + "'");
      }
      std::string rest;
      if (ls >> rest) {
        throw ParseError(lineno, "trailing tokens after gate");
      }
    }
    return c;
  }
};

// Stabilizer tableau: n commuting independent generators with exact signs.
// Generator i stabilizes the state as (-1)^{signs[i]} sigma(gens[i]).
class Tableau {
 public:
  Tableau() = default;

  Tableau(std::vector<PauliVector> gens, std::vector<bool> signs)
      : gens_(std::move(gens)), signs_(std::move(signs)) {
    if (gens_.size() != signs_.size()) {
      throw std::invalid_argument("Tableau: generator/sign count mismatch");
    }
    n_ = gens_.empty() ? 0 : gens_[0].num_qubits();
    for (const PauliVector& g : gens_) {
      if (g.num_qubits() != n_) {
        throw std::invalid_argument("Tableau: generator length mismatch");
      }
    }
  }

  static Tableau zero_state(std::size_t n) {
    std::vector<PauliVector> gens;
    gens.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
      gens.push_back(PauliVector::single(n, q, 'Z'));
    }
    return Tableau(std::move(gens), std::vector<bool>(n, false));
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t num_generators() const { return gens_.size(); }
  const PauliVector& generator(std::size_t i) const { return gens_[i]; }
  bool sign(std::size_t i) const { return signs_[i]; }
  const std::vector<PauliVector>& generators() const { return gens_; }

  BinarySubspace group() const {
    return BinarySubspace::span(2 * n_, flatten_all(gens_));
  }

  bool generators_independent() const {
    return gf2_rank(flatten_all(gens_)) == gens_.size();
  }

  bool generators_commute() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = i + 1; j < gens_.size(); ++j) {
        if (omega(gens_[i], gens_[j])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_state() const {
    return gens_.size() == n_ && generators_independent() && generators_commute();
  }

  // Multiply generator i by generator j, tracking the sign through the
  // mod-4 phase of the Pauli product (even for commuting operators).
  void row_mult(std::size_t i, std::size_t j) {
    const int k = phase_exponent(gens_[i], gens_[j]);
    internal_check(k % 2 == 0, "odd phase while multiplying commuting generators");
    signs_[i] = signs_[i] ^ signs_[j] ^ (k == 2);
    gens_[i] ^= gens_[j];
  }

  void apply(const Gate& g) {
    if (g.q0 >= n_ || (g.is_two_qubit() && g.q1 >= n_)) {
      throw std::out_of_range("gate qubit index out of range");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (g.sign_flip(gens_[i])) {
        signs_[i] = !signs_[i];
      }
      g.apply_to_coords(gens_[i]);
    }
  }

  void apply(const CliffordCircuit& c) {
    for (const Gate& g : c.gates) {
      apply(g);
    }
  }

  void apply_pauli(const PauliVector& h) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (omega(h, gens_[i])) {
        signs_[i] = !signs_[i];
      }
    }
  }

  // Sign of the group element selected by `combo` over the current
  // generators (0 -> +1, 1 -> -1). The element itself is the XOR of the
  // selected generators.
  bool sign_of_combination(const BitVector& combo) const {
    if (combo.size() != gens_.size()) {
      throw std::invalid_argument("sign_of_combination: combo length mismatch");
    }
    PauliVector acc(n_);
    int phase = 0;  // exponent of i, mod 4
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (!combo.get(i)) {
        continue;
      }
      phase = (phase + phase_exponent(acc, gens_[i]) + (signs_[i] ? 2 : 0)) % 4;
      acc ^= gens_[i];
    }
    internal_check(phase % 2 == 0, "group element product produced imaginary phase");
    return phase == 2;
  }

  // Sign of a specific group element; the element must be in the group.
  bool sign_of_element(const PauliVector& element) const {
    auto combo = gf2_solve(flatten_all(gens_), element.flatten());
    internal_check(combo.has_value(), "sign_of_element: not a group element");
    return sign_of_combination(*combo);
  }

  // Canonical generator set: row-reduce the generators (x block first, then
  // z block), multiplying rows so signs stay exact. Two tableaus describe
  // the same state iff their canonical forms are identical.
  void canonicalize() {
    std::size_t r = 0;
    for (std::size_t c = 0; c < 2 * n_ && r < gens_.size(); ++c) {
      const std::size_t q = c < n_ ? c : c - n_;
      const bool want_x = c < n_;
      std::size_t sel = r;
      auto bit = [&](std::size_t i) {
        return want_x ? gens_[i].x.get(q) : gens_[i].z.get(q);
      };
      while (sel < gens_.size() && !bit(sel)) {
        ++sel;
      }
      if (sel == gens_.size()) {
        continue;
      }
      std::swap(gens_[r], gens_[sel]);
      std::vector<bool>::swap(signs_[r], signs_[sel]);
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i != r && bit(i)) {
          row_mult(i, r);
        }
      }
      ++r;
    }
  }

  bool operator==(const Tableau& other) const = default;

  // Tableau on a subset of qubits; every generator must be trivial outside.
  Tableau restricted_to(const std::vector<std::size_t>& qubits) const {
    std::vector<PauliVector> gens;
    gens.reserve(gens_.size());
    for (const PauliVector& g : gens_) {
      gens.push_back(g.project(qubits));
    }
    return Tableau(std::move(gens), signs_);
  }

 private:
  std::vector<PauliVector> gens_;
  std::vector<bool> signs_;
  std::size_t n_ = 0;
};

struct StateComparison {
  enum class Kind { exact, up_to_pauli, different_group };
  Kind kind = Kind::different_group;
  PauliVector correction;  // valid when kind == up_to_pauli
};

// Compare two stabilizer states. When the groups coincide but signs differ,
// the returned Pauli correction h satisfies: conjugating t2 by sigma(h)
// gives exactly t1. Solvability of the sign system re-checks group equality.
inline StateComparison states_equal(const Tableau& t1, const Tableau& t2) {
  if (t1.num_qubits() != t2.num_qubits()) {
    throw std::invalid_argument("states_equal: qubit count mismatch");
  }
  StateComparison out;
  if (t1.group() != t2.group()) {
    out.kind = StateComparison::Kind::different_group;
    return out;
  }
  const std::size_t n = t1.num_qubits();
  // Sign discrepancy character on t2's generators.
  BitVector discrepancy(t2.num_generators());
  bool any = false;
  for (std::size_t i = 0; i < t2.num_generators(); ++i) {
    const bool want = t1.sign_of_element(t2.generator(i));
    const bool got = t2.sign(i);
    if (want != got) {
      discrepancy.set(i, true);
      any = true;
    }
  }
  if (!any) {
    out.kind = StateComparison::Kind::exact;
    return out;
  }
  // Solve omega(h, g_i) = d_i for the correction h.
  BitMatrix constraint_rows;
  constraint_rows.reserve(t2.num_generators());
  for (std::size_t i = 0; i < t2.num_generators(); ++i) {
    const PauliVector& g = t2.generator(i);
    PauliVector swapped(n);
    swapped.x = g.z;
    swapped.z = g.x;
    constraint_rows.push_back(swapped.flatten());
  }
  auto h = gf2_solve_system(2 * n, constraint_rows, discrepancy);
  internal_check(h.has_value(), "sign correction must exist when groups coincide");
  out.kind = StateComparison::Kind::up_to_pauli;
  out.correction = PauliVector::unflatten(*h);
  return out;
}

}  // namespace ghzx
