// Copyright 2026 The mgspec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "mgspec/circuit.hpp"

namespace mgspec {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// A Pauli string i^t * P_1 (x) P_2 (x) ... (x) P_N with exact phase
// tracking (t in 0..3).
class PauliString {
 public:
  explicit PauliString(int num_qubits);
  static PauliString single(int num_qubits, int site, PauliLetter letter);

  int num_qubits() const { return static_cast<int>(letters_.size()); }
  PauliLetter letter(int site) const;  // 1-based
  void set_letter(int site, PauliLetter letter);
  int phase_power() const { return phase_power_; }
  void multiply_phase(int power);

  bool is_identity_letters() const;
  bool letters_equal(const PauliString& other) const;
  std::string to_string() const;  // e.g. "+i*XIZ"

  friend PauliString operator*(const PauliString& lhs, const PauliString& rhs);

 private:
  std::vector<PauliLetter> letters_;
  int phase_power_ = 0;
};

// Dense 2^N x 2^N matrix; intended for small N.
Eigen::MatrixXcd dense(const PauliString& p);

// Majorana operator in the Jordan-Wigner encoding: for 1 <= index <= 2N,
// c_{2k-1} = Z_1 ... Z_{k-1} X_k and c_{2k} = Z_1 ... Z_{k-1} Y_k.
PauliString jordan_wigner(int majorana_index, int num_qubits);

// Pushes p forward through the circuit, gate by gate: p -> U p U^dag.
// Every gate must map p to another Pauli string with unit-modulus phase
// (i.e. be a Clifford); otherwise throws.
PauliString conjugate_pauli_by_clifford(PauliString p, const Circuit& clifford);

// The unique index set S with prod_{i in S} c_i proportional to p, found by
// solving the F2 linear system over the Jordan-Wigner symplectic vectors.
// Indices are ascending and 1-based.
std::vector<int> majorana_support(const PauliString& p);

// Majorana factor count of the circuit-conjugated Z_k, for every qubit k.
std::vector<int> majorana_weights(const Circuit& clifford, int num_qubits);

// Max over k of the even part 2*floor(d_k/2) of the factor counts above:
// expectation values contract Majorana factors in pairs, so an unpaired
// odd factor does not raise the contraction order.
int fermionic_weight(const Circuit& clifford, int num_qubits);

}  // namespace mgspec
