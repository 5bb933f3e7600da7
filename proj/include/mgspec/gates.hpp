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
#include <vector>

#include "mgspec/rng.hpp"
#include "mgspec/statevector.hpp"

namespace mgspec {

// Blocks of a parity-preserving two-qubit gate G(A, B): A acts on the even
// parity subspace {|00>, |11>}, B on the odd subspace {|01>, |10>}. Both
// must be unitary with det(A) = det(B).
struct MatchgateParams {
  Eigen::Matrix2cd a;
  Eigen::Matrix2cd b;
};

inline constexpr double kDeterminantTolerance = 1e-10;

// 4x4 gate with the A entries at the outer corners and the B entries in the
// center block. Throws if the determinant condition fails.
LocalUnitary matchgate(const MatchgateParams& params, int site);

// Haar-random SU(2): complex Ginibre 2x2 -> QR with phase-fixed R diagonal,
// then the determinant is divided out.
Eigen::Matrix2cd random_su2(Rng& rng);

// Haar-random U(4), same Ginibre + QR construction.
Eigen::Matrix4cd random_u4(Rng& rng);

LocalUnitary random_matchgate(Rng& rng, int site);
LocalUnitary random_haar_two_qubit(Rng& rng, int site);

// Uniformly random element of the 11520-element two-qubit Clifford group
// (up to global phase), drawn from a precomputed closure table.
LocalUnitary random_two_qubit_clifford(Rng& rng, int site);

// The full two-qubit Clifford group, one phase-normalized representative
// per class, in a deterministic order.
const std::vector<Eigen::Matrix4cd>& two_qubit_clifford_table();

inline constexpr std::size_t kTwoQubitCliffordCount = 11520;

// Phase-normalized key used to identify a Clifford matrix up to global
// phase; two matrices get the same key iff they agree up to phase.
std::string clifford_class_key(const Eigen::Matrix4cd& u);

// Fixed gates.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd hadamard();
Eigen::Matrix2cd phase_s();
Eigen::Matrix2cd rotation_y(double theta);
Eigen::Matrix4cd swap_gate();
Eigen::Matrix4cd cnot_gate();           // control on the first qubit of the pair
Eigen::Matrix4cd cnot_reversed_gate();  // control on the second qubit

}  // namespace mgspec
