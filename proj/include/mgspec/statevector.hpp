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
#include <string_view>

#include "mgspec/spectra.hpp"

namespace mgspec {

// A one- or two-qubit unitary placed on a wire. Qubit indices are 1-based;
// a two-qubit gate acts on the adjacent pair (site, site + 1). Matrices are
// 2x2 or 4x4 over the big-endian basis |0>,|1> resp. |00>,|01>,|10>,|11>.
struct LocalUnitary {
  int site = 1;
  Eigen::MatrixXcd matrix;

  int arity() const { return matrix.rows() == 2 ? 1 : 2; }
};

// Largest |U^dag U - I| entry.
double unitarity_defect(const Eigen::MatrixXcd& matrix);

inline constexpr double kUnitaryTolerance = 1e-12;

// Dense amplitude vector over num_qubits qubits. Indexing is big-endian:
// qubit 1 is the most significant bit of the basis index, so |b1 b2 ... bN>
// lives at index sum_i b_i 2^(N-i). Starts in |00...0>.
class Statevector {
 public:
  explicit Statevector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  int num_qubits_;
  Eigen::VectorXcd amps_;
};

// Computational basis state |bits>, bits given most-significant-qubit first.
Statevector basis_state(int num_qubits, std::string_view bits);

// In-place application of I (x) U (x) I embedded at the gate's site(s).
// Rejects out-of-range sites and matrices that fail the unitarity check.
void apply(Statevector& state, const LocalUnitary& gate);

// Squared singular values of the 2^cut x 2^(N-cut) amplitude matrix, i.e.
// the spectrum of the reduced density matrix of qubits 1..cut. Computed by
// SVD of the reshaped amplitudes rather than by diagonalizing rho_A, which
// keeps tiny eigenvalues well conditioned.
EntanglementSpectrum schmidt_spectrum(const Statevector& state, int cut);

// Equal bipartition (cut = N/2); num_qubits must be even.
EntanglementSpectrum schmidt_spectrum(const Statevector& state);

}  // namespace mgspec
