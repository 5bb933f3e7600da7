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

// Brute-force dense oracles shared by the unit tests. Everything here is
// deliberately independent of the library's gate-application and SVD paths.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>

#include "mgspec/circuit.hpp"
#include "mgspec/statevector.hpp"

namespace mgspec::test {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// I (x) U (x) I with the gate placed at its 1-based site; qubit 1 is the
// most significant factor.
inline Eigen::MatrixXcd embed_gate(const LocalUnitary& gate, int num_qubits) {
  const int arity = gate.arity();
  const Eigen::Index left = Eigen::Index(1) << (gate.site - 1);
  const Eigen::Index right = Eigen::Index(1) << (num_qubits - gate.site - arity + 1);
  return kron(kron(Eigen::MatrixXcd::Identity(left, left), gate.matrix),
              Eigen::MatrixXcd::Identity(right, right));
}

inline Eigen::MatrixXcd dense_unitary(const Circuit& circuit) {
  const Eigen::Index dim = Eigen::Index(1) << circuit.num_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Layer& layer : circuit.layers) {
    for (const LocalUnitary& gate : layer.gates) {
      u = embed_gate(gate, circuit.num_qubits) * u;
    }
  }
  return u;
}

// Dense partial trace over qubits cut+1..N, then exact diagonalization.
inline Eigen::VectorXd partial_trace_eigenvalues(const Statevector& state, int cut) {
  const int n = state.num_qubits();
  const Eigen::Index dim_a = Eigen::Index(1) << cut;
  const Eigen::Index dim_b = Eigen::Index(1) << (n - cut);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i) {
    for (Eigen::Index j = 0; j < dim_a; ++j) {
      std::complex<double> sum = 0.0;
      for (Eigen::Index b = 0; b < dim_b; ++b) {
        sum += state.amplitudes()[i * dim_b + b] * std::conj(state.amplitudes()[j * dim_b + b]);
      }
      rho(i, j) = sum;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  Eigen::VectorXd values = solver.eigenvalues();
  std::sort(values.data(), values.data() + values.size(), std::greater<double>());
  return values;
}

}  // namespace mgspec::test
