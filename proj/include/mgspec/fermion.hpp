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
#include <stdexcept>
#include <string_view>

#include "mgspec/circuit.hpp"
#include "mgspec/gates.hpp"

namespace mgspec {

// Raised when a gate cannot be represented as a linear action on Majorana
// operators (e.g. SWAP, whose conjugation produces cubic terms).
class NonGaussianGateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Orthogonal action c_j -> sum_k R_{jk} c_k of a parity-preserving gate on
// the four Majorana operators of an adjacent pair; identity elsewhere.
struct MajoranaRotation {
  int site = 1;  // acts on Majorana indices 2*site-1 .. 2*site+2
  Eigen::Matrix4d block = Eigen::Matrix4d::Identity();

  Eigen::MatrixXd full(int num_qubits) const;
};

// Majorana two-point functions of a Gaussian state: a 2N x 2N real
// antisymmetric matrix with <Z_k> = M(2k-1, 2k) and vacuum blocks
// [[0, 1], [-1, 0]]. For pure states M is orthogonal.
class CovarianceMatrix {
 public:
  static CovarianceMatrix vacuum(int num_qubits);
  static CovarianceMatrix from_bits(std::string_view bits);

  int num_qubits() const { return static_cast<int>(m_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::MatrixXd& matrix() { return m_; }

  double antisymmetry_defect() const;
  double orthogonality_defect() const;

  // Polar projection onto the orthogonal group, then antisymmetrization.
  void reorthogonalize();

 private:
  explicit CovarianceMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}
  Eigen::MatrixXd m_;
};

// Decomposes the gate's conjugation action on the adjacent pair's Majorana
// operators. Throws NonGaussianGateError if any conjugated Majorana leaves
// the span of single Majoranas.
MajoranaRotation matchgate_rotation(const LocalUnitary& gate);
MajoranaRotation matchgate_rotation(const MatchgateParams& params, int site);

// M <- R M R^T, touching only the four affected rows/columns.
void evolve(CovarianceMatrix& state, const MajoranaRotation& rotation);

// Applies every gate of the circuit; drift from the pure-state manifold is
// checked periodically and repaired when it exceeds 1e-8.
void evolve(CovarianceMatrix& state, const Circuit& circuit);

double z_expectation(const CovarianceMatrix& state, int k);

}  // namespace mgspec
