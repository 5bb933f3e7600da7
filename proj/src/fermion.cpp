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

#include "mgspec/fermion.hpp"

#include <array>
#include <cmath>
#include <string>

namespace mgspec {

namespace {

using Complex = std::complex<double>;

constexpr double kDriftTolerance = 1e-8;
constexpr int kDriftCheckStride = 128;

// The four Majorana operators of an adjacent pair, restricted to the pair's
// two sites (the shared Jordan-Wigner tail to the left cancels in the
// conjugation): X(x)I, Y(x)I, Z(x)X, Z(x)Y.
const std::array<Eigen::Matrix4cd, 4>& local_majorana_basis() {
  static const std::array<Eigen::Matrix4cd, 4> basis = [] {
    auto kron = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
      Eigen::Matrix4cd out;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
      }
      return out;
    };
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    return std::array<Eigen::Matrix4cd, 4>{kron(pauli_x(), id), kron(pauli_y(), id),
                                           kron(pauli_z(), pauli_x()), kron(pauli_z(), pauli_y())};
  }();
  return basis;
}

}  // namespace

Eigen::MatrixXd MajoranaRotation::full(int num_qubits) const {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(2 * num_qubits, 2 * num_qubits);
  r.block<4, 4>(2 * (site - 1), 2 * (site - 1)) = block;
  return r;
}

CovarianceMatrix CovarianceMatrix::vacuum(int num_qubits) {
  std::string bits(static_cast<std::size_t>(num_qubits), '0');
  return from_bits(bits);
}

CovarianceMatrix CovarianceMatrix::from_bits(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 1) {
    throw std::invalid_argument("CovarianceMatrix: empty bit string");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const char c = bits[static_cast<std::size_t>(k)];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("CovarianceMatrix: bits must be 0 or 1");
    }
    const double z = c == '0' ? 1.0 : -1.0;
    m(2 * k, 2 * k + 1) = z;
    m(2 * k + 1, 2 * k) = -z;
  }
  return CovarianceMatrix(std::move(m));
}

double CovarianceMatrix::antisymmetry_defect() const { return (m_ + m_.transpose()).cwiseAbs().maxCoeff(); }

double CovarianceMatrix::orthogonality_defect() const {
  const Eigen::Index d = m_.rows();
  return (m_ * m_.transpose() - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
}

void CovarianceMatrix::reorthogonalize() {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m_, Eigen::ComputeThinU | Eigen::ComputeThinV);
  m_ = svd.matrixU() * svd.matrixV().transpose();
  m_ = 0.5 * (m_ - m_.transpose().eval());
}

MajoranaRotation matchgate_rotation(const LocalUnitary& gate) {
  if (gate.arity() != 2) {
    throw std::invalid_argument("matchgate_rotation: needs a two-qubit gate");
  }
  if (unitarity_defect(gate.matrix) > kUnitaryTolerance) {
    throw std::invalid_argument("matchgate_rotation: gate is not unitary");
  }
  const auto& basis = local_majorana_basis();
  MajoranaRotation rotation;
  rotation.site = gate.site;
  const Eigen::Matrix4cd u = gate.matrix;
  for (int j = 0; j < 4; ++j) {
    // U^dag c_j U expanded over the Majorana basis; real coefficients.
    const Eigen::Matrix4cd conjugated = u.adjoint() * basis[static_cast<std::size_t>(j)] * u;
    double captured = 0.0;
    for (int k = 0; k < 4; ++k) {
      const Complex coeff = (basis[static_cast<std::size_t>(k)].adjoint() * conjugated).trace() / 4.0;
      if (std::abs(coeff.imag()) > 1e-10) {
        throw NonGaussianGateError("matchgate_rotation: complex Majorana coefficient");
      }
      rotation.block(j, k) = coeff.real();
      captured += std::norm(coeff);
    }
    // The conjugated operator has unit Frobenius weight; anything missing
    // went into higher (cubic) Majorana terms.
    if (std::abs(captured - 1.0) > 1e-9) {
      throw NonGaussianGateError("matchgate_rotation: gate maps a Majorana outside the linear span");
    }
  }
  const Eigen::Matrix4d defect = rotation.block * rotation.block.transpose() - Eigen::Matrix4d::Identity();
  if (defect.cwiseAbs().maxCoeff() > 1e-10) {
    throw NonGaussianGateError("matchgate_rotation: action is not orthogonal");
  }
  return rotation;
}

MajoranaRotation matchgate_rotation(const MatchgateParams& params, int site) {
  return matchgate_rotation(matchgate(params, site));
}

void evolve(CovarianceMatrix& state, const MajoranaRotation& rotation) {
  Eigen::MatrixXd& m = state.matrix();
  const Eigen::Index d = m.rows();
  const Eigen::Index base = 2 * (rotation.site - 1);
  if (base + 4 > d) {
    throw std::invalid_argument("evolve: rotation site out of range");
  }
  // M <- R M R^T with R identity outside a 4x4 block.
  m.middleRows(base, 4) = rotation.block * m.middleRows(base, 4);
  m.middleCols(base, 4) = m.middleCols(base, 4) * rotation.block.transpose();
}

void evolve(CovarianceMatrix& state, const Circuit& circuit) {
  if (circuit.num_qubits != state.num_qubits()) {
    throw std::invalid_argument("evolve: circuit and state disagree on qubit count");
  }
  int applied = 0;
  for (const Layer& layer : circuit.layers) {
    for (const LocalUnitary& gate : layer.gates) {
      evolve(state, matchgate_rotation(gate));
      if (++applied % kDriftCheckStride == 0 && state.orthogonality_defect() > kDriftTolerance) {
        state.reorthogonalize();
      }
    }
  }
  if (state.orthogonality_defect() > kDriftTolerance) {
    state.reorthogonalize();
  }
}

double z_expectation(const CovarianceMatrix& state, int k) {
  if (k < 1 || k > state.num_qubits()) {
    throw std::invalid_argument("z_expectation: qubit index out of range");
  }
  return state.matrix()(2 * (k - 1), 2 * (k - 1) + 1);
}

}  // namespace mgspec
