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

#include "mgspec/statevector.hpp"

#include <stdexcept>
#include <string>

namespace mgspec {

namespace {

using Complex = std::complex<double>;

void check_gate(const Statevector& state, const LocalUnitary& gate) {
  const Eigen::Index rows = gate.matrix.rows();
  if ((rows != 2 && rows != 4) || gate.matrix.cols() != rows) {
    throw std::invalid_argument("apply: gate matrix must be 2x2 or 4x4");
  }
  const int n = state.num_qubits();
  const int last = gate.arity() == 1 ? gate.site : gate.site + 1;
  if (gate.site < 1 || last > n) {
    throw std::invalid_argument("apply: gate site out of range");
  }
  if (unitarity_defect(gate.matrix) > kUnitaryTolerance) {
    throw std::invalid_argument("apply: gate matrix is not unitary");
  }
}

}  // namespace

double unitarity_defect(const Eigen::MatrixXcd& matrix) {
  const Eigen::MatrixXcd defect =
      matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols());
  return defect.cwiseAbs().maxCoeff();
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("Statevector: num_qubits out of range");
  }
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index(1) << num_qubits);
  amps_[0] = 1.0;
}

Statevector basis_state(int num_qubits, std::string_view bits) {
  if (static_cast<int>(bits.size()) != num_qubits) {
    throw std::invalid_argument("basis_state: bit string length must equal num_qubits");
  }
  Eigen::Index index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis_state: bits must be 0 or 1");
    }
    index = (index << 1) | (c == '1' ? 1 : 0);
  }
  Statevector state(num_qubits);
  state.amplitudes()[0] = 0.0;
  state.amplitudes()[index] = 1.0;
  return state;
}

void apply(Statevector& state, const LocalUnitary& gate) {
  check_gate(state, gate);
  const int n = state.num_qubits();
  Eigen::VectorXcd& amps = state.amplitudes();

  if (gate.arity() == 1) {
    const Eigen::Index mask = Eigen::Index(1) << (n - gate.site);
    const Complex u00 = gate.matrix(0, 0), u01 = gate.matrix(0, 1);
    const Complex u10 = gate.matrix(1, 0), u11 = gate.matrix(1, 1);
    const Eigen::Index dim = amps.size();
    for (Eigen::Index i = 0; i < dim; ++i) {
      if ((i & mask) == 0) {
        const Eigen::Index j = i | mask;
        const Complex a0 = amps[i];
        const Complex a1 = amps[j];
        amps[i] = u00 * a0 + u01 * a1;
        amps[j] = u10 * a0 + u11 * a1;
      }
    }
    return;
  }

  // Adjacent pair (site, site + 1): the two bit positions differ by one.
  const int shift_lo = n - gate.site - 1;
  const Eigen::Index mask_lo = Eigen::Index(1) << shift_lo;
  const Eigen::Index mask_hi = mask_lo << 1;
  const Eigen::Index low_bits = mask_lo - 1;
  const Eigen::Index groups = amps.size() >> 2;
  Eigen::Matrix4cd u = gate.matrix;
  for (Eigen::Index g = 0; g < groups; ++g) {
    const Eigen::Index base = ((g >> shift_lo) << (shift_lo + 2)) | (g & low_bits);
    const Eigen::Index i00 = base;
    const Eigen::Index i01 = base | mask_lo;
    const Eigen::Index i10 = base | mask_hi;
    const Eigen::Index i11 = base | mask_hi | mask_lo;
    const Complex a0 = amps[i00], a1 = amps[i01], a2 = amps[i10], a3 = amps[i11];
    amps[i00] = u(0, 0) * a0 + u(0, 1) * a1 + u(0, 2) * a2 + u(0, 3) * a3;
    amps[i01] = u(1, 0) * a0 + u(1, 1) * a1 + u(1, 2) * a2 + u(1, 3) * a3;
    amps[i10] = u(2, 0) * a0 + u(2, 1) * a1 + u(2, 2) * a2 + u(2, 3) * a3;
    amps[i11] = u(3, 0) * a0 + u(3, 1) * a1 + u(3, 2) * a2 + u(3, 3) * a3;
  }
}

EntanglementSpectrum schmidt_spectrum(const Statevector& state, int cut) {
  const int n = state.num_qubits();
  if (cut < 1 || cut > n - 1) {
    throw std::invalid_argument("schmidt_spectrum: cut out of range");
  }
  const Eigen::Index rows = Eigen::Index(1) << cut;
  const Eigen::Index cols = Eigen::Index(1) << (n - cut);
  // Big-endian indexing makes the reshape row-major: the first `cut` qubits
  // select the row.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> reshaped(
      state.amplitudes().data(), rows, cols);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(reshaped);
  Eigen::VectorXd values = svd.singularValues().array().square();
  return make_spectrum(std::move(values));
}

EntanglementSpectrum schmidt_spectrum(const Statevector& state) {
  if (state.num_qubits() % 2 != 0) {
    throw std::invalid_argument("schmidt_spectrum: default cut needs an even qubit count");
  }
  return schmidt_spectrum(state, state.num_qubits() / 2);
}

}  // namespace mgspec
