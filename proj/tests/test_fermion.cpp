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

#include <doctest.h>

#include "mgspec/fermion.hpp"
#include "mgspec/pauli.hpp"
#include "test_helpers.hpp"

using namespace mgspec;

namespace {

double statevector_z(const Statevector& state, int k) {
  const Eigen::Index mask = Eigen::Index(1) << (state.num_qubits() - k);
  double z = 0.0;
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state.amplitudes()[i]);
    z += (i & mask) ? -p : p;
  }
  return z;
}

}  // namespace

TEST_CASE("vacuum covariance encodes <Z_k> = 1") {
  const CovarianceMatrix vac = CovarianceMatrix::vacuum(3);
  CHECK(vac.antisymmetry_defect() < 1e-15);
  CHECK(vac.orthogonality_defect() < 1e-15);
  for (int k = 1; k <= 3; ++k) {
    CHECK(z_expectation(vac, k) == doctest::Approx(1.0));
  }
  const CovarianceMatrix flipped = CovarianceMatrix::from_bits("10");
  CHECK(z_expectation(flipped, 1) == doctest::Approx(-1.0));
  CHECK(z_expectation(flipped, 2) == doctest::Approx(1.0));
}

TEST_CASE("identity gate rotates nothing") {
  const MajoranaRotation rotation = matchgate_rotation(LocalUnitary{1, Eigen::Matrix4cd::Identity()});
  CHECK((rotation.block - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("G(X,X) acts as a signed permutation of the Majoranas") {
  const LocalUnitary gate = matchgate(MatchgateParams{pauli_x(), pauli_x()}, 1);
  const MajoranaRotation rotation = matchgate_rotation(gate);

  // Brute-force oracle: conjugate each local Majorana Pauli by the dense
  // gate and decompose.
  PauliString majorana[4] = {jordan_wigner(1, 2), jordan_wigner(2, 2), jordan_wigner(3, 2),
                             jordan_wigner(4, 2)};
  const Eigen::Matrix4cd u = gate.matrix;
  for (int j = 0; j < 4; ++j) {
    const Eigen::MatrixXcd conjugated = u.adjoint() * dense(majorana[j]) * u;
    for (int k = 0; k < 4; ++k) {
      const std::complex<double> coeff = (dense(majorana[k]).adjoint() * conjugated).trace() / 4.0;
      CHECK(std::abs(coeff.real() - rotation.block(j, k)) < 1e-12);
      CHECK(std::abs(coeff.imag()) < 1e-12);
    }
  }

  // Signed permutation: every row has a single +-1 entry.
  for (int j = 0; j < 4; ++j) {
    int nonzero = 0;
    for (int k = 0; k < 4; ++k) {
      if (std::abs(rotation.block(j, k)) > 1e-12) {
        ++nonzero;
        CHECK(std::abs(std::abs(rotation.block(j, k)) - 1.0) < 1e-12);
      }
    }
    CHECK(nonzero == 1);
  }
  CHECK((rotation.block * rotation.block.transpose() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("SWAP is rejected as non-Gaussian") {
  CHECK_THROWS_AS(matchgate_rotation(LocalUnitary{1, swap_gate()}), NonGaussianGateError);
}

TEST_CASE("empty circuit leaves the covariance unchanged") {
  CovarianceMatrix cov = CovarianceMatrix::vacuum(4);
  const Eigen::MatrixXd before = cov.matrix();
  Circuit empty;
  empty.num_qubits = 4;
  evolve(cov, empty);
  CHECK(cov.matrix() == before);
}

TEST_CASE("rotations compose like the gates") {
  Rng rng(5);
  const LocalUnitary g1 = random_matchgate(rng, 1);
  const LocalUnitary g2 = random_matchgate(rng, 1);
  LocalUnitary combined{1, g2.matrix * g1.matrix};

  const Eigen::MatrixXd r1 = matchgate_rotation(g1).full(2);
  const Eigen::MatrixXd r2 = matchgate_rotation(g2).full(2);
  const Eigen::MatrixXd r12 = matchgate_rotation(combined).full(2);
  CHECK((r12 - r2 * r1).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("covariance oracle matches the statevector on matchgate brickwork") {
  Rng rng(6);
  const Circuit circuit = brickwork(6, 20, BrickworkKind::Matchgate, rng);

  Statevector psi(6);
  apply(psi, circuit);
  CovarianceMatrix cov = CovarianceMatrix::vacuum(6);
  evolve(cov, circuit);

  for (int k = 1; k <= 6; ++k) {
    CHECK(std::abs(statevector_z(psi, k) - z_expectation(cov, k)) < 1e-10);
  }
}

TEST_CASE("covariance oracle matches the statevector on basis-state inputs") {
  Rng rng(8);
  const Circuit circuit = brickwork(4, 12, BrickworkKind::Matchgate, rng);

  Statevector psi = basis_state(4, "0110");
  apply(psi, circuit);
  CovarianceMatrix cov = CovarianceMatrix::from_bits("0110");
  evolve(cov, circuit);

  for (int k = 1; k <= 4; ++k) {
    CHECK(std::abs(statevector_z(psi, k) - z_expectation(cov, k)) < 1e-10);
  }
}

TEST_CASE("covariance stays on the pure-state manifold over 1000 gates") {
  Rng rng(9);
  CovarianceMatrix cov = CovarianceMatrix::vacuum(8);
  int gates = 0;
  while (gates < 1000) {
    const Circuit circuit = brickwork(8, 10, BrickworkKind::Matchgate, rng);
    evolve(cov, circuit);
    gates += static_cast<int>(gate_count(circuit));
  }
  CHECK(cov.antisymmetry_defect() < 1e-8);
  CHECK(cov.orthogonality_defect() < 1e-8);
}

TEST_CASE("evolve validates dimensions") {
  CovarianceMatrix cov = CovarianceMatrix::vacuum(2);
  MajoranaRotation rotation;
  rotation.site = 2;
  CHECK_THROWS_AS(evolve(cov, rotation), std::invalid_argument);
}
