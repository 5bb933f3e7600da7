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

#include <cmath>

#include "mgspec/gates.hpp"
#include "mgspec/statevector.hpp"
#include "test_helpers.hpp"

using namespace mgspec;

namespace {

LocalUnitary random_gate(Rng& rng, int num_qubits) {
  const int site = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(num_qubits - 1)));
  return random_haar_two_qubit(rng, site);
}

}  // namespace

TEST_CASE("basis_state places the single amplitude big-endian") {
  const Statevector s00 = basis_state(2, "00");
  CHECK(s00.amplitudes()[0] == std::complex<double>(1, 0));
  CHECK(s00.amplitudes().tail(3).cwiseAbs().maxCoeff() == 0.0);

  const Statevector s10 = basis_state(2, "10");
  CHECK(s10.amplitudes()[2] == std::complex<double>(1, 0));
  CHECK(std::abs(s10.amplitudes()[0]) == 0.0);

  CHECK_THROWS_AS(basis_state(1, "011"), std::invalid_argument);
  CHECK_THROWS_AS(basis_state(2, "0x"), std::invalid_argument);
}

TEST_CASE("apply implements Pauli and SWAP actions") {
  Statevector state = basis_state(2, "00");
  apply(state, LocalUnitary{1, pauli_x()});
  CHECK(std::abs(state.amplitudes()[2] - 1.0) < 1e-15);  // |10>

  apply(state, LocalUnitary{1, swap_gate()});
  CHECK(std::abs(state.amplitudes()[1] - 1.0) < 1e-15);  // |01>

  Statevector other = basis_state(2, "01");
  apply(other, LocalUnitary{1, Eigen::Matrix4cd::Identity()});
  CHECK(other.amplitudes()[1] == std::complex<double>(1, 0));
}

TEST_CASE("apply rejects bad sites and non-unitary matrices") {
  Statevector state(3);
  CHECK_THROWS_AS(apply(state, LocalUnitary{3, swap_gate()}), std::invalid_argument);
  CHECK_THROWS_AS(apply(state, LocalUnitary{0, pauli_x()}), std::invalid_argument);
  Eigen::Matrix2cd bad = pauli_x();
  bad(0, 1) = 1.5;
  CHECK_THROWS_AS(apply(state, LocalUnitary{1, bad}), std::invalid_argument);
}

TEST_CASE("gate then adjoint restores the state") {
  Rng rng(7);
  Statevector state(5);
  for (int q = 1; q <= 5; ++q) {
    apply(state, LocalUnitary{q, rotation_y(2.0 * uniform_unit(rng))});
  }
  const Eigen::VectorXcd before = state.amplitudes();
  std::vector<LocalUnitary> gates;
  for (int i = 0; i < 40; ++i) gates.push_back(random_gate(rng, 5));
  for (const auto& g : gates) apply(state, g);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    apply(state, LocalUnitary{it->site, it->matrix.adjoint()});
  }
  CHECK((state.amplitudes() - before).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("norm is preserved over 500 random gates") {
  Rng rng(11);
  Statevector state(6);
  for (int i = 0; i < 500; ++i) {
    apply(state, random_gate(rng, 6));
  }
  CHECK(std::abs(state.norm() - 1.0) < 1e-10);
}

TEST_CASE("schmidt spectrum of product and Bell states") {
  const Statevector product = basis_state(2, "00");
  const EntanglementSpectrum p = schmidt_spectrum(product, 1);
  CHECK(p.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.values[1] == doctest::Approx(0.0).epsilon(1e-12));

  Statevector bell = basis_state(2, "00");
  apply(bell, LocalUnitary{1, hadamard()});
  apply(bell, LocalUnitary{1, cnot_gate()});
  const EntanglementSpectrum b = schmidt_spectrum(bell, 1);
  CHECK(b.values[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.values[1] == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(schmidt_spectrum(product, 2), std::invalid_argument);
  CHECK_THROWS_AS(schmidt_spectrum(product, 0), std::invalid_argument);
}

TEST_CASE("4-qubit GHZ half-cut spectrum matches the dense partial trace") {
  Statevector ghz = basis_state(4, "0000");
  apply(ghz, LocalUnitary{1, hadamard()});
  apply(ghz, LocalUnitary{1, cnot_gate()});
  apply(ghz, LocalUnitary{2, cnot_gate()});
  apply(ghz, LocalUnitary{3, cnot_gate()});

  const EntanglementSpectrum spectrum = schmidt_spectrum(ghz, 2);
  CHECK(spectrum.values[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(spectrum.values[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(spectrum.values[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spectrum.values[3] == doctest::Approx(0.0).epsilon(1e-12));

  const Eigen::VectorXd oracle = test::partial_trace_eigenvalues(ghz, 2);
  CHECK((spectrum.values - oracle).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("schmidt spectrum agrees with dense partial trace for random states") {
  Rng rng(13);
  for (int n : {4, 6, 8}) {
    Statevector state(n);
    for (int i = 0; i < 6 * n; ++i) {
      apply(state, random_gate(rng, n));
    }
    for (int cut = 1; cut < n; ++cut) {
      const EntanglementSpectrum spectrum = schmidt_spectrum(state, cut);
      const Eigen::VectorXd oracle = test::partial_trace_eigenvalues(state, cut);
      // The SVD yields min(2^cut, 2^(n-cut)) values; any further rho_A
      // eigenvalues are exact zeros.
      REQUIRE(spectrum.values.size() <= oracle.size());
      CHECK((spectrum.values - oracle.head(spectrum.values.size())).cwiseAbs().maxCoeff() < 1e-10);
      if (oracle.size() > spectrum.values.size()) {
        CHECK(oracle.tail(oracle.size() - spectrum.values.size()).cwiseAbs().maxCoeff() < 1e-12);
      }
      CHECK(std::abs(spectrum.values.sum() - 1.0) < 1e-9);
      for (Eigen::Index k = 0; k < spectrum.values.size(); ++k) {
        CHECK(spectrum.values[k] >= 0.0);
        if (k > 0) CHECK(spectrum.values[k] <= spectrum.values[k - 1]);
      }
    }
  }
}
