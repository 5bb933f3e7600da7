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

#include "mgspec/pauli.hpp"
#include "test_helpers.hpp"

using namespace mgspec;

TEST_CASE("jordan wigner strings") {
  CHECK(jordan_wigner(1, 3).to_string() == "+1*XII");
  CHECK(jordan_wigner(2, 3).to_string() == "+1*YII");
  CHECK(jordan_wigner(3, 3).to_string() == "+1*ZXI");
  CHECK(jordan_wigner(4, 3).to_string() == "+1*ZYI");
  CHECK(jordan_wigner(6, 3).to_string() == "+1*ZZY");
  CHECK_THROWS_AS(jordan_wigner(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(jordan_wigner(7, 3), std::invalid_argument);
}

TEST_CASE("pauli multiplication matches dense matrices exhaustively for 2 qubits") {
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      PauliString lhs(2), rhs(2);
      lhs.set_letter(1, static_cast<PauliLetter>(a / 4));
      lhs.set_letter(2, static_cast<PauliLetter>(a % 4));
      rhs.set_letter(1, static_cast<PauliLetter>(b / 4));
      rhs.set_letter(2, static_cast<PauliLetter>(b % 4));
      rhs.multiply_phase(b % 3);  // mix in nontrivial phases
      const PauliString product = lhs * rhs;
      const Eigen::MatrixXcd oracle = dense(lhs) * dense(rhs);
      CHECK((dense(product) - oracle).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("anticommutation of the Jordan-Wigner Majoranas") {
  const int n = 4;
  for (int i = 1; i <= 2 * n; ++i) {
    for (int j = 1; j <= 2 * n; ++j) {
      const PauliString ci = jordan_wigner(i, n);
      const PauliString cj = jordan_wigner(j, n);
      const Eigen::MatrixXcd anti = dense(ci) * dense(cj) + dense(cj) * dense(ci);
      const double expected = i == j ? 2.0 : 0.0;
      CHECK((anti - expected * Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("clifford conjugation pushes a Pauli through the circuit") {
  Circuit h_only;
  h_only.num_qubits = 2;
  h_only.layers.push_back(Layer{{LocalUnitary{1, hadamard()}}});
  const PauliString z1 = PauliString::single(2, 1, PauliLetter::Z);
  CHECK(conjugate_pauli_by_clifford(z1, h_only).to_string() == "+1*XI");

  Circuit cnot;
  cnot.num_qubits = 2;
  cnot.layers.push_back(Layer{{LocalUnitary{1, cnot_gate()}}});
  CHECK(conjugate_pauli_by_clifford(PauliString::single(2, 1, PauliLetter::X), cnot).to_string() ==
        "+1*XX");
  CHECK(conjugate_pauli_by_clifford(PauliString::single(2, 2, PauliLetter::Z), cnot).to_string() ==
        "+1*ZZ");
  CHECK(conjugate_pauli_by_clifford(PauliString::single(2, 2, PauliLetter::X), cnot).to_string() ==
        "+1*IX");

  // Phases survive: Y on the control picks up the target X.
  const PauliString y1 = PauliString::single(2, 1, PauliLetter::Y);
  const PauliString pushed = conjugate_pauli_by_clifford(y1, cnot);
  CHECK((dense(pushed) - cnot_gate() * dense(y1) * cnot_gate().adjoint()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("conjugation by a sampled Clifford stays a Pauli, dense-checked") {
  Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Circuit circuit;
    circuit.num_qubits = 3;
    circuit.layers.push_back(Layer{{random_two_qubit_clifford(rng, 1 + static_cast<int>(uniform_below(rng, 2)))}});
    for (int site = 1; site <= 3; ++site) {
      const PauliString p = PauliString::single(3, site, PauliLetter::Y);
      const PauliString pushed = conjugate_pauli_by_clifford(p, circuit);
      const Eigen::MatrixXcd u = test::dense_unitary(circuit);
      CHECK((dense(pushed) - u * dense(p) * u.adjoint()).cwiseAbs().maxCoeff() < 1e-11);
    }
  }
}

TEST_CASE("non-Clifford gates are rejected") {
  Rng rng(7);
  Circuit matchgates;
  matchgates.num_qubits = 2;
  matchgates.layers.push_back(Layer{{random_matchgate(rng, 1)}});
  CHECK_THROWS_AS(conjugate_pauli_by_clifford(PauliString::single(2, 1, PauliLetter::Z), matchgates),
                  std::invalid_argument);

  Eigen::Matrix2cd t_gate = Eigen::Matrix2cd::Identity();
  t_gate(1, 1) = std::polar(1.0, 0.25 * 3.14159265358979323846);
  Circuit t_circuit;
  t_circuit.num_qubits = 2;
  t_circuit.layers.push_back(Layer{{LocalUnitary{1, t_gate}}});
  CHECK_THROWS_AS(conjugate_pauli_by_clifford(PauliString::single(2, 1, PauliLetter::X), t_circuit),
                  std::invalid_argument);
}

TEST_CASE("majorana support solves the Jordan-Wigner system") {
  for (int k = 1; k <= 4; ++k) {
    const PauliString z_k = PauliString::single(4, k, PauliLetter::Z);
    const std::vector<int> support = majorana_support(z_k);
    REQUIRE(support.size() == 2);
    CHECK(support[0] == 2 * k - 1);
    CHECK(support[1] == 2 * k);
  }
  CHECK(majorana_support(PauliString::single(4, 1, PauliLetter::X)) == std::vector<int>{1});
  CHECK(majorana_support(PauliString::single(4, 2, PauliLetter::X)) == std::vector<int>{1, 2, 3});

  // Property: the product of the support Majoranas reproduces the letters.
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    PauliString p(5);
    bool trivial = true;
    for (int site = 1; site <= 5; ++site) {
      const auto letter = static_cast<PauliLetter>(uniform_below(rng, 4));
      p.set_letter(site, letter);
      trivial = trivial && letter == PauliLetter::I;
    }
    if (trivial) continue;
    const std::vector<int> support = majorana_support(p);
    PauliString product(5);
    for (int index : support) product = product * jordan_wigner(index, 5);
    CHECK(product.letters_equal(p));
  }
}

TEST_CASE("fermionic weights of the conjugation circuits") {
  // Raw Majorana factor counts per qubit, forward-conjugated.
  CHECK(majorana_weights(conjugation_circuit(ConjugationKind::C1, 4), 4) ==
        std::vector<int>{1, 2, 2, 2});
  CHECK(majorana_weights(conjugation_circuit(ConjugationKind::C2, 6), 6) ==
        std::vector<int>{2, 6, 2, 6, 2, 4});
  CHECK(majorana_weights(conjugation_circuit(ConjugationKind::C3, 4), 4) ==
        std::vector<int>{2, 3, 2, 2});
  CHECK(majorana_weights(conjugation_circuit(ConjugationKind::C4, 4), 4) ==
        std::vector<int>{3, 2, 5, 2});

  // Identity encoding: Z_k is always a pair.
  Circuit empty;
  empty.num_qubits = 5;
  CHECK(majorana_weights(empty, 5) == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(fermionic_weight(empty, 5) == 2);

  CHECK(fermionic_weight(conjugation_circuit(ConjugationKind::C1, 8), 8) == 2);
  CHECK(fermionic_weight(conjugation_circuit(ConjugationKind::C2, 8), 8) == 6);
  CHECK(fermionic_weight(conjugation_circuit(ConjugationKind::C3, 8), 8) == 2);
  CHECK(fermionic_weight(conjugation_circuit(ConjugationKind::C4, 8), 8) == 4);
}
