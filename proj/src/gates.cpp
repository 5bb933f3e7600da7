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

#include "mgspec/gates.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mgspec {

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXcd ginibre(Rng& rng, Eigen::Index n) {
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = complex_gaussian(rng);
    }
  }
  return g;
}

// Ginibre -> QR; multiplying Q by the phases of diag(R) makes the
// distribution exactly Haar on U(n).
Eigen::MatrixXcd haar_unitary(Rng& rng, Eigen::Index n) {
  const Eigen::MatrixXcd g = ginibre(rng, n);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

LocalUnitary matchgate(const MatchgateParams& params, int site) {
  if (unitarity_defect(params.a) > kUnitaryTolerance || unitarity_defect(params.b) > kUnitaryTolerance) {
    throw std::invalid_argument("matchgate: blocks must be unitary");
  }
  if (std::abs(params.a.determinant() - params.b.determinant()) > kDeterminantTolerance) {
    throw std::invalid_argument("matchgate: blocks must share a determinant");
  }
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = params.a(0, 0);
  u(0, 3) = params.a(0, 1);
  u(3, 0) = params.a(1, 0);
  u(3, 3) = params.a(1, 1);
  u(1, 1) = params.b(0, 0);
  u(1, 2) = params.b(0, 1);
  u(2, 1) = params.b(1, 0);
  u(2, 2) = params.b(1, 1);
  return LocalUnitary{site, u};
}

Eigen::Matrix2cd random_su2(Rng& rng) {
  Eigen::Matrix2cd u = haar_unitary(rng, 2);
  // Divide by a square root of the determinant; |det| = 1 already.
  const Complex det = u.determinant();
  u /= std::sqrt(det);
  return u;
}

Eigen::Matrix4cd random_u4(Rng& rng) { return haar_unitary(rng, 4); }

LocalUnitary random_matchgate(Rng& rng, int site) {
  MatchgateParams params;
  params.a = random_su2(rng);
  params.b = random_su2(rng);
  return matchgate(params, site);
}

LocalUnitary random_haar_two_qubit(Rng& rng, int site) { return LocalUnitary{site, random_u4(rng)}; }

std::string clifford_class_key(const Eigen::Matrix4cd& u) {
  // Divide out the phase of the first entry of significant magnitude, then
  // quantize. Clifford entries have magnitude 0 or at least 1/2, and
  // distinct classes differ by far more than the rounding step.
  Complex phase(1.0, 0.0);
  for (Eigen::Index i = 0; i < 16; ++i) {
    const Complex v = u(i / 4, i % 4);
    if (std::abs(v) > 1e-6) {
      phase = v / std::abs(v);
      break;
    }
  }
  std::string key;
  key.reserve(16 * 12);
  char buf[16];
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const Complex v = u(i, j) / phase;
      const int re = static_cast<int>(std::lround(v.real() * 1000.0));
      const int im = static_cast<int>(std::lround(v.imag() * 1000.0));
      std::snprintf(buf, sizeof(buf), "%d,%d;", re == 0 ? 0 : re, im == 0 ? 0 : im);
      key += buf;
    }
  }
  return key;
}

const std::vector<Eigen::Matrix4cd>& two_qubit_clifford_table() {
  static const std::vector<Eigen::Matrix4cd> table = [] {
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
    const std::vector<Eigen::Matrix4cd> generators = {
        kron2(hadamard(), id2), kron2(id2, hadamard()), kron2(phase_s(), id2),
        kron2(id2, phase_s()), cnot_gate()};
    std::vector<Eigen::Matrix4cd> found;
    std::unordered_set<std::string> seen;
    std::deque<Eigen::Matrix4cd> frontier;
    found.reserve(kTwoQubitCliffordCount);
    found.push_back(Eigen::Matrix4cd::Identity());
    seen.insert(clifford_class_key(found.front()));
    frontier.push_back(found.front());
    while (!frontier.empty()) {
      const Eigen::Matrix4cd current = frontier.front();
      frontier.pop_front();
      for (const auto& g : generators) {
        Eigen::Matrix4cd next = g * current;
        const std::string key = clifford_class_key(next);
        if (seen.insert(key).second) {
          found.push_back(next);
          frontier.push_back(std::move(next));
        }
      }
    }
    if (found.size() != kTwoQubitCliffordCount) {
      throw std::logic_error("two_qubit_clifford_table: closure has unexpected size");
    }
    return found;
  }();
  return table;
}

LocalUnitary random_two_qubit_clifford(Rng& rng, int site) {
  const auto& table = two_qubit_clifford_table();
  const std::size_t index = uniform_below(rng, table.size());
  return LocalUnitary{site, table[index]};
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Eigen::Matrix2cd phase_s() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, Complex(0, 1);
  return m;
}

Eigen::Matrix2cd rotation_y(double theta) {
  Eigen::Matrix2cd m;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  m << c, -s, s, c;
  return m;
}

Eigen::Matrix4cd swap_gate() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

Eigen::Matrix4cd cnot_gate() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Eigen::Matrix4cd cnot_reversed_gate() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 3) = 1;
  m(2, 2) = 1;
  m(3, 1) = 1;
  return m;
}

}  // namespace mgspec
