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

#include "mgspec/pauli.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "mgspec/gates.hpp"

namespace mgspec {

namespace {

using Complex = std::complex<double>;

// Single-qubit products a*b = i^phase * letter.
struct LetterProduct {
  PauliLetter letter;
  int phase;
};

constexpr LetterProduct product_table[4][4] = {
    // I*            X*                 Y*                 Z*
    {{PauliLetter::I, 0}, {PauliLetter::X, 0}, {PauliLetter::Y, 0}, {PauliLetter::Z, 0}},
    {{PauliLetter::X, 0}, {PauliLetter::I, 0}, {PauliLetter::Z, 1}, {PauliLetter::Y, 3}},
    {{PauliLetter::Y, 0}, {PauliLetter::Z, 3}, {PauliLetter::I, 0}, {PauliLetter::X, 1}},
    {{PauliLetter::Z, 0}, {PauliLetter::Y, 1}, {PauliLetter::X, 3}, {PauliLetter::I, 0}},
};

Eigen::Matrix2cd letter_matrix(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::I:
      return Eigen::Matrix2cd::Identity();
    case PauliLetter::X:
      return pauli_x();
    case PauliLetter::Y:
      return pauli_y();
    case PauliLetter::Z:
      return pauli_z();
  }
  throw std::logic_error("letter_matrix: bad letter");
}

char letter_char(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Y:
      return 'Y';
    case PauliLetter::Z:
      return 'Z';
  }
  return '?';
}

int phase_power_of(Complex value, double tolerance) {
  static const std::array<Complex, 4> units = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  for (int t = 0; t < 4; ++t) {
    if (std::abs(value - units[t]) <= tolerance) return t;
  }
  throw std::invalid_argument("conjugate_pauli_by_clifford: gate is not Clifford");
}

// Conjugates the letters at the gate's sites by the gate matrix and
// decomposes the result back into the Pauli basis. Exactly one coefficient
// of unit modulus must survive.
void conjugate_by_gate(PauliString& p, const LocalUnitary& gate) {
  const int arity = gate.arity();
  const Eigen::Index dim = arity == 1 ? 2 : 4;
  Eigen::MatrixXcd local = letter_matrix(p.letter(gate.site));
  if (arity == 2) {
    const Eigen::Matrix2cd second = letter_matrix(p.letter(gate.site + 1));
    Eigen::Matrix4cd kron;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        kron.block<2, 2>(2 * i, 2 * j) = local(i, j) * second;
      }
    }
    local = kron;
  }
  const Eigen::MatrixXcd conjugated = gate.matrix * local * gate.matrix.adjoint();

  int found = 0;
  for (int a = 0; a < (arity == 1 ? 4 : 16); ++a) {
    const PauliLetter first = static_cast<PauliLetter>(arity == 1 ? a : a / 4);
    const PauliLetter second = static_cast<PauliLetter>(a % 4);
    Eigen::MatrixXcd basis = letter_matrix(first);
    if (arity == 2) {
      const Eigen::Matrix2cd b2 = letter_matrix(second);
      Eigen::Matrix4cd kron;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          kron.block<2, 2>(2 * i, 2 * j) = basis(i, j) * b2;
        }
      }
      basis = kron;
    }
    const Complex coeff = (basis.adjoint() * conjugated).trace() / static_cast<double>(dim);
    if (std::abs(coeff) < 1e-9) continue;
    if (++found > 1) {
      throw std::invalid_argument("conjugate_pauli_by_clifford: gate is not Clifford");
    }
    p.multiply_phase(phase_power_of(coeff, 1e-9));
    p.set_letter(gate.site, first);
    if (arity == 2) p.set_letter(gate.site + 1, second);
  }
  if (found == 0) {
    throw std::invalid_argument("conjugate_pauli_by_clifford: conjugation lost the operator");
  }
}

}  // namespace

PauliString::PauliString(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 32) {
    throw std::invalid_argument("PauliString: num_qubits out of range");
  }
  letters_.assign(static_cast<std::size_t>(num_qubits), PauliLetter::I);
}

PauliString PauliString::single(int num_qubits, int site, PauliLetter letter) {
  PauliString p(num_qubits);
  p.set_letter(site, letter);
  return p;
}

PauliLetter PauliString::letter(int site) const {
  if (site < 1 || site > num_qubits()) {
    throw std::invalid_argument("PauliString: site out of range");
  }
  return letters_[static_cast<std::size_t>(site - 1)];
}

void PauliString::set_letter(int site, PauliLetter letter) {
  if (site < 1 || site > num_qubits()) {
    throw std::invalid_argument("PauliString: site out of range");
  }
  letters_[static_cast<std::size_t>(site - 1)] = letter;
}

void PauliString::multiply_phase(int power) { phase_power_ = ((phase_power_ + power) % 4 + 4) % 4; }

bool PauliString::is_identity_letters() const {
  for (PauliLetter l : letters_) {
    if (l != PauliLetter::I) return false;
  }
  return true;
}

bool PauliString::letters_equal(const PauliString& other) const { return letters_ == other.letters_; }

std::string PauliString::to_string() const {
  static const char* phases[4] = {"+1", "+i", "-1", "-i"};
  std::string out = phases[phase_power_];
  out += '*';
  for (PauliLetter l : letters_) out += letter_char(l);
  return out;
}

PauliString operator*(const PauliString& lhs, const PauliString& rhs) {
  if (lhs.num_qubits() != rhs.num_qubits()) {
    throw std::invalid_argument("PauliString: operand size mismatch");
  }
  PauliString out(lhs.num_qubits());
  out.phase_power_ = 0;
  for (int site = 1; site <= lhs.num_qubits(); ++site) {
    const LetterProduct prod =
        product_table[static_cast<int>(lhs.letter(site))][static_cast<int>(rhs.letter(site))];
    out.set_letter(site, prod.letter);
    out.multiply_phase(prod.phase);
  }
  out.multiply_phase(lhs.phase_power_ + rhs.phase_power_);
  return out;
}

Eigen::MatrixXcd dense(const PauliString& p) {
  static const std::array<Complex, 4> units = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int site = 1; site <= p.num_qubits(); ++site) {
    const Eigen::Matrix2cd m = letter_matrix(p.letter(site));
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block<2, 2>(2 * i, 2 * j) = out(i, j) * m;
      }
    }
    out = std::move(next);
  }
  return units[static_cast<std::size_t>(p.phase_power())] * out;
}

PauliString jordan_wigner(int majorana_index, int num_qubits) {
  if (majorana_index < 1 || majorana_index > 2 * num_qubits) {
    throw std::invalid_argument("jordan_wigner: index out of range");
  }
  const int site = (majorana_index + 1) / 2;
  PauliString p(num_qubits);
  for (int m = 1; m < site; ++m) {
    p.set_letter(m, PauliLetter::Z);
  }
  p.set_letter(site, majorana_index % 2 == 1 ? PauliLetter::X : PauliLetter::Y);
  return p;
}

PauliString conjugate_pauli_by_clifford(PauliString p, const Circuit& clifford) {
  if (clifford.num_qubits != p.num_qubits()) {
    throw std::invalid_argument("conjugate_pauli_by_clifford: qubit count mismatch");
  }
  for (const Layer& layer : clifford.layers) {
    for (const LocalUnitary& gate : layer.gates) {
      conjugate_by_gate(p, gate);
    }
  }
  return p;
}

std::vector<int> majorana_support(const PauliString& p) {
  const int n = p.num_qubits();
  const int dims = 2 * n;

  // Row d of the system is one symplectic coordinate (x_1..x_N, z_1..z_N);
  // bit j of a row says whether Majorana j+1 carries that coordinate.
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(dims), 0);
  std::vector<int> rhs(static_cast<std::size_t>(dims), 0);
  for (int j = 0; j < dims; ++j) {
    const int site = j / 2 + 1;  // Majorana j+1 sits on this site
    const bool is_y = (j % 2) == 1;
    rows[static_cast<std::size_t>(site - 1)] |= std::uint64_t(1) << j;  // x bit at `site`
    if (is_y) rows[static_cast<std::size_t>(n + site - 1)] |= std::uint64_t(1) << j;
    for (int m = 1; m < site; ++m) {
      rows[static_cast<std::size_t>(n + m - 1)] |= std::uint64_t(1) << j;  // Z tail
    }
  }
  for (int site = 1; site <= n; ++site) {
    const PauliLetter l = p.letter(site);
    const bool x = l == PauliLetter::X || l == PauliLetter::Y;
    const bool z = l == PauliLetter::Z || l == PauliLetter::Y;
    rhs[static_cast<std::size_t>(site - 1)] = x ? 1 : 0;
    rhs[static_cast<std::size_t>(n + site - 1)] = z ? 1 : 0;
  }

  // Gauss-Jordan over F2. The Jordan-Wigner vectors form a basis, so the
  // solution exists and is unique.
  std::vector<int> pivot_row(static_cast<std::size_t>(dims), -1);
  int next_row = 0;
  for (int col = 0; col < dims && next_row < dims; ++col) {
    int pivot = -1;
    for (int r = next_row; r < dims; ++r) {
      if (rows[static_cast<std::size_t>(r)] >> col & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(next_row)]);
    std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(next_row)]);
    for (int r = 0; r < dims; ++r) {
      if (r != next_row && (rows[static_cast<std::size_t>(r)] >> col & 1)) {
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(next_row)];
        rhs[static_cast<std::size_t>(r)] ^= rhs[static_cast<std::size_t>(next_row)];
      }
    }
    pivot_row[static_cast<std::size_t>(col)] = next_row;
    ++next_row;
  }

  std::vector<int> support;
  for (int col = 0; col < dims; ++col) {
    const int r = pivot_row[static_cast<std::size_t>(col)];
    if (r < 0) {
      throw std::logic_error("majorana_support: singular Jordan-Wigner system");
    }
    if (rhs[static_cast<std::size_t>(r)]) support.push_back(col + 1);
  }
  return support;
}

std::vector<int> majorana_weights(const Circuit& clifford, int num_qubits) {
  std::vector<int> weights;
  weights.reserve(static_cast<std::size_t>(num_qubits));
  for (int k = 1; k <= num_qubits; ++k) {
    const PauliString z_k = PauliString::single(num_qubits, k, PauliLetter::Z);
    const PauliString conjugated = conjugate_pauli_by_clifford(z_k, clifford);
    weights.push_back(static_cast<int>(majorana_support(conjugated).size()));
  }
  return weights;
}

int fermionic_weight(const Circuit& clifford, int num_qubits) {
  int max_even = 0;
  for (int d : majorana_weights(clifford, num_qubits)) {
    max_even = std::max(max_even, 2 * (d / 2));
  }
  return max_even;
}

}  // namespace mgspec
