// Copyright 2026 The qcomb Authors
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

#include "qcomb/simulator.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qcomb {

namespace {

using cd = std::complex<double>;

constexpr double kUnitaryTolerance = 1e-12;

Matrix2 make(cd a, cd b, cd c, cd d) {
  Matrix2 m;
  m << a, b, c, d;
  return m;
}

const Matrix2& gate_matrix(const SingleQubitGate& g, const GateBindings& bindings, Matrix2& scratch) {
  if (auto it = bindings.find(g.label); it != bindings.end()) return it->second;
  if (builtin_gate_matrix(g, scratch)) return scratch;
  throw std::invalid_argument("no unitary bound to gate '" + g.label + "'");
}

// Applies m to the qubit-q factor of every column of u.
void apply_single(Unitary& u, const Matrix2& m, Qubit q) {
  const auto dim = static_cast<std::size_t>(u.rows());
  const std::size_t bit = std::size_t{1} << q;
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    cd* v = u.col(col).data();
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const cd a = v[i];
      const cd b = v[i | bit];
      v[i] = m(0, 0) * a + m(0, 1) * b;
      v[i | bit] = m(1, 0) * a + m(1, 1) * b;
    }
  }
}

void apply_cnot(Unitary& u, Qubit control, Qubit target) {
  const auto dim = static_cast<std::size_t>(u.rows());
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    cd* v = u.col(col).data();
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & cbit) && !(i & tbit)) std::swap(v[i], v[i | tbit]);
    }
  }
}

void collect_opaque(const Circuit& c, GateBindings& out, std::mt19937_64& rng) {
  Matrix2 scratch;
  for (const auto& g : c.gates()) {
    const auto* sq = std::get_if<SingleQubitGate>(&g);
    if (sq == nullptr || out.contains(sq->label) || builtin_gate_matrix(*sq, scratch)) continue;
    out.emplace(sq->label, random_unitary(rng));
  }
}

}  // namespace

bool builtin_gate_matrix(const SingleQubitGate& g, Matrix2& out) {
  const cd i{0.0, 1.0};
  const auto& p = g.params;
  const double r = 1.0 / std::sqrt(2.0);
  if (p.empty()) {
    if (g.label == "h") {
      out = make(r, r, r, -r);
    } else if (g.label == "x") {
      out = make(0, 1, 1, 0);
    } else if (g.label == "z") {
      out = make(1, 0, 0, -1);
    } else if (g.label == "s") {
      out = make(1, 0, 0, i);
    } else if (g.label == "t") {
      out = make(1, 0, 0, std::exp(i * (M_PI / 4)));
    } else {
      return false;
    }
    return true;
  }
  if (p.size() == 1 && g.label == "rz") {
    out = make(std::exp(-i * (p[0] / 2)), 0, 0, std::exp(i * (p[0] / 2)));
    return true;
  }
  if (p.size() == 1 && g.label == "rx") {
    const double c = std::cos(p[0] / 2);
    const double s = std::sin(p[0] / 2);
    out = make(c, -i * s, -i * s, c);
    return true;
  }
  if (p.size() == 3 && g.label == "u") {
    const double c = std::cos(p[0] / 2);
    const double s = std::sin(p[0] / 2);
    out = make(c, -std::exp(i * p[2]) * s, std::exp(i * p[1]) * s, std::exp(i * (p[1] + p[2])) * c);
    return true;
  }
  return false;
}

Unitary simulate_unitary(const Circuit& c, const GateBindings& bindings) {
  if (c.n_qubits() > kMaxSimulatedQubits) {
    throw std::invalid_argument("simulate_unitary: " + std::to_string(c.n_qubits()) +
                                " qubits exceeds the cap of " + std::to_string(kMaxSimulatedQubits));
  }
  for (const auto& [label, m] : bindings) {
    if (!(m.adjoint() * m).isIdentity(kUnitaryTolerance)) {
      throw std::invalid_argument("binding for '" + label + "' is not unitary");
    }
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.n_qubits());
  Unitary u = Unitary::Identity(dim, dim);
  Matrix2 scratch;
  for (const auto& g : c.gates()) {
    if (const auto* cx = std::get_if<Cnot>(&g)) {
      apply_cnot(u, cx->control, cx->target);
    } else {
      const auto& sq = std::get<SingleQubitGate>(g);
      apply_single(u, gate_matrix(sq, bindings, scratch), sq.qubit);
    }
  }
  return u;
}

double trace_overlap(const Unitary& a, const Unitary& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace_overlap: dimension mismatch");
  }
  return std::abs(a.conjugate().cwiseProduct(b).sum()) / static_cast<double>(a.rows());
}

bool equivalent_up_to_phase(const Circuit& a, const Circuit& b, const GateBindings& bindings,
                            double tolerance) {
  if (a.n_qubits() != b.n_qubits()) return false;
  return trace_overlap(simulate_unitary(a, bindings), simulate_unitary(b, bindings)) >= 1.0 - tolerance;
}

Matrix2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix2 z;
  for (int r = 0; r < 2; ++r) {
    for (int col = 0; col < 2; ++col) z(r, col) = cd(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix2> qr(z);
  Matrix2 q = qr.householderQ();
  const Matrix2 rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) {
    const cd d = rmat(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

GateBindings random_bindings(const Circuit& a, const Circuit& b, std::mt19937_64& rng) {
  GateBindings out;
  collect_opaque(a, out, rng);
  collect_opaque(b, out, rng);
  return out;
}

}  // namespace qcomb
