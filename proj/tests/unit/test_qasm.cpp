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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qcomb/bench.hpp"
#include "qcomb/errors.hpp"
#include "qcomb/qasm.hpp"

namespace qcomb {
namespace {

TEST(ParseCircuit, SingleLineProgram) {
  const Circuit c = parse_circuit("qreg q[2]; cx q[0],q[1];");
  Circuit expected(2);
  expected.cx(0, 1);
  EXPECT_EQ(c, expected);
}

TEST(ParseCircuit, OpaqueGateWithoutAngles) {
  const Circuit c = parse_circuit("qreg q[1]; u q[0];");
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(std::get<SingleQubitGate>(c.gates()[0]), (SingleQubitGate{"u", {}, 0}));
}

TEST(ParseCircuit, HeadersCommentsAndAngleExpressions) {
  const Circuit c = parse_circuit(
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "qreg r[3]; // three qubits\n"
      "rz(pi/2) r[2];\n"
      "u(-pi, 2*(0.5+0.25), 1e-3) r[0];\n"
      "CX r[2], r[0];\n");
  ASSERT_EQ(c.size(), 3U);
  const auto& rz = std::get<SingleQubitGate>(c.gates()[0]);
  EXPECT_EQ(rz.label, "rz");
  EXPECT_DOUBLE_EQ(rz.params.at(0), std::numbers::pi / 2);
  const auto& u = std::get<SingleQubitGate>(c.gates()[1]);
  EXPECT_DOUBLE_EQ(u.params.at(0), -std::numbers::pi);
  EXPECT_DOUBLE_EQ(u.params.at(1), 1.5);
  EXPECT_DOUBLE_EQ(u.params.at(2), 1e-3);
  EXPECT_EQ(std::get<Cnot>(c.gates()[2]), (Cnot{2, 0}));
}

TEST(ParseCircuit, ReportsPositionOfErrors) {
  try {
    parse_circuit("qreg q[2];\ncx q[0],q[2];\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 11U);
  }
  try {
    parse_circuit("qreg q[3];\n  ccx q[0],q[1],q[2];");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 3U);
    EXPECT_NE(std::string(e.what()).find("multi-qubit"), std::string::npos);
  }
}

TEST(ParseCircuit, RejectsMalformedInput) {
  EXPECT_THROW(parse_circuit("cx q[0],q[1];"), ParseError);
  EXPECT_THROW(parse_circuit("qreg q[2]; cx q[0] q[1];"), ParseError);
  EXPECT_THROW(parse_circuit("qreg q[2]; cx q[1],q[1];"), ParseError);
  EXPECT_THROW(parse_circuit("qreg q[2]; h p[0];"), ParseError);
  EXPECT_THROW(parse_circuit("qreg q[2]; creg c[2];"), ParseError);
  EXPECT_THROW(parse_circuit("qreg q[2]; h q[0]"), ParseError);
  EXPECT_THROW(parse_circuit("qreg q[2]; rz(pi q[0];"), ParseError);
  EXPECT_THROW(parse_circuit("qreg q[2]; h q[0]; $"), ParseError);
  EXPECT_THROW(parse_circuit(""), ParseError);
}

TEST(WriteCircuit, RoundTripsLargeRandomCircuit) {
  Circuit c = random_circuit(9, 1000, 0.024, 99);
  c.gate("rz", 3, {0.1 + 0.2});
  c.gate("u", 0, {std::numbers::pi, -1e-17, 12345.678});
  ASSERT_EQ(c.size(), 1026U);
  EXPECT_EQ(parse_circuit(write_circuit(c)), c);
}

TEST(ParseGateSpec, LabelsAndAngles) {
  EXPECT_EQ(parse_gate_spec("V"), (SingleQubitGate{"V", {}, 0}));
  EXPECT_EQ(parse_gate_spec("rx(pi)").params, std::vector<double>{std::numbers::pi});
  EXPECT_THROW(parse_gate_spec("rx(pi) q[0]"), ParseError);
}

}  // namespace
}  // namespace qcomb
