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

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcomb/errors.hpp"
#include "qcomb/rowcol.hpp"

namespace qcomb {
namespace {

std::vector<std::size_t> identity_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  return rows;
}

TEST(EliminateColumn, WorkedExampleFirstStep) {
  BitMatrix p = testing::rowcol_example_matrix();
  const Topology k4 = Topology::complete(4);
  const auto rows = identity_rows(4);
  EXPECT_EQ(eliminate_column(p, k4, rows, 0, 0), (std::vector<RowOp>{{0, 1}}));
  EXPECT_EQ(p.column_weight(0), 1U);
  EXPECT_TRUE(p.get(0, 0));
}

TEST(EliminateColumn, UnitColumnNeedsNothing) {
  BitMatrix p = BitMatrix::identity(3);
  const auto rows = identity_rows(3);
  EXPECT_TRUE(eliminate_column(p, Topology::line(3), rows, 1, 1).empty());
}

TEST(EliminateColumn, ZeroColumnOnActiveRowsThrows) {
  BitMatrix p = BitMatrix::identity(3);
  std::vector<std::size_t> rows{0, kNoRow, 2};
  EXPECT_THROW(eliminate_column(p, Topology::complete(3), rows, 0, 1), SynthesisError);
}

TEST(EliminateColumn, StaysOnGridEdgesAndClearsColumn) {
  std::mt19937_64 rng(9);
  const Topology grid = Topology::grid(3, 3);
  const auto rows = identity_rows(9);
  for (int trial = 0; trial < 100; ++trial) {
    BitMatrix p = testing::random_invertible(9, rng);
    const Vertex pivot = trial % 9;
    if (p.column_weight(pivot) == 0) continue;
    const BitMatrix before = p;
    const auto ops = eliminate_column(p, grid, rows, pivot, pivot);
    BitMatrix replay = before;
    for (const auto& op : ops) {
      EXPECT_TRUE(grid.has_edge(op.src, op.dst));
      replay.row_add(op.src, op.dst);
    }
    EXPECT_EQ(replay, p);
    EXPECT_EQ(p.column_weight(pivot), 1U);
    EXPECT_TRUE(p.get(pivot, pivot));
  }
}

TEST(EliminateRow, WorkedExampleFirstStep) {
  BitMatrix p = testing::rowcol_example_matrix();
  const Topology k4 = Topology::complete(4);
  const auto rows = identity_rows(4);
  eliminate_column(p, k4, rows, 0, 0);
  EXPECT_EQ(eliminate_row(p, k4, rows, 0, 0), (std::vector<RowOp>{{3, 0}}));
  EXPECT_TRUE(p.row_is_unit(0, 0));
}

TEST(EliminateRow, UnitRowNeedsNothing) {
  BitMatrix p = BitMatrix::identity(4);
  const auto rows = identity_rows(4);
  EXPECT_TRUE(eliminate_row(p, Topology::complete(4), rows, 2, 2).empty());
}

TEST(EliminateRow, SecondQubitUsesRowsTwoAndThree) {
  BitMatrix p = testing::rowcol_example_matrix();
  const Topology k4 = Topology::complete(4);
  auto rows = identity_rows(4);
  eliminate_column(p, k4, rows, 0, 0);
  eliminate_row(p, k4, rows, 0, 0);
  rows[0] = kNoRow;
  EXPECT_TRUE(eliminate_column(p, k4, rows, 1, 1).empty());
  auto ops = eliminate_row(p, k4, rows, 1, 1);
  std::sort(ops.begin(), ops.end());
  EXPECT_EQ(ops, (std::vector<RowOp>{{2, 1}, {3, 1}}));
}

TEST(EliminateRow, SteinerPointsCancelOnALine) {
  // Row 0 needs row 2 only; row 1 sits between them on the line.
  BitMatrix p = BitMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  const auto rows = identity_rows(3);
  const auto ops = eliminate_row(p, Topology::line(3), rows, 0, 0);
  EXPECT_TRUE(p.row_is_unit(0, 0));
  EXPECT_EQ(p.row(1), BitVector::from_string("011"));
  EXPECT_EQ(ops.size(), 3U);
}

TEST(Rowcol, WorkedExampleFiveOperations) {
  const BitMatrix p = testing::rowcol_example_matrix();
  const std::vector<Vertex> order{0, 1, 2, 3};
  auto ops = rowcol_operations(p, Topology::complete(4), order);
  EXPECT_EQ(ops.size(), 5U);
  EXPECT_EQ(ops.front(), (RowOp{0, 1}));
  EXPECT_EQ(ops[1], (RowOp{3, 0}));
  std::sort(ops.begin(), ops.end());
  EXPECT_EQ(ops, (std::vector<RowOp>{{0, 1}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}));
  const Circuit c = rowcol(p, Topology::complete(4), order);
  EXPECT_EQ(c.cnot_count(), 5U);
  EXPECT_EQ(parity_matrix(c), p);
}

TEST(Rowcol, IdentityGivesEmptyCircuit) {
  EXPECT_TRUE(rowcol(BitMatrix::identity(5), Topology::line(5)).empty());
}

TEST(Rowcol, RejectsBadInput) {
  const BitMatrix singular = BitMatrix::from_rows({{1, 1}, {1, 1}});
  EXPECT_THROW(rowcol(singular, Topology::line(2)), SynthesisError);
  EXPECT_THROW(rowcol(BitMatrix::identity(3), Topology::line(2)), SynthesisError);
  const std::vector<Vertex> cutting_first{1, 0, 2};
  EXPECT_THROW(rowcol(BitMatrix::identity(3), Topology::line(3), cutting_first), std::invalid_argument);
}

TEST(Rowcol, PreservesParityAndEdgesOnQx5) {
  std::mt19937_64 rng(2024);
  const Topology qx5 = builtin_topology("ibm-qx5");
  for (int trial = 0; trial < 100; ++trial) {
    const BitMatrix p = testing::random_invertible(16, rng);
    const Circuit c = rowcol(p, qx5);
    ASSERT_EQ(parity_matrix(c), p);
    ASSERT_TRUE(testing::edges_respected(c, qx5));
  }
}

TEST(Rowcol, EliminatedRowsAndColumnsStayUnit) {
  std::mt19937_64 rng(77);
  const Topology g = builtin_topology("rigetti-16q-aspen");
  const BitMatrix p = testing::random_invertible(16, rng);
  BitMatrix work = p;
  auto rows = identity_rows(16);
  std::vector<bool> active = full_mask(g);
  std::vector<Vertex> done;
  for (std::size_t step = 0; step < 16; ++step) {
    const Vertex v = non_cutting_vertices(g, active).front();
    eliminate_column(work, g, rows, v, v);
    eliminate_row(work, g, rows, v, v);
    rows[v] = kNoRow;
    active[v] = false;
    done.push_back(v);
    for (Vertex d : done) {
      EXPECT_TRUE(work.row_is_unit(d, d));
      EXPECT_EQ(work.column_weight(d), 1U);
    }
  }
  EXPECT_EQ(work, BitMatrix::identity(16));
}

TEST(Rowcol, OutputRunsBackwardsThroughOperations) {
  std::mt19937_64 rng(5);
  const BitMatrix p = testing::random_invertible(6, rng);
  const Topology g = Topology::line(6);
  const auto ops = rowcol_operations(p, g);
  BitMatrix reduced = p;
  for (const auto& op : ops) reduced.row_add(op.src, op.dst);
  EXPECT_EQ(reduced, BitMatrix::identity(6));
  const Circuit c = circuit_from_operations(6, ops);
  EXPECT_EQ(std::get<Cnot>(c.gates().front()), (Cnot{ops.back().src, ops.back().dst}));
}

}  // namespace
}  // namespace qcomb
