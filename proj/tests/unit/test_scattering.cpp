// SPDX-License-Identifier: Apache-2.0
//
// bdris: reciprocal BD-RIS scattering matrix design
// Copyright (C) 2026 The bdris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "bdris/scattering.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace bdris {
namespace {

TEST(ClassifyArchitecture, ByGroupSize) {
  EXPECT_EQ(classify_architecture(8, 1), Architecture::SingleConnected);
  EXPECT_EQ(classify_architecture(8, 2), Architecture::GroupConnected);
  EXPECT_EQ(classify_architecture(8, 8), Architecture::FullyConnected);
  // A single element is both; single-connected wins.
  EXPECT_EQ(classify_architecture(1, 1), Architecture::SingleConnected);
}

TEST(ArchitectureSpec, ParsesLabels) {
  EXPECT_EQ(ArchitectureSpec::parse("sc").group_size, 1);
  EXPECT_EQ(ArchitectureSpec::parse("fc").group_size, 0);
  EXPECT_EQ(ArchitectureSpec::parse("gc4").group_size, 4);
  EXPECT_EQ(ArchitectureSpec::parse("gc12").label, "gc12");
}

TEST(ArchitectureSpec, RejectsBadLabels) {
  for (const char* bad : {"", "gc", "gc0", "gcx", "gc2a", "xx", "FC"}) {
    EXPECT_THROW(ArchitectureSpec::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(ArchitectureSpec, ResolvesGroupSize) {
  EXPECT_EQ(ArchitectureSpec::parse("fc").resolve_group_size(16), 16);
  EXPECT_EQ(ArchitectureSpec::parse("gc4").resolve_group_size(16), 4);
  EXPECT_THROW(ArchitectureSpec::parse("gc4").resolve_group_size(6),
               std::invalid_argument);
}

TEST(ScatteringMatrix, IdentityShape) {
  const auto s = ScatteringMatrix::identity(8, 2);
  EXPECT_EQ(s.n_elements(), 8);
  EXPECT_EQ(s.n_groups(), 4);
  EXPECT_EQ(s.group_size(), 2);
  EXPECT_EQ(s.architecture(), Architecture::GroupConnected);
  EXPECT_TRUE(s.dense().isApprox(CMatrix::Identity(8, 8)));
}

TEST(ScatteringMatrix, DenseRoundTrip) {
  Rng rng(3);
  const auto s = testing::random_blocks(rng, 6, 3);
  const CMatrix d = s.dense();
  EXPECT_EQ(d(0, 3), Complex(0.0, 0.0));
  EXPECT_EQ(d(5, 1), Complex(0.0, 0.0));
  const auto back = ScatteringMatrix::from_dense(d, 3);
  ASSERT_EQ(back.n_groups(), 2);
  EXPECT_EQ(back.block(0), s.block(0));
  EXPECT_EQ(back.block(1), s.block(1));
}

TEST(ScatteringMatrix, FromDenseRejectsOffBlockEntries) {
  CMatrix d = CMatrix::Identity(4, 4);
  d(0, 3) = 1e-3;
  EXPECT_THROW(ScatteringMatrix::from_dense(d, 2), std::invalid_argument);
  EXPECT_NO_THROW(ScatteringMatrix::from_dense(d, 2, 1e-2));
  EXPECT_NO_THROW(ScatteringMatrix::from_dense(d, 4));
  EXPECT_THROW(ScatteringMatrix::from_dense(d, 3), std::invalid_argument);
  EXPECT_THROW(ScatteringMatrix::from_dense(CMatrix::Zero(2, 3), 1),
               std::invalid_argument);
}

TEST(ScatteringMatrix, RejectsInconsistentBlocks) {
  EXPECT_THROW(ScatteringMatrix(std::vector<CMatrix>{}), std::invalid_argument);
  std::vector<CMatrix> mixed{CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)};
  EXPECT_THROW(ScatteringMatrix(std::move(mixed)), std::invalid_argument);
  std::vector<CMatrix> rect{CMatrix::Zero(2, 3)};
  EXPECT_THROW(ScatteringMatrix(std::move(rect)), std::invalid_argument);
  EXPECT_THROW(ScatteringMatrix::identity(6, 4), std::invalid_argument);
}

TEST(ScatteringMatrix, BlockAccessIsBoundsChecked) {
  auto s = ScatteringMatrix::identity(4, 2);
  EXPECT_THROW(s.block(2), std::out_of_range);
}

}  // namespace
}  // namespace bdris
