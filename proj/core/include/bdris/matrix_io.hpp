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

#pragma once

#include "bdris/scattering.hpp"
#include "bdris/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bdris {

/// Text format for a stored scattering matrix:
///   R G
///   <R rows of R whitespace-separated entries written as re+imj / re-imj>
struct MatrixFile {
  CMatrix dense;
  int n_groups = 1;
};

/// Accepts "re+imj", "re-imj", "re" and "imj". Throws std::invalid_argument.
Complex parse_complex(std::string_view token);
std::string format_complex(Complex value);

MatrixFile parse_matrix(std::istream& in);
MatrixFile read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const ScatteringMatrix& theta);
void write_matrix_file(const std::filesystem::path& path,
                       const ScatteringMatrix& theta);

}  // namespace bdris
