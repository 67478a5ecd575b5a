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

#include "bdris/matrix_io.hpp"

#include "bdris/format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace bdris {

namespace {

double parse_real(std::string_view text, std::string_view token) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument("malformed complex entry '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty complex entry");
  if (token.back() != 'j' && token.back() != 'i') {
    return {parse_real(token, token), 0.0};
  }
  const std::string_view body = token.substr(0, token.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, token)};
  return {parse_real(body.substr(0, split), token),
          parse_real(body.substr(split), token)};
}

std::string format_complex(Complex value) {
  std::string out = format_double(value.real());
  out += std::signbit(value.imag()) ? '-' : '+';
  out += format_double(std::abs(value.imag()));
  out += 'j';
  return out;
}

MatrixFile parse_matrix(std::istream& in) {
  long long r = 0;
  long long g = 0;
  if (!(in >> r >> g)) throw std::invalid_argument("matrix file: missing 'R G' header");
  if (r < 1 || g < 1 || r % g != 0) {
    throw std::invalid_argument("matrix file: header needs R >= 1, G >= 1, G | R");
  }
  MatrixFile out;
  out.n_groups = static_cast<int>(g);
  out.dense.resize(r, r);
  std::string token;
  for (long long i = 0; i < r; ++i) {
    for (long long j = 0; j < r; ++j) {
      if (!(in >> token)) {
        throw std::invalid_argument("matrix file: expected " + std::to_string(r * r) +
                                    " entries");
      }
      out.dense(i, j) = parse_complex(token);
    }
  }
  if (in >> token) throw std::invalid_argument("matrix file: trailing data '" + token + "'");
  return out;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_matrix(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_matrix(std::ostream& out, const ScatteringMatrix& theta) {
  const CMatrix dense = theta.dense();
  out << dense.rows() << ' ' << theta.n_groups() << '\n';
  for (Eigen::Index i = 0; i < dense.rows(); ++i) {
    for (Eigen::Index j = 0; j < dense.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_complex(dense(i, j));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path,
                       const ScatteringMatrix& theta) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix(out, theta);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace bdris
