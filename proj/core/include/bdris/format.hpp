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

#include <string>

namespace bdris {

/// Shortest decimal string that round-trips to the same double ('.' decimal
/// separator regardless of locale). Non-finite values print as nan/inf/-inf.
std::string format_double(double value);

}  // namespace bdris
