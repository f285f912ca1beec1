// Copyright 2026 The tbtrellis Authors
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

#pragma once

#include <string>

#include "tbt/bcjr.hpp"
#include "tbt/trellis.hpp"

namespace tbt {

// Matrix file format: a header line "q r n", then r lines of n digits each
// (values in [0, q)). Lines starting with '#' and blank lines are ignored.
ParityCheckMatrix parse_matrix_file(const std::string& text);
std::string emit_matrix_file(const ParityCheckMatrix& h);

// Trellis document: JSON with keys "q", "depth", "tail_biting", "classes"
// (array per class of label digit strings) and "edges" (arrays of
// [section, from_label, symbol, to_label]). Emission is byte-deterministic
// and round-trips losslessly.
std::string emit_trellis_document(const Trellis& t);
Trellis parse_trellis_document(const std::string& text);

// DOT rendering: one rank group per class, vertex names "class:label",
// edge labels carrying the symbols. Byte-deterministic.
std::string to_dot(const Trellis& t);

}  // namespace tbt
