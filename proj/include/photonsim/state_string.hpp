// Copyright 2026 The photonsim Authors
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

#ifndef PHOTONSIM_STATE_STRING_HPP
#define PHOTONSIM_STATE_STRING_HPP

#include <string>
#include <string_view>

#include "photonsim/fock.hpp"

namespace photonsim {

// Ket notation, one entry per spatial mode:
//
//   |1,0,1,0>          unpolarized
//   |0,{P:H},0,0>      polarized, one H photon in mode 1
//   |1:V,0>            polarized, one V photon in mode 0
//   |1:H+2:V,0>        polarized, three photons in mode 0
//
// Whitespace between tokens is ignored. Any polarized entry makes the whole
// register polarized; a nonzero bare count next to polarized entries throws
// MixedRegister. Syntax errors throw ParseError with a byte offset.
FockState parse_state(std::string_view text);

// Canonical form: no spaces, polarized entries as k:H, k:V or k:H+l:V.
std::string print_state(const FockState& state);

}  // namespace photonsim

#endif  // PHOTONSIM_STATE_STRING_HPP
