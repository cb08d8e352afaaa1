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

#ifndef PHOTONSIM_POSTSELECT_HPP
#define PHOTONSIM_POSTSELECT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photonsim/circuit.hpp"
#include "photonsim/fock.hpp"
#include "photonsim/simulate.hpp"

namespace photonsim {

enum class Comparator { Eq, Lt, Gt, Le, Ge };

// Photon count summed over a set of spatial modes, compared to a constant.
struct Clause {
  std::vector<int> modes;
  Comparator op = Comparator::Eq;
  int value = 0;

  bool operator==(const Clause&) const = default;
};

// Conjunction of clauses. Text form:
//
//   expr   := clause ('&' clause)*
//   clause := '[' int (',' int)* ']' op int
//   op     := '==' | '<' | '>' | '<=' | '>='
//
// Whitespace between tokens is ignored.
struct PostSelect {
  std::vector<Clause> clauses;

  bool operator==(const PostSelect&) const = default;
};

PostSelect parse_postselect(std::string_view text);

// Canonical text, e.g. "[0,1]==1 & [4]==0".
std::string to_string(const PostSelect& p);

// Conjunction of two predicates.
PostSelect operator&(PostSelect a, const PostSelect& b);

// Throws EvalError when a clause names a mode outside the state's register.
bool evaluate(const PostSelect& p, const FockState& state);

// Circuit plus input plus detection conditions.
struct Processor {
  Processor(Circuit circuit, StateVector input, std::optional<PostSelect> postselect = std::nullopt,
            int min_detected_photons = 0);

  Circuit circuit;
  StateVector input;
  std::optional<PostSelect> postselect;
  int min_detected_photons = 0;
};

struct RunResult {
  // Output amplitudes of the kept outcomes, not renormalized.
  StateVector kept;
  // Probabilities of kept outcomes divided by success_probability.
  Distribution conditioned;
  double success_probability = 0.0;

  // Kept amplitudes scaled to unit norm; the zero vector if nothing is kept.
  StateVector conditioned_state() const;
};

// Only outcomes that satisfy the predicate are enumerated: occupations are
// assigned mode by mode and a branch is dropped as soon as a clause can no
// longer be met.
RunResult run(const Processor& processor, const SimulationOptions& options = {});

// Visits the states of the sector that satisfy the predicate and hold at least
// min_photons photons, in lexicographic order.
void for_each_selected_state(int channels, bool polarized, int photons,
                             const std::optional<PostSelect>& predicate, int min_photons,
                             const std::function<void(const FockState&)>& visit);

}  // namespace photonsim

#endif  // PHOTONSIM_POSTSELECT_HPP
