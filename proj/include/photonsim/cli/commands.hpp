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

#ifndef PHOTONSIM_CLI_COMMANDS_HPP
#define PHOTONSIM_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "photonsim/linalg.hpp"

namespace photonsim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;  // bad arguments, files, state strings, predicates
inline constexpr int kExitEval = 3;   // failures while evaluating a valid request

inline constexpr const char* kPermanentCapEnv = "PHOTONSIM_PERMANENT_CAP";

struct UnitaryArgs {
  std::string circuit;
  bool json = false;
};

struct SimulateArgs {
  std::string circuit;
  std::optional<std::string> input;
  std::optional<std::string> postselect;
  std::optional<int> qubits;
  int min_photons = 0;
  bool renormalize = false;
  bool json = false;
  int permanent_cap = 16;
};

struct SampleArgs {
  SimulateArgs sim;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
};

struct GroverArgs {
  std::string target = "11";
  std::string variant = "per-mode";
  std::string encoding = "polarization";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  bool json = false;
};

// "a+bj" with 12 significant digits; parts below 1e-13 print as 0.
std::string format_complex(Complex z);
std::string format_real(double x);

// Each returns a process exit code; errors go to err as one line.
int cmd_unitary(const UnitaryArgs& args, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_sample(const SampleArgs& args, std::ostream& out, std::ostream& err);
int cmd_grover(const GroverArgs& args, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to a subcommand.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace photonsim

#endif  // PHOTONSIM_CLI_COMMANDS_HPP
