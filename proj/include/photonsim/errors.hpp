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

#ifndef PHOTONSIM_ERRORS_HPP
#define PHOTONSIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace photonsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PHOTONSIM_DEFINE_ERROR(Name)     \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

PHOTONSIM_DEFINE_ERROR(InvalidOccupation)
PHOTONSIM_DEFINE_ERROR(RegisterMismatch)
PHOTONSIM_DEFINE_ERROR(NotUnitary)
PHOTONSIM_DEFINE_ERROR(InvalidSpec)
PHOTONSIM_DEFINE_ERROR(OutOfRange)
PHOTONSIM_DEFINE_ERROR(PolarizationMismatch)
PHOTONSIM_DEFINE_ERROR(TooLarge)
PHOTONSIM_DEFINE_ERROR(MixedSector)
PHOTONSIM_DEFINE_ERROR(EvalError)
PHOTONSIM_DEFINE_ERROR(InvalidGate)
PHOTONSIM_DEFINE_ERROR(MixedRegister)

#undef PHOTONSIM_DEFINE_ERROR

// Syntax error in a state string or post-selection expression. offset() is the
// byte position of the first character that could not be consumed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace photonsim

#endif  // PHOTONSIM_ERRORS_HPP
