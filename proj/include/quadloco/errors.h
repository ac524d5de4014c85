// Copyright 2026 The quadloco Authors
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

#ifndef QUADLOCO_ERRORS_H_
#define QUADLOCO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace quadloco {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QUADLOCO_DEFINE_ERROR(Name)  \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

// dynamics
QUADLOCO_DEFINE_ERROR(NonFiniteState);
// kinematics
QUADLOCO_DEFINE_ERROR(DegenerateRadius);
QUADLOCO_DEFINE_ERROR(SingularConfiguration);
// controllers / nn
QUADLOCO_DEFINE_ERROR(DimensionMismatch);
QUADLOCO_DEFINE_ERROR(BoundsViolation);
// rl
QUADLOCO_DEFINE_ERROR(BufferTooSmall);
QUADLOCO_DEFINE_ERROR(BufferEmpty);
// env
QUADLOCO_DEFINE_ERROR(InvalidDesiredVelocity);
// experiment
QUADLOCO_DEFINE_ERROR(NotReached);
QUADLOCO_DEFINE_ERROR(ZeroVelocity);
QUADLOCO_DEFINE_ERROR(TraceTooShort);
// config / io
QUADLOCO_DEFINE_ERROR(ConfigError);
QUADLOCO_DEFINE_ERROR(FormatError);

#undef QUADLOCO_DEFINE_ERROR

}  // namespace quadloco

#endif  // QUADLOCO_ERRORS_H_
