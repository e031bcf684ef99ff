// ccpt/errors.hpp

// Copyright 2026  The ccpt authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CCPT_ERRORS_HPP_
#define CCPT_ERRORS_HPP_

#include <stdexcept>

namespace ccpt {

// Caller passed arguments outside an operation's domain.
struct InvalidId : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InputTooShort : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInSubspace : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnquantizedPixels : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An arithmetic self-check that must hold for valid inputs failed.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FactorizationMismatch : NumericError {
  using NumericError::NumericError;
};
struct SingularGram : NumericError {
  using NumericError::NumericError;
};
struct SingularSystem : NumericError {
  using NumericError::NumericError;
};

// Malformed, truncated or unreadable external data.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ccpt

#endif  // CCPT_ERRORS_HPP_
