// ccpt/ccpt.hpp

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

// Umbrella header: everything except the CLI front end (which pulls in the
// argument parser; include ccpt/cli.hpp explicitly for that).

#ifndef CCPT_CCPT_HPP_
#define CCPT_CCPT_HPP_

#include "ccpt/correlation.hpp"
#include "ccpt/derivative.hpp"
#include "ccpt/errors.hpp"
#include "ccpt/imageio.hpp"
#include "ccpt/linalg.hpp"
#include "ccpt/numtheory.hpp"
#include "ccpt/sequence.hpp"
#include "ccpt/subspace.hpp"

#endif  // CCPT_CCPT_HPP_
