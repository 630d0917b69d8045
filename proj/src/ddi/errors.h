// Copyright 2026 The ddi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef DDI_ERRORS_H
#define DDI_ERRORS_H

#include <stdexcept>
#include <string>

namespace ddi {

/// Raised when a caller breaks an operation's precondition (bad shapes,
/// asymmetric input to a symmetric solver, non-orthogonal gauge, ...).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised for geometrically degenerate input, e.g. collinear points handed
/// to the enclosing-triangle solver.
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ddi

#endif
