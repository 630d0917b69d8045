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


#ifndef DDI_CLI_H
#define DDI_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace ddi::cli {

enum ExitCode : int {
    kOk = 0,
    kMalformedInput = 2,
    kRowSumViolation = 3,
    kSolverFailure = 4,
    kInversionFailure = 5,
};

/// Runs the `ddi` command line. `args[0]` is the program name. A path of
/// "-" reads from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace ddi::cli

#endif
