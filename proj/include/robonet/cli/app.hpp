// Copyright 2026 The Robonet Authors
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


#ifndef ROBONET__CLI__APP_HPP_
#define ROBONET__CLI__APP_HPP_

#include <ostream>

namespace robonet::cli
{

enum ExitCode : int { success = 0, input_error = 2, budget_exhausted = 3, oracle_mismatch = 4 };

/// Entry point for the `robonet` command: generate, analyze, verify and
/// export-region. Returns one of ExitCode.
int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

}  // namespace robonet::cli

#endif  // ROBONET__CLI__APP_HPP_
