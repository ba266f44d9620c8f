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

#ifndef ROBONET__ERROR_HPP_
#define ROBONET__ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace robonet
{

enum class ErrorCode {
  RootInEdgeHead,
  SelfLoop,
  IndexOutOfRange,
  EmptyRootSet,
  UnknownEdge,
  RootRemoval,
  TargetIsRoot,
  Uncontrollable,
  RootQueried,
  EdgeIsCritical,
  InstanceTooLarge,
  NotAnOutCut,
  NotCriticalAgentSet,
  ConditionUnmet,
  ParameterOverflow,
  InvalidConnectionSet,
  Unsatisfiable,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & message)
  : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Upper bound on the number of candidate subsets an exhaustive search may
/// visit before it gives up with InstanceTooLarge.
struct Budget
{
  std::uint64_t max_candidates = 1'000'000;

  /// Default budget, overridden by the ROBONET_BUDGET environment variable.
  static Budget from_env();
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace robonet

#endif  // ROBONET__ERROR_HPP_
