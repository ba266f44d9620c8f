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

#include "robonet/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace robonet
{

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::RootInEdgeHead: return "RootInEdgeHead";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyRootSet: return "EmptyRootSet";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::RootRemoval: return "RootRemoval";
    case ErrorCode::TargetIsRoot: return "TargetIsRoot";
    case ErrorCode::Uncontrollable: return "Uncontrollable";
    case ErrorCode::RootQueried: return "RootQueried";
    case ErrorCode::EdgeIsCritical: return "EdgeIsCritical";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotAnOutCut: return "NotAnOutCut";
    case ErrorCode::NotCriticalAgentSet: return "NotCriticalAgentSet";
    case ErrorCode::ConditionUnmet: return "ConditionUnmet";
    case ErrorCode::ParameterOverflow: return "ParameterOverflow";
    case ErrorCode::InvalidConnectionSet: return "InvalidConnectionSet";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Budget Budget::from_env()
{
  Budget budget;
  if (const char * value = std::getenv("ROBONET_BUDGET"); value != nullptr && *value != '\0') {
    char * end = nullptr;
    const auto parsed = std::strtoull(value, &end, 10);
    if (end != nullptr && *end == '\0' && parsed > 0) {
      budget.max_candidates = parsed;
    }
  }
  return budget;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    const std::uint64_t factor = n - k + i;
    if (result > max / factor) {
      return max;
    }
    result = result * factor / i;
  }
  return result;
}

}  // namespace robonet
