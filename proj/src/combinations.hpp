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

#ifndef ROBONET__COMBINATIONS_HPP_
#define ROBONET__COMBINATIONS_HPP_

#include <cstddef>
#include <numeric>
#include <vector>

namespace robonet::detail
{

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic
/// order until visit returns false. Returns false if stopped early.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit && visit)
{
  if (k > n) {
    return true;
  }
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t> &>(idx))) {
      return false;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) {
      --i;
    }
    if (i == 0) {
      return true;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
}

template <typename T>
std::vector<T> pick(const std::vector<T> & items, const std::vector<std::size_t> & idx)
{
  std::vector<T> out;
  out.reserve(idx.size());
  for (const auto i : idx) {
    out.push_back(items[i]);
  }
  return out;
}

}  // namespace robonet::detail

#endif  // ROBONET__COMBINATIONS_HPP_
