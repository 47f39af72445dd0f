// Copyright 2026 The planar-pentanomials Authors.
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

#include "planar/parallel.hpp"

#include <string>
#include <thread>

#include "planar/error.hpp"

namespace planar {

unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void check_scale(const SweepOptions& options, std::uint64_t points) {
  if (options.max_points != 0 && points > options.max_points) {
    throw Error(ErrorCode::kScaleExceeded,
                "sweep over " + std::to_string(points) +
                    " points exceeds the bound " +
                    std::to_string(options.max_points));
  }
}

}  // namespace planar
