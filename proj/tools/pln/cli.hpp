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

#ifndef PLN_CLI_HPP
#define PLN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pln {

inline constexpr int kExitOk = 0;
/// A definitive negative answer: not planar, identity fails, or a family
/// claim is contradicted by brute force.
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one pln invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pln

#endif  // PLN_CLI_HPP
