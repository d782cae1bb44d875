// SPDX-License-Identifier: Apache-2.0
//
// thinarray: network-level design of thinned antenna arrays
// Copyright (C) 2026 The thinarray Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef THINARRAY_TOOLS_COMMANDS_HPP
#define THINARRAY_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace thinarray::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_usage = 2;   // bad flags, unreadable/unwritable files, invalid config
    inline constexpr int exit_runtime = 3; // failure while computing

    // Runs the thinarray command line; `args` excludes the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace thinarray::cli

#endif
