/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing,
 * software distributed under the License is distributed on an
 * "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
 * KIND, either express or implied.  See the License for the
 * specific language governing permissions and limitations
 * under the License.
 */


#ifndef BURES_TOOLS_COMMANDS_HPP
#define BURES_TOOLS_COMMANDS_HPP

#include <ostream>

namespace bures::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

// Full command-line entry point; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bures::cli

#endif  // BURES_TOOLS_COMMANDS_HPP
