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


#ifndef BURES_TOOLS_OUTPUT_HPP
#define BURES_TOOLS_OUTPUT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace bures::cli {

// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::filesystem::path& path);

// $BURES_OUT_DIR when set and nonempty, else the current directory.
std::filesystem::path default_output_dir();

struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::vector<std::uint64_t> seeds;
  std::vector<std::filesystem::path> outputs;

  // Digests are computed from the files as they are on disk.
  nlohmann::json to_json() const;
};

// Writes <first output>.manifest.json (or manifest.json in `dir` when there
// are no outputs) and returns its path.
std::filesystem::path write_manifest(const RunManifest& manifest, const std::filesystem::path& dir);

std::string version_tag();

}  // namespace bures::cli

#endif  // BURES_TOOLS_OUTPUT_HPP
