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

#include "output.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#ifndef BURES_VERSION
#define BURES_VERSION "0.0.0"
#endif

namespace bures::cli {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

fs::path default_output_dir() {
  const char* env = std::getenv("BURES_OUT_DIR");
  if (env && *env) return fs::path(env);
  return fs::current_path();
}

std::string version_tag() { return std::string("bures ") + BURES_VERSION; }

nlohmann::json RunManifest::to_json() const {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream ts;
  ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");

  nlohmann::json j;
  j["command"] = command;
  j["argv"] = argv;
  j["seeds"] = seeds;
  j["version"] = version_tag();
  j["timestamp"] = ts.str();
  j["outputs"] = nlohmann::json::array();
  for (const auto& p : outputs) {
    j["outputs"].push_back({{"path", p.string()}, {"sha256", sha256_file(p)}, {"bytes", fs::file_size(p)}});
  }
  return j;
}

fs::path write_manifest(const RunManifest& manifest, const fs::path& dir) {
  fs::path target;
  if (!manifest.outputs.empty()) {
    target = manifest.outputs.front();
    target += ".manifest.json";
  } else {
    target = dir / "manifest.json";
  }
  write_file_atomic(target, manifest.to_json().dump(2) + "\n");
  return target;
}

}  // namespace bures::cli
