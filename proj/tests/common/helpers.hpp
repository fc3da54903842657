#pragma once

#include <filesystem>
#include <string>

namespace testing {

inline std::filesystem::path source_path(const std::string& rel) {
  return std::filesystem::path(INFLSENT_SOURCE_DIR) / rel;
}

// Fresh, empty scratch directory under the build tree.
inline std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::path(INFLSENT_TEST_TMP) / name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace testing
