#pragma once

#include <filesystem>
#include <string>

namespace test_support {

inline std::string data(const std::string& name) { return std::string(RSLAB_DATA_DIR) + "/" + name; }

inline std::filesystem::path scratch() {
    std::filesystem::path dir(RSLAB_SCRATCH_DIR);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace test_support
