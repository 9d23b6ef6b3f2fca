#pragma once

#include <cstdint>
#include <string>

namespace wegner {

// shortest round-trip decimal form, stable across runs
std::string fmt(double v);
std::string fmt(std::int64_t v);
std::string fmt(int v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
bool files_identical(const std::string& a, const std::string& b);

}  // namespace wegner
