#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace matrec {

// Shortest decimal form that round-trips the exact double (std::to_chars).
std::string format_double(double v);

// Exact double parse; throws std::invalid_argument on trailing garbage.
double parse_double(std::string_view text);
int64_t parse_int(std::string_view text);

// Writes to <path>.tmp.<pid> in the target directory, then renames over the
// destination so readers never observe a partial file.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer);

}  // namespace matrec
