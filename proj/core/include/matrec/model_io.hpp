#pragma once

#include <filesystem>

#include "matrec/eval.hpp"

namespace matrec {

// Line-oriented text model files. Numbers are written in shortest
// round-trip form, so save -> load -> save is byte-identical.
void save_model(const AnyModel& model, const std::filesystem::path& path);
AnyModel load_model(const std::filesystem::path& path);

}  // namespace matrec
